#pragma once

#include "recolour/graph.hpp"
#include "recolour/oracle.hpp"
#include "recolour/solver3.hpp"
#include "recolour/fpt.hpp"
#include "recolour/hardness.hpp"
#include "recolour/io.hpp"
