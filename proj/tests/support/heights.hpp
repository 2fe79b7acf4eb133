#pragma once

// Height bookkeeping recomputed from first principles: explicit tree paths,
// walk weights and a step-by-step replay. Used to cross-check solver3.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

#include "recolour/graph.hpp"
#include "recolour/solver3.hpp"

namespace recolour::testing {

// Vertices from the tree root down to v.
inline std::vector<Vertex> root_path(const SpanningTree& t, Vertex v) {
  std::vector<Vertex> p{v};
  while (v != t.root) {
    v = t.parent[v];
    p.push_back(v);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

// h(c, v) relative to alpha on tree t: weight of the root path under c minus
// its weight under alpha.
inline Height path_height(const Graph& g, const SpanningTree& t,
                          const Colouring& alpha, const Colouring& c, Vertex v) {
  const auto p = root_path(t, v);
  return walk_weight(g, c, p) - walk_weight(g, alpha, p);
}

inline std::vector<Height> path_heights(const Graph& g, const SpanningTree& t,
                                        const Colouring& alpha,
                                        const Colouring& c) {
  std::vector<Height> h(g.num_vertices(), 0);
  for (Vertex v : t.order) h[v] = path_height(g, t, alpha, c, v);
  return h;
}

inline int mod(Height a, int m) { return static_cast<int>(((a % m) + m) % m); }

// +2 when the colour moves one step down the cycle 1 -> 3 -> 2 -> 1, -2 when
// it moves up.
inline int height_delta(Colour from, Colour to) {
  return mod(to - from, 3) == 2 ? 2 : -2;
}

// Absolute heights of every colouring along seq, with base vertex t.root and
// H(alpha, .) = 0. Only vertices of t's component are meaningful.
struct HeightReplay {
  std::vector<Colouring> colourings;
  std::vector<std::vector<Height>> H;
};

inline HeightReplay replay_heights(const Graph& g, const SpanningTree& t,
                                   const Colouring& alpha,
                                   const RecolouringSequence& seq) {
  HeightReplay out;
  Colouring cur = alpha;
  Height base = 0;
  out.colourings.push_back(cur);
  out.H.push_back(std::vector<Height>(g.num_vertices(), 0));
  for (const Step& s : seq) {
    if (s.vertex == t.root) base += height_delta(cur[s.vertex], s.colour);
    cur[s.vertex] = s.colour;
    std::vector<Height> H(g.num_vertices(), 0);
    for (Vertex v : t.order) H[v] = base + path_height(g, t, alpha, cur, v);
    out.colourings.push_back(cur);
    out.H.push_back(std::move(H));
  }
  return out;
}

// J(k) = sum |k + hs[v]| and its minimum over k = cls (mod 6) in [-lim, lim].
inline std::uint64_t total_height(const std::vector<Height>& hs,
                                  const std::vector<Vertex>& comp, Height k) {
  std::uint64_t s = 0;
  for (Vertex v : comp) s += static_cast<std::uint64_t>(std::llabs(k + hs[v]));
  return s;
}

inline std::uint64_t brute_min_total_height(const std::vector<Height>& hs,
                                            const std::vector<Vertex>& comp,
                                            int cls, Height lim) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (Height k = -lim; k <= lim; ++k) {
    if (mod(k, 6) == cls) best = std::min(best, total_height(hs, comp, k));
  }
  return best;
}

}  // namespace recolour::testing
