#pragma once

// Brute-force breadth-first search over the reconfiguration graph. Intended
// as ground truth for small instances only.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

struct StateSpaceLimits {
  std::size_t max_states = 10'000'000;
  std::optional<std::size_t> max_depth;
};

struct OracleResult {
  std::optional<std::size_t> distance;
  std::optional<RecolouringSequence> witness;
  // True iff the whole component of alpha was enumerated.
  bool exhausted = false;
  std::size_t states_visited = 0;
};

// The explored part of alpha's component, in BFS order. Index 0 is alpha.
struct ExploredSpace {
  int k = 0;
  std::vector<std::string> states;
  std::vector<std::size_t> parent;
  std::vector<Step> via;
  std::vector<std::size_t> depth;
  bool exhausted = false;
  bool capped = false;
  std::optional<std::size_t> target;

  Colouring colouring(std::size_t i) const {
    Colouring c;
    c.k = k;
    c.colours.assign(states[i].begin(), states[i].end());
    return c;
  }

  // Steps from alpha to state i along the BFS tree.
  RecolouringSequence path_to(std::size_t i) const {
    RecolouringSequence seq;
    while (i != 0) {
      seq.push_back(via[i]);
      i = parent[i];
    }
    return {seq.rbegin(), seq.rend()};
  }
};

namespace detail {

inline std::string encode(const Colouring& c) {
  std::string s(c.size(), '\0');
  for (std::size_t v = 0; v < c.size(); ++v) s[v] = static_cast<char>(c[v]);
  return s;
}

}  // namespace detail

// BFS from alpha; stops early when `target` is reached.
inline ExploredSpace explore(const Graph& g, int k, const Colouring& alpha,
                             const StateSpaceLimits& limits,
                             const Colouring* target = nullptr) {
  if (limits.max_states < 1) throw RecolourError("max_states must be >= 1");
  ExploredSpace sp;
  sp.k = k;
  std::unordered_map<std::string, std::size_t> index;
  const std::string goal = target ? detail::encode(*target) : std::string();

  sp.states.push_back(detail::encode(alpha));
  sp.parent.push_back(0);
  sp.via.push_back({0, 0});
  sp.depth.push_back(0);
  index.emplace(sp.states[0], 0);
  if (target && sp.states[0] == goal) {
    sp.target = 0;
    return sp;
  }

  const std::size_t n = g.num_vertices();
  bool depth_cut = false;
  for (std::size_t head = 0; head < sp.states.size(); ++head) {
    if (limits.max_depth && sp.depth[head] >= *limits.max_depth) {
      depth_cut = true;
      continue;
    }
    const std::string cur = sp.states[head];
    for (Vertex v = 0; v < n; ++v) {
      for (Colour c = 1; c <= k; ++c) {
        if (c == cur[v]) continue;
        bool ok = true;
        for (Vertex w : g.neighbours(v)) {
          if (cur[w] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::string next = cur;
        next[v] = static_cast<char>(c);
        if (index.count(next)) continue;
        if (sp.states.size() >= limits.max_states) {
          sp.capped = true;
          return sp;
        }
        const std::size_t id = sp.states.size();
        index.emplace(next, id);
        sp.states.push_back(std::move(next));
        sp.parent.push_back(head);
        sp.via.push_back({v, c});
        sp.depth.push_back(sp.depth[head] + 1);
        if (target && sp.states[id] == goal) {
          sp.target = id;
          return sp;
        }
      }
    }
  }
  sp.exhausted = !depth_cut;
  return sp;
}

inline OracleResult oracle_distance(const ReconfigInstance& inst,
                                    const StateSpaceLimits& limits = {}) {
  ExploredSpace sp =
      explore(inst.graph, inst.k, inst.alpha, limits, &inst.beta);
  OracleResult r;
  r.states_visited = sp.states.size();
  r.exhausted = sp.exhausted;
  if (sp.target) {
    r.distance = sp.depth[*sp.target];
    r.witness = sp.path_to(*sp.target);
  }
  return r;
}

inline std::vector<Colouring> oracle_component(const ReconfigInstance& inst,
                                               const StateSpaceLimits& limits = {}) {
  ExploredSpace sp = explore(inst.graph, inst.k, inst.alpha, limits);
  if (!sp.exhausted) {
    throw RecolourError("state space limit reached before the component was "
                        "fully enumerated");
  }
  std::vector<Colouring> out;
  out.reserve(sp.states.size());
  for (std::size_t i = 0; i < sp.states.size(); ++i) {
    out.push_back(sp.colouring(i));
  }
  return out;
}

// Vertices whose colour is the same in every colouring reachable from c.
inline std::vector<Vertex> oracle_fixed_vertices(const Graph& g,
                                                 const Colouring& c,
                                                 const StateSpaceLimits& limits = {}) {
  ExploredSpace sp = explore(g, c.k, c, limits);
  if (!sp.exhausted) {
    throw RecolourError("state space limit reached before the component was "
                        "fully enumerated");
  }
  std::vector<char> moved(g.num_vertices(), 0);
  for (const auto& s : sp.states) {
    for (Vertex v = 0; v < s.size(); ++v) {
      if (s[v] != sp.states[0][v]) moved[v] = 1;
    }
  }
  std::vector<Vertex> fixed;
  for (Vertex v = 0; v < moved.size(); ++v) {
    if (!moved[v]) fixed.push_back(v);
  }
  return fixed;
}

}  // namespace recolour
