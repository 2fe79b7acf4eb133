#pragma once

// Exhaustive and random graph/colouring generators for oracle comparisons.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour::testing {

using EdgeMask = std::uint64_t;

inline std::size_t pair_index(std::size_t n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  // row-major over the strict upper triangle
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline Graph graph_from_mask(std::size_t n, EdgeMask mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (mask >> pair_index(n, i, j) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// Least edge mask over all relabellings that list vertices by non-increasing
// degree. Any isomorphism preserves degrees, so this is a canonical form.
inline EdgeMask canonical_mask(std::size_t n, EdgeMask mask) {
  std::vector<int> deg(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (mask >> pair_index(n, i, j) & 1) ++deg[i], ++deg[j];
    }
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  // groups of equal degree are permuted independently
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : groups) std::sort(order.begin() + b, order.begin() + e);

  EdgeMask best = ~EdgeMask{0};
  std::vector<Vertex> pos(n);
  while (true) {
    for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
    EdgeMask m = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (mask >> pair_index(n, i, j) & 1) {
          m |= EdgeMask{1} << pair_index(n, pos[i], pos[j]);
        }
      }
    }
    best = std::min(best, m);
    // odometer over the per-group permutations
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [b, e] = groups[gi];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (gi == groups.size()) break;
  }
  return best;
}

inline bool connected(const Graph& g) {
  return g.num_vertices() <= 1 || components(g).size() == 1;
}

// One representative per isomorphism class of graphs on n vertices, built
// by adding a vertex with every possible neighbourhood to the classes on
// n - 1 vertices.
inline std::vector<EdgeMask> graph_classes(std::size_t n) {
  if (n <= 1) return {0};
  const auto smaller = graph_classes(n - 1);
  std::set<EdgeMask> seen;
  for (EdgeMask base : smaller) {
    EdgeMask lifted = 0;
    for (Vertex i = 0; i + 1 < n; ++i) {
      for (Vertex j = i + 1; j + 1 < n; ++j) {
        if (base >> pair_index(n - 1, i, j) & 1) {
          lifted |= EdgeMask{1} << pair_index(n, i, j);
        }
      }
    }
    for (EdgeMask nb = 0; nb < (EdgeMask{1} << (n - 1)); ++nb) {
      EdgeMask m = lifted;
      for (Vertex i = 0; i + 1 < n; ++i) {
        if (nb >> i & 1) m |= EdgeMask{1} << pair_index(n, i, n - 1);
      }
      seen.insert(canonical_mask(n, m));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Graph> all_graphs(std::size_t n, bool connected_only) {
  std::vector<Graph> out;
  for (EdgeMask m : graph_classes(n)) {
    Graph g = graph_from_mask(n, m);
    if (!connected_only || connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Colouring> all_proper_colourings(const Graph& g, int k) {
  const std::size_t n = g.num_vertices();
  std::vector<Colouring> out;
  Colouring c(std::vector<Colour>(n, 1), k);
  // depth-first assignment in vertex order
  std::vector<Colour> cur(n, 0);
  std::size_t v = 0;
  while (true) {
    if (v == n) {
      out.emplace_back(cur, k);
      if (n == 0) break;
      --v;
    }
    bool advanced = false;
    while (cur[v] < k) {
      ++cur[v];
      bool ok = true;
      for (Vertex w : g.neighbours(v)) {
        if (w < v && cur[w] == cur[v]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++v;
      continue;
    }
    cur[v] = 0;
    if (v == 0) break;
    --v;
  }
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// Uniform over proper colourings would need counting; a randomised
// backtracking search is enough for test inputs.
inline std::optional<Colouring> random_proper_colouring(const Graph& g, int k,
                                                        std::mt19937_64& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Colour>> choices(n);
  std::vector<std::size_t> next(n, 0);
  std::vector<Colour> cur(n, 0);
  std::vector<Colour> palette(k);
  std::iota(palette.begin(), palette.end(), 1);
  std::size_t v = 0;
  std::size_t budget = 100000;
  while (v < n) {
    if (budget-- == 0) return std::nullopt;
    if (next[v] == 0 && choices[v].empty()) {
      choices[v] = palette;
      std::shuffle(choices[v].begin(), choices[v].end(), rng);
    }
    bool placed = false;
    while (next[v] < choices[v].size()) {
      const Colour c = choices[v][next[v]++];
      bool ok = true;
      for (Vertex w : g.neighbours(v)) {
        if (w < v && cur[w] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur[v] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      continue;
    }
    choices[v].clear();
    next[v] = 0;
    cur[v] = 0;
    if (v == 0) return std::nullopt;
    --v;
  }
  return Colouring(cur, k);
}

// Apply up to `steps` random proper single-vertex recolourings.
inline Colouring random_walk(const Graph& g, Colouring c, std::size_t steps,
                             std::mt19937_64& rng) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return c;
  std::uniform_int_distribution<Vertex> pick_v(0, n - 1);
  std::uniform_int_distribution<Colour> pick_c(1, c.k);
  for (std::size_t i = 0; i < steps; ++i) {
    const Vertex v = pick_v(rng);
    const Colour col = pick_c(rng);
    if (col == c[v]) continue;
    bool ok = true;
    for (Vertex w : g.neighbours(v)) {
      if (c[w] == col) {
        ok = false;
        break;
      }
    }
    if (ok) c[v] = col;
  }
  return c;
}

// Simple cycles, each listed once: starts at its smallest vertex and the
// second vertex is smaller than the last.
inline std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    for (Vertex w : g.neighbours(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
      } else if (w > start && !on[w]) {
        on[w] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(dfs, s, s);
    on[s] = 0;
  }
  return out;
}

}  // namespace recolour::testing
