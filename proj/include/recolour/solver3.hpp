#pragma once

// Exact shortest recolouring distance and an optimal witness for k = 3, plus
// the trivial palettes k = 1 and k = 2.
//
// Heights: colours are read cyclically, so an oriented edge u->v weighs +1 if
// c(v) = c(u) + 1 (mod 3) and -1 otherwise. The relative height of v is the
// weight of the tree path root->v under c minus its weight under alpha. Two
// colourings are in the same component iff their fixed vertices coincide
// colourwise and the relative heights are consistent on every edge; the
// distance is then half the minimum total displacement sum_v |k + h(v)| over
// the admissible offsets k, taken around a median (or fixed) focal vertex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

using Height = std::int64_t;

// Weight of the oriented edge u->v: the value in {-1, +1} congruent to
// c(v) - c(u) mod 3.
inline int edge_weight(const Colouring& c, Vertex u, Vertex v) {
  const int d = ((c[v] - c[u]) % 3 + 3) % 3;
  if (d == 0) {
    throw RecolourError("edge weight undefined: vertices " + std::to_string(u) +
                        " and " + std::to_string(v) + " share a colour mod 3");
  }
  return d == 1 ? 1 : -1;
}

inline Height walk_weight(const Graph& g, const Colouring& c,
                          std::span<const Vertex> walk) {
  Height total = 0;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!g.adjacent(walk[i - 1], walk[i])) {
      throw RecolourError("walk steps between non-adjacent vertices " +
                          std::to_string(walk[i - 1]) + " and " +
                          std::to_string(walk[i]));
    }
    total += edge_weight(c, walk[i - 1], walk[i]);
  }
  return total;
}

// F_{G,c} and its colour classes by_colour[i-1] = F^i.
struct FixedSet {
  std::vector<Vertex> fixed;
  std::array<std::vector<Vertex>, 3> by_colour;
  std::vector<char> mask;

  bool contains(Vertex v) const { return mask[v] != 0; }
};

// Peel vertices that are missing a neighbour of some other colour among the
// surviving set; the survivors are exactly the fixed vertices.
inline FixedSet fixed_vertices(const Graph& g, const Colouring& c) {
  if (c.k != 3) throw RecolourError("fixed vertices are defined for k = 3");
  const std::size_t n = g.num_vertices();
  std::vector<std::array<int, 3>> count(n, {0, 0, 0});
  for (Vertex v = 0; v < n; ++v) {
    count[v][c[v] - 1] = -1;
    for (Vertex w : g.neighbours(v)) {
      if (c[w] != c[v]) ++count[v][c[w] - 1];
    }
  }
  std::vector<char> alive(n, 1), queued(n, 0);
  std::vector<Vertex> waiting;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(count[v].begin(), count[v].end(), 0) != count[v].end()) {
      queued[v] = 1;
      waiting.push_back(v);
    }
  }
  while (!waiting.empty()) {
    Vertex v = waiting.back();
    waiting.pop_back();
    alive[v] = 0;
    const int i = c[v] - 1;
    for (Vertex w : g.neighbours(v)) {
      if (!alive[w] || count[w][i] < 0) continue;
      if (--count[w][i] == 0 && !queued[w]) {
        queued[w] = 1;
        waiting.push_back(w);
      }
    }
  }
  FixedSet fs;
  fs.mask = alive;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      fs.fixed.push_back(v);
      fs.by_colour[c[v] - 1].push_back(v);
    }
  }
  return fs;
}

struct HeightProfile {
  SpanningTree tree;
  Vertex base = 0;
  std::vector<Height> h;

  Height at(Vertex v) const {
    if (!tree.contains(v)) {
      throw RecolourError("vertex " + std::to_string(v) +
                          " is outside the tree's component");
    }
    return h[v];
  }
};

namespace detail {

// h[v] = h[parent] + w(c, parent->v) - w(alpha, parent->v) along `order`.
inline void fill_heights(std::span<const Vertex> order,
                         const std::vector<Vertex>& parent,
                         const Colouring& alpha, const Colouring& c,
                         std::vector<Height>& h) {
  h[order.front()] = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    const Vertex p = parent[v];
    h[v] = h[p] + edge_weight(c, p, v) - edge_weight(alpha, p, v);
  }
}

// BFS forest: one tree per component rooted at its smallest vertex, with
// components laid out consecutively in `order`.
struct Forest {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;
  std::vector<std::size_t> begin;  // component i is order[begin[i], begin[i+1])

  std::size_t size() const { return begin.size() - 1; }
  std::span<const Vertex> component(std::size_t i) const {
    return std::span<const Vertex>(order).subspan(begin[i],
                                                  begin[i + 1] - begin[i]);
  }
};

inline Forest bfs_forest(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Forest f;
  f.parent.assign(n, kNoParent);
  f.order.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (f.parent[s] != kNoParent) continue;
    f.begin.push_back(f.order.size());
    f.parent[s] = s;
    f.order.push_back(s);
    for (std::size_t head = f.begin.back(); head < f.order.size(); ++head) {
      const Vertex u = f.order[head];
      for (Vertex v : g.neighbours(u)) {
        if (f.parent[v] == kNoParent) {
          f.parent[v] = u;
          f.order.push_back(v);
        }
      }
    }
  }
  f.begin.push_back(f.order.size());
  return f;
}

}  // namespace detail

inline HeightProfile relative_heights(const Graph& g, const SpanningTree& tree,
                                      const Colouring& alpha,
                                      const Colouring& c) {
  if (tree.parent.size() != g.num_vertices() || tree.order.empty()) {
    throw RecolourError("spanning tree does not belong to this graph");
  }
  HeightProfile p;
  p.tree = tree;
  p.base = tree.root;
  p.h.assign(g.num_vertices(), 0);
  detail::fill_heights(tree.order, tree.parent, alpha, c, p.h);
  return p;
}

struct ConditionReport {
  bool a1_holds = true;
  bool a2_holds = true;
  std::optional<Vertex> failing_vertex;
  std::optional<std::pair<Vertex, Vertex>> failing_edge;

  bool holds() const { return a1_holds && a2_holds; }
};

namespace detail {

// Colourwise equality of the fixed sets, and the height identity on every
// edge of the component.
inline ConditionReport component_conditions(const Graph& g,
                                            std::span<const Vertex> comp,
                                            const Colouring& alpha,
                                            const Colouring& beta,
                                            const FixedSet& fa,
                                            const FixedSet& fb,
                                            const std::vector<Height>& h) {
  ConditionReport r;
  for (Vertex v : comp) {
    const bool bad = fa.contains(v) != fb.contains(v) ||
                     (fa.contains(v) && alpha[v] != beta[v]);
    if (bad) {
      r.a1_holds = false;
      r.failing_vertex = v;
      break;
    }
  }
  for (Vertex v : comp) {
    for (Vertex w : g.neighbours(v)) {
      if (w < v) continue;
      if (h[v] - h[w] + edge_weight(beta, v, w) != edge_weight(alpha, v, w)) {
        r.a2_holds = false;
        r.failing_edge = std::make_pair(v, w);
        return r;
      }
    }
  }
  return r;
}

// Smallest fixed vertex if any; otherwise the lower median of the heights,
// ties by vertex index.
inline Vertex choose_focal(std::span<const Vertex> comp,
                           const std::vector<Height>& h, const FixedSet& fb) {
  std::optional<Vertex> best_fixed;
  for (Vertex v : comp) {
    if (fb.contains(v) && (!best_fixed || v < *best_fixed)) best_fixed = v;
  }
  if (best_fixed) return *best_fixed;
  std::vector<std::pair<Height, Vertex>> keyed;
  keyed.reserve(comp.size());
  for (Vertex v : comp) keyed.emplace_back(h[v], v);
  const auto mid = keyed.begin() + static_cast<std::ptrdiff_t>((keyed.size() - 1) / 2);
  std::nth_element(keyed.begin(), mid, keyed.end());
  return mid->second;
}

inline int mod6(std::int64_t x) { return static_cast<int>(((x % 6) + 6) % 6); }

struct Offset {
  Height k1 = 0;
  Height k2 = 0;
  Height chosen = 0;
  std::uint64_t j_min = 0;  // min{J(k1), J(k2)}
};

// hs[v] = h_{alpha,u*}(beta, v); offsets from the class 2(alpha(u*) - beta(u*))
// mod 6, or the forced offset 0 when u* is fixed.
inline Offset best_offset(std::span<const Vertex> comp,
                          const std::vector<Height>& hs, Colour alpha_focal,
                          Colour beta_focal, bool focal_fixed) {
  Offset o;
  if (!focal_fixed) {
    const int r = mod6(2 * static_cast<std::int64_t>(alpha_focal - beta_focal));
    o.k1 = r;
    o.k2 = r == 0 ? 0 : r - 6;
  }
  auto J = [&](Height k) {
    std::uint64_t s = 0;
    for (Vertex v : comp) {
      const Height x = k + hs[v];
      s += static_cast<std::uint64_t>(x < 0 ? -x : x);
    }
    return s;
  };
  const std::uint64_t j1 = J(o.k1);
  const std::uint64_t j2 = o.k2 == o.k1 ? j1 : J(o.k2);
  o.chosen = j2 < j1 ? o.k2 : o.k1;
  o.j_min = std::min(j1, j2);
  return o;
}

struct ComponentPlan {
  ConditionReport conditions;
  Vertex focal = 0;
  bool focal_fixed = false;
  Offset offset;
};

// Everything distance and witness need for one component, given heights h
// relative to the component's first vertex. On return h holds heights
// relative to the focal vertex when the conditions hold.
inline ComponentPlan plan_component(const Graph& g, std::span<const Vertex> comp,
                                    const Colouring& alpha,
                                    const Colouring& beta, const FixedSet& fa,
                                    const FixedSet& fb, std::vector<Height>& h) {
  ComponentPlan plan;
  plan.conditions = component_conditions(g, comp, alpha, beta, fa, fb, h);
  if (!plan.conditions.holds()) return plan;
  plan.focal = choose_focal(comp, h, fb);
  plan.focal_fixed = fb.contains(plan.focal);
  const Height shift = h[plan.focal];
  for (Vertex v : comp) h[v] -= shift;
  plan.offset = best_offset(comp, h, alpha[plan.focal], beta[plan.focal],
                            plan.focal_fixed);
  return plan;
}

inline void require_three_colourings(const Graph& g, const Colouring& alpha,
                                     const Colouring& beta) {
  if (alpha.k != 3 || beta.k != 3) {
    throw RecolourError("the exact solver requires k = 3");
  }
  if (alpha.size() != g.num_vertices() || beta.size() != g.num_vertices()) {
    throw RecolourError("colouring size does not match vertex count");
  }
  if (!is_proper(g, alpha)) throw RecolourError("alpha is not proper");
  if (!is_proper(g, beta)) throw RecolourError("beta is not proper");
}

// Tree over a single component rooted at its smallest vertex.
inline SpanningTree component_tree(const Graph& g,
                                   const std::vector<Vertex>& component) {
  if (component.empty()) throw RecolourError("empty component");
  const Vertex root = *std::min_element(component.begin(), component.end());
  SpanningTree t = bfs_spanning_tree(g, root);
  if (t.order.size() != component.size()) {
    throw RecolourError("vertex set is not a connected component");
  }
  return t;
}

}  // namespace detail

// Both necessary conditions on every component; the first failure is kept.
inline ConditionReport check_necessary_conditions(const Graph& g,
                                                  const Colouring& alpha,
                                                  const Colouring& beta) {
  detail::require_three_colourings(g, alpha, beta);
  const FixedSet fa = fixed_vertices(g, alpha);
  const FixedSet fb = fixed_vertices(g, beta);
  const detail::Forest f = detail::bfs_forest(g);
  std::vector<Height> h(g.num_vertices(), 0);
  ConditionReport total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto comp = f.component(i);
    detail::fill_heights(comp, f.parent, alpha, beta, h);
    ConditionReport r =
        detail::component_conditions(g, comp, alpha, beta, fa, fb, h);
    if (!r.a1_holds && total.a1_holds) {
      total.a1_holds = false;
      total.failing_vertex = r.failing_vertex;
    }
    if (!r.a2_holds && total.a2_holds) {
      total.a2_holds = false;
      total.failing_edge = r.failing_edge;
    }
  }
  return total;
}

inline Vertex focal_vertex(const Graph& g, const Colouring& alpha,
                           const Colouring& beta,
                           const std::vector<Vertex>& component) {
  detail::require_three_colourings(g, alpha, beta);
  const SpanningTree t = detail::component_tree(g, component);
  std::vector<Height> h(g.num_vertices(), 0);
  detail::fill_heights(t.order, t.parent, alpha, beta, h);
  return detail::choose_focal(t.order, h, fixed_vertices(g, beta));
}

inline std::uint64_t min_total_height(const Graph& g, const Colouring& alpha,
                                      const Colouring& beta,
                                      const std::vector<Vertex>& component) {
  detail::require_three_colourings(g, alpha, beta);
  const SpanningTree t = detail::component_tree(g, component);
  std::vector<Height> h(g.num_vertices(), 0);
  detail::fill_heights(t.order, t.parent, alpha, beta, h);
  const auto plan =
      detail::plan_component(g, t.order, alpha, beta, fixed_vertices(g, alpha),
                             fixed_vertices(g, beta), h);
  if (!plan.conditions.holds()) {
    throw RecolourError("alpha and beta are in different components");
  }
  return plan.offset.j_min / 2;
}

struct ComponentDistance {
  Vertex root = 0;  // smallest vertex of the component
  std::size_t size = 0;
  bool a1_holds = true;
  bool a2_holds = true;
  std::optional<Vertex> focal;
  bool focal_fixed = false;
  std::optional<std::uint64_t> distance;
};

struct Distance3Result {
  bool reachable = true;
  std::optional<std::uint64_t> distance;
  std::vector<ComponentDistance> per_component;
};

inline Distance3Result distance3(const Graph& g, const Colouring& alpha,
                                 const Colouring& beta) {
  detail::require_three_colourings(g, alpha, beta);
  const FixedSet fa = fixed_vertices(g, alpha);
  const FixedSet fb = fixed_vertices(g, beta);
  const detail::Forest f = detail::bfs_forest(g);
  std::vector<Height> h(g.num_vertices(), 0);
  Distance3Result res;
  std::uint64_t total = 0;
  res.per_component.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto comp = f.component(i);
    detail::fill_heights(comp, f.parent, alpha, beta, h);
    const auto plan = detail::plan_component(g, comp, alpha, beta, fa, fb, h);
    ComponentDistance cd;
    cd.root = comp.front();
    cd.size = comp.size();
    cd.a1_holds = plan.conditions.a1_holds;
    cd.a2_holds = plan.conditions.a2_holds;
    if (plan.conditions.holds()) {
      cd.focal = plan.focal;
      cd.focal_fixed = plan.focal_fixed;
      cd.distance = plan.offset.j_min / 2;
      total += *cd.distance;
    } else {
      res.reachable = false;
    }
    res.per_component.push_back(cd);
  }
  if (res.reachable) res.distance = total;
  return res;
}

namespace detail {

inline Colour up3(Colour c) { return c % 3 + 1; }
inline Colour down3(Colour c) { return (c + 1) % 3 + 1; }

// Drives every vertex of the component from absolute height 0 to its target
// k + hs[v], each step moving one vertex two units closer.
inline void build_component_witness(const Graph& g, std::span<const Vertex> comp,
                                    const std::vector<Height>& hs, Height k,
                                    Colouring& cur, RecolouringSequence& out) {
  std::vector<Height> deficit(g.num_vertices(), 0);
  std::size_t top = 0;
  for (Vertex v : comp) {
    deficit[v] = k + hs[v];
    top = std::max(top, static_cast<std::size_t>(std::abs(deficit[v]) / 2));
  }
  std::vector<std::vector<Vertex>> bucket(top + 1);
  for (Vertex v : comp) {
    const auto b = static_cast<std::size_t>(std::abs(deficit[v]) / 2);
    if (b > 0) bucket[b].push_back(v);
  }
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<Vertex> path;

  while (true) {
    if (path.empty()) {
      while (top > 0) {
        auto& bk = bucket[top];
        while (!bk.empty() &&
               static_cast<std::size_t>(std::abs(deficit[bk.back()]) / 2) != top) {
          bk.pop_back();
        }
        if (!bk.empty()) break;
        --top;
      }
      if (top == 0) return;
      path.push_back(bucket[top].back());
      on_path[path.back()] = 1;
    }
    // Positive deficit: follow colours downwards and lower the end vertex's
    // colour (height +2). Negative: the mirror image.
    const bool falling = deficit[path.front()] > 0;
    while (true) {
      const Vertex end = path.back();
      const Colour want = falling ? down3(cur[end]) : up3(cur[end]);
      std::optional<Vertex> next;
      for (Vertex w : g.neighbours(end)) {
        if (cur[w] == want) {
          next = w;
          break;
        }
      }
      if (!next) break;
      if (on_path[*next]) {
        throw RecolourError("witness construction reached a fixed cycle");
      }
      on_path[*next] = 1;
      path.push_back(*next);
    }
    const Vertex v = path.back();
    path.pop_back();
    on_path[v] = 0;
    cur[v] = falling ? down3(cur[v]) : up3(cur[v]);
    deficit[v] += falling ? -2 : 2;
    out.push_back({v, cur[v]});
    const auto b = static_cast<std::size_t>(std::abs(deficit[v]) / 2);
    if (b > 0) bucket[b].push_back(v);
  }
}

}  // namespace detail

inline RecolouringSequence witness3(const Graph& g, const Colouring& alpha,
                                    const Colouring& beta) {
  detail::require_three_colourings(g, alpha, beta);
  const FixedSet fa = fixed_vertices(g, alpha);
  const FixedSet fb = fixed_vertices(g, beta);
  const detail::Forest f = detail::bfs_forest(g);
  std::vector<Height> h(g.num_vertices(), 0);
  RecolouringSequence seq;
  Colouring cur = alpha;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto comp = f.component(i);
    detail::fill_heights(comp, f.parent, alpha, beta, h);
    const auto plan = detail::plan_component(g, comp, alpha, beta, fa, fb, h);
    if (!plan.conditions.holds()) {
      throw RecolourError("alpha and beta are in different components");
    }
    const std::size_t before = seq.size();
    detail::build_component_witness(g, comp, h, plan.offset.chosen, cur, seq);
    if (seq.size() - before != plan.offset.j_min / 2) {
      throw RecolourError("witness length differs from the height bound");
    }
  }
  return seq;
}

struct SmallKResult {
  bool reachable = false;
  std::optional<std::size_t> distance;
  std::optional<RecolouringSequence> witness;
  bool within_budget = false;
};

// k = 1: nothing can move. k = 2: a vertex with a neighbour is frozen, an
// isolated vertex flips in one step.
inline SmallKResult solve_small_k(const ReconfigInstance& inst) {
  if (inst.k > 2) throw RecolourError("solve_small_k handles k <= 2 only");
  const Graph& g = inst.graph;
  SmallKResult r;
  RecolouringSequence seq;
  r.reachable = true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (inst.alpha[v] == inst.beta[v]) continue;
    if (inst.k == 1 || g.degree(v) > 0) {
      r.reachable = false;
      break;
    }
    seq.push_back({v, inst.beta[v]});
  }
  if (r.reachable) {
    r.distance = seq.size();
    r.witness = std::move(seq);
    r.within_budget = *r.distance <= inst.ell;
  }
  return r;
}

}  // namespace recolour
