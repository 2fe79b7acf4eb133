#pragma once

// Graph and colouring data model shared by every solver: construction,
// propriety, connected components, BFS spanning trees and witness checking.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recolour {

using Vertex = std::size_t;
using Colour = int;

class RecolourError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected simple graph with sorted adjacency lists. Vertices are 0..n-1.
// Simple undirected graph in compressed adjacency form: the neighbours of v
// are targets_[offsets_[v] .. offsets_[v+1]), sorted ascending.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : offsets_(n + 1, 0) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw RecolourError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") has an endpoint outside 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
      }
      if (u == v) {
        throw RecolourError("self-loop at vertex " + std::to_string(u));
      }
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
      targets_[fill[u]++] = v;
      targets_[fill[v]++] = u;
    }
    // sort each list and squeeze out duplicates in place
    std::size_t out = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      std::sort(first, last);
      const auto end = std::unique(first, last);
      offsets_[v] = out;
      for (auto it = first; it != end; ++it) targets_[out++] = *it;
    }
    offsets_[n] = out;
    targets_.resize(out);
    targets_.shrink_to_fit();
  }

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbours(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto nbrs = neighbours(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
      for (Vertex v : neighbours(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

inline Graph new_graph(std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return Graph(n, edges);
}

// Colour map vertex -> {1..k}.
struct Colouring {
  std::vector<Colour> colours;
  int k = 0;

  Colouring() = default;
  Colouring(std::vector<Colour> cs, int palette)
      : colours(std::move(cs)), k(palette) {
    if (k < 1) throw RecolourError("palette size must be at least 1");
    for (std::size_t v = 0; v < colours.size(); ++v) {
      if (colours[v] < 1 || colours[v] > k) {
        throw RecolourError("vertex " + std::to_string(v) + " has colour " +
                            std::to_string(colours[v]) + " outside 1.." +
                            std::to_string(k));
      }
    }
  }

  std::size_t size() const { return colours.size(); }
  Colour operator[](Vertex v) const { return colours[v]; }
  Colour& operator[](Vertex v) { return colours[v]; }

  friend bool operator==(const Colouring& a, const Colouring& b) {
    return a.colours == b.colours;
  }
};

inline bool is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != g.num_vertices()) return false;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (c[u] == c[v]) return false;
    }
  }
  return true;
}

struct Step {
  Vertex vertex;
  Colour colour;

  friend bool operator==(const Step&, const Step&) = default;
};

// A recolouring sequence; each step changes the colour of one vertex.
using RecolouringSequence = std::vector<Step>;

struct ReconfigInstance {
  Graph graph;
  int k = 0;
  Colouring alpha;
  Colouring beta;
  std::size_t ell = 0;

  ReconfigInstance() = default;
  ReconfigInstance(Graph g, int palette, Colouring a, Colouring b,
                   std::size_t budget)
      : graph(std::move(g)),
        k(palette),
        alpha(std::move(a)),
        beta(std::move(b)),
        ell(budget) {
    if (k < 1) throw RecolourError("palette size must be at least 1");
    alpha.k = beta.k = k;
    for (const Colouring* c : {&alpha, &beta}) {
      if (c->size() != graph.num_vertices()) {
        throw RecolourError("colouring size does not match vertex count");
      }
      for (Colour x : c->colours) {
        if (x < 1 || x > k) throw RecolourError("colour outside palette");
      }
    }
    if (!is_proper(graph, alpha)) throw RecolourError("alpha is not proper");
    if (!is_proper(graph, beta)) throw RecolourError("beta is not proper");
  }
};

// Connected components, each sorted ascending, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbours(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

// Spanning tree of the root's component. parent[v] == kNoParent outside the
// component; parent[root] == root. order is the BFS visitation order.
struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;

  bool contains(Vertex v) const {
    return v < parent.size() && parent[v] != kNoParent;
  }
};

inline SpanningTree bfs_spanning_tree(const Graph& g, Vertex root) {
  if (root >= g.num_vertices()) throw RecolourError("root out of range");
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.num_vertices(), kNoParent);
  t.parent[root] = root;
  t.order.push_back(root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    Vertex u = t.order[head];
    for (Vertex v : g.neighbours(u)) {
      if (t.parent[v] == kNoParent) {
        t.parent[v] = u;
        t.order.push_back(v);
      }
    }
  }
  return t;
}

// Same tree edges, hung from a different root of the same component.
inline SpanningTree reroot(const SpanningTree& tree, Vertex new_root) {
  if (!tree.contains(new_root)) {
    throw RecolourError("new root is not in the tree");
  }
  const std::size_t n = tree.parent.size();
  std::vector<std::vector<Vertex>> tadj(n);
  for (Vertex v : tree.order) {
    if (v != tree.root) {
      tadj[v].push_back(tree.parent[v]);
      tadj[tree.parent[v]].push_back(v);
    }
  }
  for (auto& a : tadj) std::sort(a.begin(), a.end());
  SpanningTree t;
  t.root = new_root;
  t.parent.assign(n, kNoParent);
  t.parent[new_root] = new_root;
  t.order.push_back(new_root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    Vertex u = t.order[head];
    for (Vertex v : tadj[u]) {
      if (t.parent[v] == kNoParent) {
        t.parent[v] = u;
        t.order.push_back(v);
      }
    }
  }
  return t;
}

struct VerificationReport {
  bool accepted = false;
  // Index of the offending step, or steps.size() for a final mismatch.
  std::optional<std::size_t> failing_step;
  std::string reason;

  explicit operator bool() const { return accepted; }
};

inline VerificationReport verify_recolouring(const Graph& g, int k,
                                             const Colouring& alpha,
                                             const Colouring& beta,
                                             const RecolouringSequence& seq) {
  VerificationReport r;
  const std::size_t n = g.num_vertices();
  if (alpha.size() != n || beta.size() != n) {
    r.reason = "colouring size mismatch";
    return r;
  }
  if (!is_proper(g, alpha)) {
    r.reason = "alpha is not proper";
    return r;
  }
  std::vector<Colour> cur = alpha.colours;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto [v, c] = seq[i];
    r.failing_step = i;
    if (v >= n) {
      r.reason = "vertex out of range";
      return r;
    }
    if (c < 1 || c > k) {
      r.reason = "colour out of range";
      return r;
    }
    if (cur[v] == c) {
      r.reason = "no-op step";
      return r;
    }
    for (Vertex w : g.neighbours(v)) {
      if (cur[w] == c) {
        r.reason = "improper colouring: edge " + std::to_string(v) + "-" +
                   std::to_string(w) + " monochromatic";
        return r;
      }
    }
    cur[v] = c;
  }
  if (cur != beta.colours) {
    r.failing_step = seq.size();
    r.reason = "final mismatch";
    return r;
  }
  r.failing_step.reset();
  r.accepted = true;
  return r;
}

inline Colouring apply(const Colouring& start, const RecolouringSequence& seq) {
  Colouring c = start;
  for (const auto& s : seq) c[s.vertex] = s.colour;
  return c;
}

}  // namespace recolour
