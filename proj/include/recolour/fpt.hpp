#pragma once

// Bounded search for k >= 4 parameterised by the budget ell. Only vertices
// of the candidate set A* can be touched by a shortest recolouring, and
// |A*| <= ell * (k * ell)^ell, so a depth-ell search over (vertex, colour)
// moves restricted to A* decides the instance.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

inline std::vector<Vertex> disagreement_set(const Colouring& alpha,
                                            const Colouring& beta) {
  if (alpha.size() != beta.size()) {
    throw RecolourError("colourings have different sizes");
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < alpha.size(); ++v) {
    if (alpha[v] != beta[v]) out.push_back(v);
  }
  return out;
}

struct CandidateSet {
  // layers[0] = A_0, ..., layers[ell-1] = A_{ell-1}; each sorted.
  std::vector<std::vector<Vertex>> layers;
  // A*, sorted.
  std::vector<Vertex> all;

  bool contains(Vertex v) const {
    return std::binary_search(all.begin(), all.end(), v);
  }
};

// A_i collects, for every u in A_{i-1}, the neighbours of u whose alpha colour
// occurs at most ell times in N(u).
inline CandidateSet compute_candidate_set(const Graph& g, const Colouring& alpha,
                                          const Colouring& beta, std::size_t ell,
                                          int k) {
  CandidateSet cs;
  if (ell == 0) return cs;
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> per_colour(static_cast<std::size_t>(k) + 1, 0);
  std::vector<char> in_layer(n, 0), in_union(n, 0);

  cs.layers.push_back(disagreement_set(alpha, beta));
  for (std::size_t i = 1; i < ell; ++i) {
    const auto& prev = cs.layers.back();
    std::vector<Vertex> layer;
    for (Vertex u : prev) {
      for (Vertex v : g.neighbours(u)) ++per_colour[alpha[v]];
      for (Vertex v : g.neighbours(u)) {
        if (per_colour[alpha[v]] <= ell && !in_layer[v]) {
          in_layer[v] = 1;
          layer.push_back(v);
        }
      }
      for (Vertex v : g.neighbours(u)) per_colour[alpha[v]] = 0;
    }
    for (Vertex v : layer) in_layer[v] = 0;
    std::sort(layer.begin(), layer.end());
    cs.layers.push_back(std::move(layer));
  }
  for (const auto& layer : cs.layers) {
    for (Vertex v : layer) {
      if (!in_union[v]) {
        in_union[v] = 1;
        cs.all.push_back(v);
      }
    }
  }
  std::sort(cs.all.begin(), cs.all.end());
  return cs;
}

struct FptOutcome {
  bool yes = false;
  std::optional<RecolouringSequence> witness;
  std::size_t explored = 0;
  // Empty when the instance is rejected before A* is built.
  CandidateSet candidates;
};

namespace detail {

class BoundedSearch {
 public:
  BoundedSearch(const ReconfigInstance& inst, const CandidateSet& cs)
      : g_(inst.graph),
        k_(inst.k),
        beta_(inst.beta),
        cand_(cs.all),
        cur_(inst.alpha.colours) {
    for (Vertex v : cand_) mismatched_ += cur_[v] != beta_[v] ? 1 : 0;
  }

  bool run(std::size_t budget) { return dfs(budget, std::nullopt); }

  const RecolouringSequence& path() const { return path_; }
  std::size_t explored() const { return explored_; }

 private:
  struct Undo {
    Vertex vertex;
    Colour previous;
  };

  std::string key() const {
    std::string s(cand_.size(), '\0');
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      s[i] = static_cast<char>(cur_[cand_[i]]);
    }
    return s;
  }

  bool free_for(Vertex v, Colour c) const {
    for (Vertex w : g_.neighbours(v)) {
      if (cur_[w] == c) return false;
    }
    return true;
  }

  bool dfs(std::size_t remaining, std::optional<Undo> last) {
    ++explored_;
    if (mismatched_ == 0) return true;
    // Each step repairs at most one mismatched vertex.
    if (mismatched_ > remaining) return false;
    // The no-undo restriction is part of the searched subproblem.
    std::string here = key();
    if (last) {
      here += std::to_string(last->vertex);
      here += ':';
      here += static_cast<char>(last->previous);
    }
    if (auto it = failed_.find(here);
        it != failed_.end() && it->second >= remaining) {
      return false;
    }
    for (Vertex v : cand_) {
      const Colour old = cur_[v];
      for (Colour c = 1; c <= k_; ++c) {
        if (c == old) continue;
        if (last && last->vertex == v && last->previous == c) continue;
        if (!free_for(v, c)) continue;
        apply(v, c);
        path_.push_back({v, c});
        if (dfs(remaining - 1, Undo{v, old})) return true;
        path_.pop_back();
        apply(v, old);
      }
    }
    auto& best = failed_[here];
    best = std::max(best, remaining);
    return false;
  }

  void apply(Vertex v, Colour c) {
    mismatched_ -= cur_[v] != beta_[v] ? 1 : 0;
    cur_[v] = c;
    mismatched_ += cur_[v] != beta_[v] ? 1 : 0;
  }

  const Graph& g_;
  int k_;
  const Colouring& beta_;
  const std::vector<Vertex>& cand_;
  std::vector<Colour> cur_;
  std::size_t mismatched_ = 0;
  RecolouringSequence path_;
  std::size_t explored_ = 0;
  // Largest budget with which a colouring of A* (plus the move that may not
  // be undone) was searched without success.
  std::unordered_map<std::string, std::size_t> failed_;
};

}  // namespace detail

inline FptOutcome fpt_solve(const ReconfigInstance& inst) {
  FptOutcome out;
  out.explored = 1;
  if (inst.alpha == inst.beta) {
    out.yes = true;
    out.witness = RecolouringSequence{};
    return out;
  }
  // Every disagreeing vertex needs its own step, so a short recolouring
  // forces |A_0| <= ell; A* is only built (and only small) under that bound.
  if (disagreement_set(inst.alpha, inst.beta).size() > inst.ell) return out;
  out.candidates = compute_candidate_set(inst.graph, inst.alpha, inst.beta,
                                         inst.ell, inst.k);
  detail::BoundedSearch search(inst, out.candidates);
  out.yes = search.run(inst.ell);
  out.explored = search.explored();
  if (out.yes) out.witness = search.path();
  return out;
}

// W_q = {v : c_q(v) != alpha(v)} has at most q elements at every prefix.
inline bool prefix_disagreement_check(const Colouring& alpha,
                                      const RecolouringSequence& prefix) {
  std::vector<Colour> cur = alpha.colours;
  std::size_t differing = 0;
  for (std::size_t q = 1; q <= prefix.size(); ++q) {
    const auto [v, c] = prefix[q - 1];
    differing -= cur[v] != alpha[v] ? 1 : 0;
    cur[v] = c;
    differing += cur[v] != alpha[v] ? 1 : 0;
    if (differing > q) return false;
  }
  return true;
}

}  // namespace recolour
