#pragma once

// Hitting Set -> k-Colouring Reconfiguration instance generator.
//
// Layout of the generated graph: s, t, the k-clique u_1..u_k, the element
// vertices v_1..v_n, then one claw (a, b, c, d) per (F, x, y) with F in the
// family, x in 0..r-1 and y in 1..2^x, in lexicographic order. The clique
// cannot be recoloured, so adjacency to u_i removes colour i from a vertex's
// palette:
//
//   s {2,3}   t {2,3,4}   v_j {1,4}   a {2,4}   b {3,4}   c {1,2,3}   d {1,4}
//
// and every non-clique vertex is also adjacent to u_5..u_k. Recolouring t to
// 4 requires d_{F,0,1} = 1 for every set F, which propagates down each claw
// tree to a leaf whose element vertex has been recoloured to 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "recolour/graph.hpp"

namespace recolour {

struct HittingSetInstance {
  std::size_t universe_size = 0;               // elements are 1..universe_size
  std::vector<std::vector<std::size_t>> family;
  std::size_t budget = 0;

  void validate() const {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].empty()) {
        throw RecolourError("set " + std::to_string(i + 1) + " is empty");
      }
      for (std::size_t e : family[i]) {
        if (e < 1 || e > universe_size) {
          throw RecolourError("set " + std::to_string(i + 1) +
                              " contains element " + std::to_string(e) +
                              " outside 1.." + std::to_string(universe_size));
        }
      }
    }
  }

  bool is_hitting_set(const std::vector<std::size_t>& chosen) const {
    const std::set<std::size_t> s(chosen.begin(), chosen.end());
    return std::all_of(family.begin(), family.end(), [&](const auto& f) {
      return std::any_of(f.begin(), f.end(),
                         [&](std::size_t e) { return s.count(e) > 0; });
    });
  }
};

struct PreparedHittingSet {
  HittingSetInstance instance;
  // origin[j-1] is the original element behind new element j; 0 for padding.
  std::vector<std::size_t> origin;
};

// Merge elements with identical membership signatures (keeping the smallest)
// and pad with unused elements up to a power of two, at least 2.
inline PreparedHittingSet preprocess(const HittingSetInstance& hs) {
  hs.validate();
  if (hs.family.empty()) {
    throw RecolourError("the family must contain at least one set");
  }
  std::vector<std::vector<std::size_t>> signature(hs.universe_size + 1);
  for (std::size_t f = 0; f < hs.family.size(); ++f) {
    std::set<std::size_t> members(hs.family[f].begin(), hs.family[f].end());
    for (std::size_t e : members) signature[e].push_back(f);
  }
  std::map<std::vector<std::size_t>, std::size_t> first_with;
  PreparedHittingSet out;
  std::vector<std::size_t> renumber(hs.universe_size + 1, 0);
  for (std::size_t e = 1; e <= hs.universe_size; ++e) {
    auto [it, fresh] = first_with.emplace(signature[e], 0);
    if (fresh) {
      out.origin.push_back(e);
      it->second = out.origin.size();
    }
    renumber[e] = it->second;
  }
  std::size_t n = 2;
  while (n < out.origin.size()) n *= 2;
  out.origin.resize(n, 0);

  out.instance.universe_size = n;
  out.instance.budget = hs.budget;
  for (const auto& f : hs.family) {
    std::set<std::size_t> mapped;
    for (std::size_t e : f) mapped.insert(renumber[e]);
    out.instance.family.emplace_back(mapped.begin(), mapped.end());
  }
  return out;
}

struct Claw {
  Vertex a, b, c, d;
};

struct GadgetInstance {
  ReconfigInstance instance;
  HittingSetInstance source;
  std::vector<std::string> roles;  // indexed by vertex
  std::size_t r = 0;               // claw-tree depth, log2 of the universe size

  static constexpr Vertex s = 0;
  static constexpr Vertex t = 1;

  int k() const { return instance.k; }
  Vertex clique(int i) const { return 2 + static_cast<Vertex>(i - 1); }
  Vertex element(std::size_t j) const {
    return 2 + static_cast<Vertex>(instance.k) + (j - 1);
  }
  // Claw (F, x, y) with F a 0-based family index.
  Claw claw(std::size_t f, std::size_t x, std::size_t y) const {
    const std::size_t n = source.universe_size;
    const std::size_t id = f * (n - 1) + ((std::size_t{1} << x) - 1) + (y - 1);
    const Vertex base = element(n) + 1 + 4 * id;
    return {base, base + 1, base + 2, base + 3};
  }
};

inline std::size_t gadget_budget(std::size_t p, std::size_t m, std::size_t r) {
  return 3 + 2 * p + 2 * m * 3 * r;
}

inline GadgetInstance generate(const HittingSetInstance& hs, int k) {
  if (k < 4) throw RecolourError("the generator needs k >= 4");
  hs.validate();
  const std::size_t n = hs.universe_size;
  const std::size_t m = hs.family.size();
  if (m == 0) throw RecolourError("the family must contain at least one set");
  if (n < 2 || (n & (n - 1)) != 0) {
    throw RecolourError("universe size must be a power of two >= 2; run "
                        "preprocess first");
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < n) ++r;

  GadgetInstance gi;
  gi.source = hs;
  gi.r = r;
  gi.instance.k = k;  // claw() and element() read k before the graph exists
  const std::size_t total = 2 + static_cast<std::size_t>(k) + n + 4 * m * (n - 1);
  gi.roles.resize(total);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Colour> alpha(total, 0), beta(total, 0);
  auto forbid = [&](Vertex v, std::initializer_list<int> colours) {
    for (int i : colours) edges.emplace_back(v, gi.clique(i));
  };

  const Vertex s = GadgetInstance::s, t = GadgetInstance::t;
  gi.roles[s] = "s";
  gi.roles[t] = "t";
  alpha[s] = 2, beta[s] = 3;
  alpha[t] = 3, beta[t] = 2;
  edges.emplace_back(s, t);
  forbid(s, {1, 4});
  forbid(t, {1});

  for (int i = 1; i <= k; ++i) {
    const Vertex u = gi.clique(i);
    gi.roles[u] = "u" + std::to_string(i);
    alpha[u] = beta[u] = i;
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(u, gi.clique(j));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const Vertex v = gi.element(j);
    gi.roles[v] = "v" + std::to_string(j);
    alpha[v] = beta[v] = 4;
    forbid(v, {2, 3});
  }

  for (std::size_t f = 0; f < m; ++f) {
    const std::set<std::size_t> members(hs.family[f].begin(),
                                        hs.family[f].end());
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 1; y <= (std::size_t{1} << x); ++y) {
        const Claw cl = gi.claw(f, x, y);
        const std::string tag = "_" + std::to_string(f + 1) + "_" +
                                std::to_string(x) + "_" + std::to_string(y);
        gi.roles[cl.a] = "a" + tag;
        gi.roles[cl.b] = "b" + tag;
        gi.roles[cl.c] = "c" + tag;
        gi.roles[cl.d] = "d" + tag;
        alpha[cl.a] = beta[cl.a] = 2;
        alpha[cl.b] = beta[cl.b] = 3;
        alpha[cl.c] = beta[cl.c] = 1;
        alpha[cl.d] = beta[cl.d] = 4;
        forbid(cl.a, {1, 3});
        forbid(cl.b, {1, 2});
        forbid(cl.c, {4});
        forbid(cl.d, {2, 3});
        edges.emplace_back(cl.c, cl.a);
        edges.emplace_back(cl.c, cl.b);
        edges.emplace_back(cl.c, cl.d);

        if (x == 0) {
          edges.emplace_back(cl.d, t);
        } else if (y % 2 == 1) {
          edges.emplace_back(cl.d, gi.claw(f, x - 1, (y + 1) / 2).a);
        } else {
          edges.emplace_back(cl.d, gi.claw(f, x - 1, y / 2).b);
        }
        if (x + 1 == r) {
          edges.emplace_back(cl.a, gi.element(2 * y - 1));
          edges.emplace_back(cl.b, gi.element(2 * y));
          if (!members.count(2 * y - 1)) forbid(cl.a, {4});
          if (!members.count(2 * y)) forbid(cl.b, {4});
        }
      }
    }
  }

  for (Vertex v = 0; v < total; ++v) {
    if (v >= gi.clique(1) && v <= gi.clique(k)) continue;
    for (int i = 5; i <= k; ++i) edges.emplace_back(v, gi.clique(i));
  }

  gi.instance = ReconfigInstance(Graph(total, edges), k, Colouring(alpha, k),
                                 Colouring(beta, k),
                                 gadget_budget(hs.budget, m, r));
  return gi;
}

// Smallest hitting set of size <= budget, lexicographically least among the
// smallest; nullopt when none exists.
inline std::optional<std::vector<std::size_t>> brute_force_hitting_set(
    const HittingSetInstance& hs, std::size_t max_universe = 24) {
  hs.validate();
  const std::size_t n = hs.universe_size;
  if (n > max_universe) {
    throw RecolourError("universe of size " + std::to_string(n) +
                        " exceeds the brute-force cap of " +
                        std::to_string(max_universe));
  }
  const std::size_t limit = std::min(hs.budget, n);
  for (std::size_t size = 0; size <= limit; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i + 1;
    while (true) {
      if (hs.is_hitting_set(pick)) return pick;
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Recolouring schedule realising a hitting set: select the element vertices,
// propagate each set's claw tree from a hit leaf to its root, swap s and t
// through colour 4, then undo the propagation and the selection.
inline RecolouringSequence constructive_witness(
    const GadgetInstance& gi, const std::vector<std::size_t>& hitting_set) {
  const HittingSetInstance& hs = gi.source;
  const std::set<std::size_t> chosen(hitting_set.begin(), hitting_set.end());
  for (std::size_t e : chosen) {
    if (e < 1 || e > hs.universe_size) {
      throw RecolourError("element " + std::to_string(e) + " is not in the universe");
    }
  }
  if (chosen.size() > hs.budget) {
    throw RecolourError("hitting set exceeds the budget");
  }
  if (!hs.is_hitting_set({chosen.begin(), chosen.end()})) {
    throw RecolourError("the given elements do not hit every set");
  }

  RecolouringSequence seq;
  for (std::size_t j : chosen) seq.push_back({gi.element(j), 1});

  RecolouringSequence propagation;
  std::vector<Colour> restore;
  const Colouring& alpha = gi.instance.alpha;
  for (std::size_t f = 0; f < hs.family.size(); ++f) {
    std::size_t j = 0;
    for (std::size_t e : hs.family[f]) {
      if (chosen.count(e) && (j == 0 || e < j)) j = e;
    }
    std::size_t y = (j + 1) / 2;
    bool via_a = j % 2 == 1;
    for (std::size_t x = gi.r; x-- > 0;) {
      const Claw cl = gi.claw(f, x, y);
      const Vertex side = via_a ? cl.a : cl.b;
      for (auto [v, c] : {Step{side, 4}, Step{cl.c, via_a ? 2 : 3}, Step{cl.d, 1}}) {
        propagation.push_back({v, c});
        restore.push_back(alpha[v]);
      }
      via_a = y % 2 == 1;
      y = (y + 1) / 2;
    }
  }
  seq.insert(seq.end(), propagation.begin(), propagation.end());

  seq.push_back({GadgetInstance::t, 4});
  seq.push_back({GadgetInstance::s, 3});
  seq.push_back({GadgetInstance::t, 2});

  for (std::size_t i = propagation.size(); i-- > 0;) {
    seq.push_back({propagation[i].vertex, restore[i]});
  }
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    seq.push_back({gi.element(*it), 4});
  }
  return seq;
}

}  // namespace recolour
