#include "coxinv/oddgraph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "union_find.hpp"

namespace coxinv {

namespace {

void check_rank(const CoxeterMatrix& mat, const EnumerationLimits& limits) {
  if (mat.rank() > limits.max_rank) {
    throw LimitExceededError("rank " + std::to_string(mat.rank()) +
                             " exceeds the enumeration cap of " +
                             std::to_string(limits.max_rank));
  }
}

void check_k(const CoxeterMatrix& mat, int k) {
  if (k < 1 || k > mat.rank()) {
    throw ValidationError("k = " + std::to_string(k) + " outside [1, " +
                          std::to_string(mat.rank()) + "]");
  }
}

// Depth-first walk over the spherical vertex sets of size <= max_size, in
// lexicographic order. Supersets of a non-spherical set are never finite,
// so its subtree is skipped.
template <typename Visit>
void for_each_spherical(const CoxeterMatrix& mat, int max_size,
                        const EnumerationLimits& limits, Visit&& visit) {
  check_rank(mat, limits);
  std::uint64_t examined = 0;
  const int n = mat.rank();
  auto extend = [&](auto&& self, VertexSet s) -> void {
    for (int v = s.highest() + 1; v < n; ++v) {
      const VertexSet t = s.with(v);
      if (++examined > limits.subset_budget) {
        throw LimitExceededError("subset budget of " +
                                 std::to_string(limits.subset_budget) +
                                 " exhausted");
      }
      const TypeDecomposition dec = decompose(mat, t);
      if (!is_spherical(dec)) continue;
      visit(t, dec);
      if (t.size() < max_size) self(self, t);
    }
  };
  extend(extend, VertexSet{});
}

/// central[k] holds the rank-k central vertex sets in lex order; central[0]
/// is {{}}.
std::vector<std::vector<VertexSet>> central_catalogue(
    const CoxeterMatrix& mat, int max_k, const EnumerationLimits& limits) {
  std::vector<std::vector<VertexSet>> central(max_k + 1);
  central[0].push_back(VertexSet{});
  for_each_spherical(mat, max_k, limits,
                     [&](VertexSet s, const TypeDecomposition& dec) {
                       if (has_central_longest(dec)) {
                         central[s.size()].push_back(s);
                       }
                     });
  return central;
}

void assign_components(OddGraph& g) {
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  detail::UnionFind uf(g.vertices.size());
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::unordered_map<std::size_t, std::size_t> label;
  g.component_id.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto [it, inserted] = label.emplace(uf.find(v), label.size());
    g.component_id[v] = it->second;
  }
  g.component_count = label.size();
}

void add_edge(OddGraph& g, std::size_t a, std::size_t b) {
  g.edges.emplace_back(std::min(a, b), std::max(a, b));
}

OddGraph graph_from_odd_bonds(const CoxeterMatrix& mat, int k,
                              std::vector<VertexSet> vertices,
                              const std::vector<VertexSet>& lower) {
  OddGraph g;
  g.k = k;
  g.vertices = std::move(vertices);
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    index.emplace(g.vertices[v], v);
  }
  const int n = mat.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!is_odd_bond(mat(i, j))) continue;
      const VertexSet blocked =
          mat.neighbours(i) | mat.neighbours(j) | VertexSet::of({i, j});
      for (VertexSet K : lower) {
        if (K.intersects(blocked)) continue;
        add_edge(g, index.at(K.with(i)), index.at(K.with(j)));
      }
    }
  }
  assign_components(g);
  return g;
}

}  // namespace

bool odd_adjacent(const CoxeterMatrix& mat, VertexSet J, VertexSet K) {
  const VertexSet only_j = J - K;
  const VertexSet only_k = K - J;
  if (only_j.size() != 1 || only_k.size() != 1) return false;
  const int l = only_j.lowest();
  const int m = only_k.lowest();
  if (!is_odd_bond(mat(l, m))) return false;
  return !mat.neighbours(l).intersects(J) && !mat.neighbours(m).intersects(K);
}

std::vector<VertexSet> central_subsets(const CoxeterMatrix& mat, int k,
                                       const EnumerationLimits& limits) {
  check_k(mat, k);
  return std::move(central_catalogue(mat, k, limits)[k]);
}

OddGraph gamma_k(const CoxeterMatrix& mat, int k,
                 const EnumerationLimits& limits) {
  check_k(mat, k);
  auto central = central_catalogue(mat, k, limits);
  return graph_from_odd_bonds(mat, k, std::move(central[k]), central[k - 1]);
}

OddGraph gamma_k_pairwise(const CoxeterMatrix& mat, int k,
                          const EnumerationLimits& limits) {
  OddGraph g;
  g.k = k;
  g.vertices = central_subsets(mat, k, limits);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (odd_adjacent(mat, g.vertices[a], g.vertices[b])) add_edge(g, a, b);
    }
  }
  assign_components(g);
  return g;
}

OddGraph omega_k(const CoxeterMatrix& mat, int k,
                 const EnumerationLimits& limits) {
  if (k == 1) return gamma_k(mat, k, limits);
  OddGraph g;
  g.k = k;
  g.vertices = central_subsets(mat, k, limits);
  std::map<TypeDecomposition, std::vector<std::size_t>> by_type;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    by_type[decompose(mat, g.vertices[v])].push_back(v);
  }
  for (const auto& [type, members] : by_type) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        add_edge(g, members[a], members[b]);
      }
    }
  }
  assign_components(g);
  return g;
}

std::vector<int> longest_element_word(const CoxeterMatrix& mat, VertexSet J) {
  std::vector<int> word;
  for (VertexSet comp : components(mat, J)) {
    const IrreducibleType t = classify_component(mat, comp);
    if (!is_central_type(t)) {
      throw DomainError("longest element of " + to_string(t) +
                        " is not central");
    }
    const auto gens = comp.members();
    for (int rep = 0; rep < coxeter_number(t) / 2; ++rep) {
      word.insert(word.end(), gens.begin(), gens.end());
    }
  }
  return word;
}

InvolutionClassReport cc2(const CoxeterMatrix& mat,
                          const EnumerationLimits& limits) {
  InvolutionClassReport report;
  const int n = mat.rank();
  if (n == 0) return report;
  auto central = central_catalogue(mat, n, limits);
  for (int k = 1; k <= n; ++k) {
    const OddGraph g = graph_from_odd_bonds(mat, k, central[k], central[k - 1]);
    report.per_rank.push_back(g.component_count);
    report.total += g.component_count;
    // Vertices are lex-sorted and components numbered by first appearance,
    // so the first vertex seen in each component is its lex-smallest.
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.component_id[v] != next) continue;
      ++next;
      const VertexSet J = g.vertices[v];
      report.representatives.push_back(
          {k, J, decompose(mat, J), longest_element_word(mat, J)});
    }
  }
  return report;
}

std::vector<VertexSet> maximal_spherical_subsets(
    const CoxeterMatrix& mat, const EnumerationLimits& limits) {
  std::vector<VertexSet> spherical{VertexSet{}};
  for_each_spherical(mat, mat.rank(), limits,
                     [&](VertexSet s, const TypeDecomposition&) {
                       spherical.push_back(s);
                     });
  const std::unordered_set<VertexSet, VertexSetHash> lookup(spherical.begin(),
                                                            spherical.end());
  std::vector<VertexSet> maximal;
  for (VertexSet s : spherical) {
    bool extendable = false;
    (mat.vertices() - s).for_each([&](int v) {
      extendable = extendable || lookup.contains(s.with(v));
    });
    if (!extendable) maximal.push_back(s);
  }
  return maximal;
}

Bounds bounds(const CoxeterMatrix& mat, const EnumerationLimits& limits) {
  Bounds b;
  const int n = mat.rank();
  check_rank(mat, limits);
  b.is_finite = is_spherical(decompose(mat, mat.vertices()));
  if (n >= 63) throw LimitExceededError("numeric bound overflows 64 bits");
  b.numeric_upper = (std::uint64_t{1} << n) - (b.is_finite ? 1 : 2);
  if (n == 0) return b;

  // Components of an O-graph with k >= 2 are exactly the type classes.
  b.omega_lower = gamma_k(mat, 1, limits).component_count;
  auto central = central_catalogue(mat, n, limits);
  for (int k = 2; k <= n; ++k) {
    std::vector<TypeDecomposition> types;
    for (VertexSet J : central[k]) types.push_back(decompose(mat, J));
    std::sort(types.begin(), types.end());
    b.omega_lower += static_cast<std::uint64_t>(
        std::unique(types.begin(), types.end()) - types.begin());
  }

  for (VertexSet delta : maximal_spherical_subsets(mat, limits)) {
    b.maximal_spherical_upper += cc2(induced(mat, delta), limits).total;
  }
  return b;
}

}  // namespace coxinv
