#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "coxinv/diagram.hpp"
#include "coxinv/classify.hpp"
#include "coxinv/formulas.hpp"

namespace coxinv::testing {

using Rng = std::mt19937_64;

/// Random Coxeter matrix with off-diagonal bonds drawn uniformly from `bonds`.
CoxeterMatrix random_matrix(Rng& rng, int rank,
                            const std::vector<BondOrder>& bonds);

std::vector<int> random_permutation(Rng& rng, int n);

/// Row/column relabelling: vertex i of the result is vertex perm[i] of mat.
CoxeterMatrix permuted(const CoxeterMatrix& mat, const std::vector<int>& perm);

SimpleGraph random_graph(Rng& rng, int order, double edge_probability);

/// Nonempty cliques by testing every vertex subset.
std::uint64_t brute_force_cliques(const SimpleGraph& g);

/// Multiplicative order of s_0 s_1 ... s_{n-1} in the geometric
/// representation, computed with Eigen; 0 if it exceeds `limit`.
int coxeter_element_order(const CoxeterMatrix& mat, int limit = 1000);

/// Whether the Gram matrix of the geometric representation is positive
/// definite, i.e. the group is finite.
bool gram_positive_definite(const CoxeterMatrix& mat);

/// Sorted multiset of off-diagonal bonds {i<j} with m >= 3, as strings.
std::vector<std::string> edge_labels(const CoxeterMatrix& mat);

/// Cycle on `bonds.size()` vertices with bond bonds[i] between i and i+1.
CoxeterMatrix circle(const std::vector<BondOrder>& bonds);

/// Path on `bonds.size() + 1` vertices.
CoxeterMatrix path(const std::vector<BondOrder>& bonds);

std::uint64_t binomial(int n, int k);

/// what() of the E thrown by f, or "<no throw>".
template <typename E>
std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return "<no throw>";
}

}  // namespace coxinv::testing

namespace coxinv::testing {

/// Classes of rank-k parabolics with central longest element under
/// elementary equivalence J -> (J \ C) + (C - opp(s)), where C is the
/// component of J + s containing s, C is spherical, and opp is the
/// opposition involution of C. Index k-1 holds rank k.
std::vector<std::uint64_t> elementary_equivalence_classes(
    const CoxeterMatrix& mat);

}  // namespace coxinv::testing
