#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxinv/classify.hpp"
#include "coxinv/diagram.hpp"

namespace coxinv {

/// Guards on subset enumeration. Exceeding either throws
/// LimitExceededError.
struct EnumerationLimits {
  int max_rank = 24;
  std::uint64_t subset_budget = 10'000'000;
};

/// One k-odd graph (or O-graph): vertices are the rank-k vertex sets whose
/// components all have central longest element, sorted lexicographically.
struct OddGraph {
  int k = 0;
  std::vector<VertexSet> vertices;
  /// Pairs of vertex indices, first < second, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Components are numbered in order of their lex-smallest vertex.
  std::vector<std::size_t> component_id;
  std::size_t component_count = 0;
};

/// J and K differ by swapping l in J for m in K across a finite odd bond,
/// with l isolated in J and m isolated in K.
bool odd_adjacent(const CoxeterMatrix& mat, VertexSet J, VertexSet K);

/// All rank-k vertex sets with central longest element, lex-sorted.
std::vector<VertexSet> central_subsets(const CoxeterMatrix& mat, int k,
                                       const EnumerationLimits& limits = {});

/// Builds the k-odd graph. Edges come from odd bonds {i,j}: every central
/// (k-1)-set avoiding i, j and their neighbours joins K+i to K+j.
OddGraph gamma_k(const CoxeterMatrix& mat, int k,
                 const EnumerationLimits& limits = {});

/// Same graph, edges found by testing odd_adjacent on all vertex pairs.
OddGraph gamma_k_pairwise(const CoxeterMatrix& mat, int k,
                          const EnumerationLimits& limits = {});

/// O-graph: vertices of gamma_k, edges between vertex sets of equal type.
/// For k = 1 this is gamma_k itself.
OddGraph omega_k(const CoxeterMatrix& mat, int k,
                 const EnumerationLimits& limits = {});

struct ClassRepresentative {
  int rank = 0;
  VertexSet subset;
  TypeDecomposition type;
  /// Generator indices of a word for the longest element of W_subset.
  std::vector<int> word;
};

struct InvolutionClassReport {
  /// per_rank[k-1] = number of components of the k-odd graph.
  std::vector<std::size_t> per_rank;
  std::size_t total = 0;
  /// Ordered by rank, then by lex-smallest vertex set.
  std::vector<ClassRepresentative> representatives;
};

/// Conjugacy classes of involutions, one representative per class.
InvolutionClassReport cc2(const CoxeterMatrix& mat,
                          const EnumerationLimits& limits = {});

/// For each component C of J (by smallest member), the generators of C in
/// ascending order repeated h(C)/2 times. Requires has_central_longest.
std::vector<int> longest_element_word(const CoxeterMatrix& mat, VertexSet J);

/// Inclusion-maximal vertex sets spanning finite parabolics, lex-sorted.
std::vector<VertexSet> maximal_spherical_subsets(
    const CoxeterMatrix& mat, const EnumerationLimits& limits = {});

struct Bounds {
  std::uint64_t omega_lower = 0;
  std::uint64_t maximal_spherical_upper = 0;
  std::uint64_t numeric_upper = 0;
  bool is_finite = false;
};

Bounds bounds(const CoxeterMatrix& mat, const EnumerationLimits& limits = {});

/// Graphviz DOT. Nodes are named W_{a,b,...} from `labels` (1-based
/// indices when empty) and grouped into one cluster per component.
std::string export_dot(const OddGraph& g,
                       const std::vector<std::string>& labels = {},
                       std::string_view graph_name = "");

/// "a+b+...+z=total". For infinite groups the top rank (always 0) is
/// omitted.
std::string format_rank_sum(const InvolutionClassReport& report,
                            bool is_finite);

/// JSON report: {"per_rank", "total", "classes", "bounds"?}, keys sorted.
std::string to_json(const InvolutionClassReport& report,
                    const std::optional<Bounds>& b = std::nullopt);

std::string to_json(const OddGraph& g, const CoxeterMatrix& mat);

}  // namespace coxinv
