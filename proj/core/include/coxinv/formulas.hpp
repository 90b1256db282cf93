#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "coxinv/diagram.hpp"

namespace coxinv {

/// Bond orders of a triangle group Delta(p,q,r); an unordered triple.
struct TriangleParams {
  BondOrder p = 2;
  BondOrder q = 2;
  BondOrder r = 2;
};

/// True iff some bond is infinite or 1/p + 1/q + 1/r <= 1.
bool is_infinite_triangle(const TriangleParams& t);

/// Closed-form count for infinite triangle groups. Finite triangles throw
/// DomainError; route those through cc2().
std::uint64_t cc2_triangle(const TriangleParams& t);

/// Spherical A_n (n >= 1) and B_n = C_n (n >= 2).
std::uint64_t cc2_A(int n);
std::uint64_t cc2_C(int n);

/// Affine ~A_n and ~C_n (n >= 2).
std::uint64_t cc2_affine_A(int n);
std::uint64_t cc2_affine_C(int n);

/// A single cycle on n+1 >= 3 vertices with all bonds finite and odd and no
/// H3 subdiagram. Throws DomainError when the diagram is not of that shape.
std::uint64_t cc2_odd_circle(const CoxeterMatrix& mat);

/// Simple graph on at most 64 vertices, stored as adjacency masks.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int order() const { return static_cast<int>(adjacency_.size()); }
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const { return adjacency_[a].contains(b); }
  VertexSet neighbours(int v) const { return adjacency_[v]; }

 private:
  std::vector<VertexSet> adjacency_;
};

/// Edge-list text with header `rank n` and lines `i j` (an optional third
/// field must be 2). Listed pairs are edges, i.e. commuting generators.
SimpleGraph parse_presentation_graph(std::string_view text);

/// Right-angled Coxeter matrix of a presentation graph: m = 2 on edges,
/// infinity on non-edges.
CoxeterMatrix racg_matrix(const SimpleGraph& graph);

/// Number of nonempty cliques of the presentation graph.
std::uint64_t cc2_racg(const SimpleGraph& graph);

/// Classes of elements of order m in a free product: the sum.
std::uint64_t ccm_free_product(std::span<const std::uint64_t> ccms);

/// Classes of elements of order m in G x H: the sum over k, l with
/// lcm(k, l) = m of cc_k(G) * cc_l(H). Order 1 counts once (the identity)
/// unless the map says otherwise.
std::uint64_t ccm_direct_product(const std::map<int, std::uint64_t>& cc_g,
                                 const std::map<int, std::uint64_t>& cc_h,
                                 int m);

}  // namespace coxinv
