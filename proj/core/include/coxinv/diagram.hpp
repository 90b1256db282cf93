#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "coxinv/errors.hpp"

namespace coxinv {

/// Order m_ij of the product s_i s_j. 1 on the diagonal, >= 2 off it.
using BondOrder = std::uint32_t;

/// Sentinel for m_ij = infinity. Never equal to any finite order.
inline constexpr BondOrder kInfinity = std::numeric_limits<BondOrder>::max();

/// Largest rank representable by VertexSet.
inline constexpr int kMaxRank = 64;

constexpr bool is_infinite(BondOrder m) { return m == kInfinity; }

/// Diagram edge: m >= 3, including infinity.
constexpr bool is_edge(BondOrder m) { return m >= 3; }

/// Finite odd bond (unlabelled edges count, m = 3).
constexpr bool is_odd_bond(BondOrder m) {
  return m != kInfinity && m >= 3 && m % 2 == 1;
}

std::string bond_to_string(BondOrder m);

/// A subset of diagram vertices {0, ..., n-1}, stored as a bitmask.
///
/// Equality is set equality. The spaceship operator orders by the raw mask
/// (a total order suitable for containers); lex_less() gives the
/// lexicographic order on ascending member sequences used for reporting.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static VertexSet of(std::initializer_list<int> members);
  static VertexSet of(const std::vector<int>& members);

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }

  constexpr VertexSet with(int i) const {
    return from_bits(bits_ | (std::uint64_t{1} << i));
  }
  constexpr VertexSet without(int i) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << i));
  }

  /// Smallest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  /// Largest member, or -1 for the empty set.
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<int> members() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(std::countr_zero(b));
    }
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member sequences.
bool lex_less(VertexSet a, VertexSet b);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Symmetric matrix of bond orders, i.e. a Coxeter diagram.
///
/// Immutable after construction. The constructor validates the Coxeter
/// matrix axioms and throws ValidationError naming the offending entry.
/// Optional vertex labels are carried for presentation only.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(int rank, std::vector<BondOrder> entries,
                std::vector<std::string> labels = {});

  static CoxeterMatrix from_rows(
      const std::vector<std::vector<BondOrder>>& rows,
      std::vector<std::string> labels = {});

  int rank() const { return rank_; }
  BondOrder operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * rank_ + j];
  }
  VertexSet vertices() const { return VertexSet::first(rank_); }

  /// Vertices joined to i by a diagram edge (m >= 3 or infinity).
  VertexSet neighbours(int i) const { return neighbours_[i]; }
  /// Vertices joined to i by a finite odd bond.
  VertexSet odd_neighbours(int i) const { return odd_neighbours_[i]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of vertex i; defaults to the 1-based index.
  std::string label(int i) const;

  const std::vector<BondOrder>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  int rank_ = 0;
  std::vector<BondOrder> entries_;
  std::vector<std::string> labels_;
  std::vector<VertexSet> neighbours_;
  std::vector<VertexSet> odd_neighbours_;
};

/// Parses `{"matrix": [[int]], "labels": [string]?}` with 0 = infinity.
CoxeterMatrix parse_matrix(std::string_view json_text);

/// Serializes to the same schema (0 = infinity); labels when present.
std::string to_json(const CoxeterMatrix& mat);

/// Parses the edge-list format: a `rank n` header followed by lines
/// `i j m` (0-based indices, m may be `inf`). Unlisted pairs are m = 2.
/// Blank lines and `#` comments are ignored.
CoxeterMatrix parse_edge_list(std::string_view text);

/// Builds the Coxeter matrix of a named type, e.g. "A4", "~E7",
/// "Delta(2,3,inf)", "U5" or disjoint unions "A1+I2(4)".
CoxeterMatrix parse_name(std::string_view name);

/// Full subdiagram on J, rows ordered as J.members().
CoxeterMatrix induced(const CoxeterMatrix& mat, VertexSet J);

/// Block-diagonal sum; the vertices of b follow those of a.
CoxeterMatrix disjoint_union(const CoxeterMatrix& a, const CoxeterMatrix& b);

/// Connected components of the diagram, sorted by smallest member.
std::vector<VertexSet> components(const CoxeterMatrix& mat);

/// Connected components of the full subdiagram on J, in ambient indices.
std::vector<VertexSet> components(const CoxeterMatrix& mat, VertexSet J);

/// { i not in K : i is joined by an edge to some k in K }.
VertexSet neighbourhood(const CoxeterMatrix& mat, VertexSet K);

}  // namespace coxinv
