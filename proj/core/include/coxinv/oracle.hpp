#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxinv/diagram.hpp"

namespace coxinv::oracle {

/// Row-major n x n matrix.
using Matrix = std::vector<double>;

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr double kTolerance = 1e-6;

/// Any oracle failure. Messages name the diagram, the cap and the number of
/// elements reached.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The element cap fired before the enumeration closed.
class CapExceededError : public LimitExceededError {
 public:
  CapExceededError(const std::string& what, std::size_t reached)
      : LimitExceededError(what), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

/// Geometric representation: B(a_i, a_j) = -cos(pi / m_ij), -1 for
/// infinity, and s_i(e_j) = e_j - 2 B(a_i, a_j) e_i.
struct ReflectionRep {
  int n = 0;
  Matrix bilinear;
  std::vector<Matrix> generators;
};

ReflectionRep reflection_rep(const CoxeterMatrix& mat);

Matrix identity(int n);
Matrix multiply(const Matrix& a, const Matrix& b, int n);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// Product of generator matrices in word order; the empty word is Id.
Matrix evaluate_word(const ReflectionRep& rep, const std::vector<int>& word);

/// Open-addressing map from digest to element index.
class DigestIndex {
 public:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  /// Index stored under h, or kAbsent.
  std::uint32_t find(std::uint64_t h) const;
  /// Stores value under h unless h is present; returns the stored index.
  std::pair<std::uint32_t, bool> insert(std::uint64_t h, std::uint32_t value);
  std::size_t size() const { return size_; }

 private:
  void grow();

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t size_ = 0;
};

struct GroupTable {
  ReflectionRep rep;
  std::string name;
  /// size() * n * n entries, element 0 is the identity.
  std::vector<double> data;
  /// right[g * n + i] = index of g * s_i.
  std::vector<std::uint32_t> right;
  DigestIndex by_digest;

  int n() const { return rep.n; }
  std::size_t size() const {
    return rep.n == 0 ? 1 : data.size() / (static_cast<std::size_t>(rep.n) * rep.n);
  }
  std::span<const double> element(std::size_t g) const {
    const std::size_t nn = static_cast<std::size_t>(rep.n) * rep.n;
    return {data.data() + g * nn, nn};
  }
};

/// Hash of the entries rounded to 6 decimals.
std::uint64_t digest(std::span<const double> m);

/// Breadth-first closure of {Id} under right multiplication by the
/// generators. Throws CapExceededError when more than `cap` elements appear,
/// which is how infinite groups are reported.
GroupTable enumerate(const CoxeterMatrix& mat, std::size_t cap = kDefaultCap,
                     const std::string& name = {});

/// Index of the element equal to m, or -1 when m is not in the table.
std::int64_t locate(const GroupTable& table, std::span<const double> m);

struct InvolutionClass {
  std::size_t size = 0;
  int rank = 0;
  std::uint32_t representative = 0;
};

struct InvolutionCensus {
  /// Sorted by representative, which is the smallest index in the class.
  std::vector<InvolutionClass> classes;
  /// Class index per element; -1 for non-involutions.
  std::vector<std::int32_t> class_of;
  std::size_t involution_count = 0;
};

/// Multiplicity of the eigenvalue -1 of an involution matrix.
int involution_rank(std::span<const double> m, int n);

InvolutionCensus involution_classes(const GroupTable& table);

/// Number of classes of each rank 1..n, indexed from 0.
std::vector<std::uint64_t> rank_histogram(const InvolutionCensus& census,
                                          int n);

}  // namespace coxinv::oracle
