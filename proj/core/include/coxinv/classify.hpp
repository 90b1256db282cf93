#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxinv/diagram.hpp"

namespace coxinv {

using BigInt = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { A, B, D, E, F, G, H, I2, NonSpherical };

/// Type label of a connected diagram. Low-rank coincidences are normalized
/// (I2(3) = A2, I2(4) = B2, I2(6) = G2, I2(5) and H2 are both I2(5)), so two
/// labels compare equal exactly when the diagrams are isomorphic, except
/// that all non-spherical diagrams of one rank share a label.
struct IrreducibleType {
  Family family = Family::NonSpherical;
  int rank = 0;
  /// Dihedral order, meaningful for I2 only.
  BondOrder param = 0;

  static IrreducibleType non_spherical(int rank) {
    return {Family::NonSpherical, rank, 0};
  }
  /// Label of the rank-2 diagram with bond m >= 3, normalized.
  static IrreducibleType dihedral(BondOrder m);

  bool spherical() const { return family != Family::NonSpherical; }

  friend auto operator<=>(const IrreducibleType&,
                          const IrreducibleType&) = default;
};

std::string to_string(const IrreducibleType& t);

/// Multiset of irreducible components, kept sorted.
class TypeDecomposition {
 public:
  TypeDecomposition() = default;
  explicit TypeDecomposition(std::vector<IrreducibleType> parts);

  const std::vector<IrreducibleType>& parts() const { return parts_; }
  int rank() const;

  friend auto operator<=>(const TypeDecomposition&,
                          const TypeDecomposition&) = default;

 private:
  std::vector<IrreducibleType> parts_;
};

/// Sorted sum such as "A1+A1+B3"; the empty decomposition prints as "".
std::string to_string(const TypeDecomposition& dec);

/// Type of a connected diagram. Throws ValidationError when the diagram
/// is empty or disconnected.
IrreducibleType classify_irreducible(const CoxeterMatrix& mat);

/// Type of the full subdiagram on a connected vertex set, without copying.
IrreducibleType classify_component(const CoxeterMatrix& mat,
                                   VertexSet component);

TypeDecomposition decompose(const CoxeterMatrix& mat, VertexSet J);

bool is_spherical(const TypeDecomposition& dec);

/// Whether the longest element of this irreducible type is central.
bool is_central_type(const IrreducibleType& t);

/// Every part has central longest element (vacuously true when empty).
bool has_central_longest(const TypeDecomposition& dec);

/// Throws DomainError for non-spherical types.
int coxeter_number(const IrreducibleType& t);

BigInt group_order(const IrreducibleType& t);
BigInt group_order(const TypeDecomposition& dec);

}  // namespace coxinv
