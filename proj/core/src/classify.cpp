#include "coxinv/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace coxinv {

IrreducibleType IrreducibleType::dihedral(BondOrder m) {
  switch (m) {
    case 3:
      return {Family::A, 2, 0};
    case 4:
      return {Family::B, 2, 0};
    case 6:
      return {Family::G, 2, 0};
    default:
      break;
  }
  if (is_infinite(m)) return non_spherical(2);
  return {Family::I2, 2, m};
}

std::string to_string(const IrreducibleType& t) {
  const std::string r = std::to_string(t.rank);
  switch (t.family) {
    case Family::A: return "A" + r;
    case Family::B: return "B" + r;
    case Family::D: return "D" + r;
    case Family::E: return "E" + r;
    case Family::F: return "F" + r;
    case Family::G: return "G" + r;
    case Family::H: return "H" + r;
    case Family::I2: return "I2(" + std::to_string(t.param) + ")";
    case Family::NonSpherical: return "X" + r;
  }
  return "?";
}

TypeDecomposition::TypeDecomposition(std::vector<IrreducibleType> parts)
    : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
}

int TypeDecomposition::rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0,
                         [](int acc, const auto& p) { return acc + p.rank; });
}

std::string to_string(const TypeDecomposition& dec) {
  std::string out;
  for (const auto& part : dec.parts()) {
    if (!out.empty()) out += '+';
    out += to_string(part);
  }
  return out;
}

namespace {

// Decision tree over a connected vertex set of size >= 3. Local indices
// 0..r-1 refer to `verts`.
IrreducibleType classify_tree(const CoxeterMatrix& mat,
                              const std::vector<int>& verts) {
  const int r = static_cast<int>(verts.size());
  const auto none = IrreducibleType::non_spherical(r);

  std::vector<std::uint64_t> adj(r, 0);
  std::vector<int> degree(r, 0);
  int edges = 0;
  struct Labelled {
    int a, b;
    BondOrder m;
  };
  std::vector<Labelled> labelled;

  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      const BondOrder m = mat(verts[a], verts[b]);
      if (m == 2) continue;
      // Infinite bonds and labels >= 6 never occur in rank >= 3 finite types.
      if (is_infinite(m) || m >= 6) return none;
      ++edges;
      ++degree[a];
      ++degree[b];
      adj[a] |= std::uint64_t{1} << b;
      adj[b] |= std::uint64_t{1} << a;
      if (m >= 4) {
        labelled.push_back({a, b, m});
        if (labelled.size() > 1) return none;
      }
    }
  }
  if (edges != r - 1) return none;  // contains a cycle

  int branch = -1;
  for (int v = 0; v < r; ++v) {
    if (degree[v] >= 4) return none;
    if (degree[v] == 3) {
      if (branch >= 0) return none;
      branch = v;
    }
  }

  if (branch >= 0) {
    if (!labelled.empty()) return none;
    std::array<int, 3> legs{};
    int leg = 0;
    for (std::uint64_t nb = adj[branch]; nb != 0; nb &= nb - 1) {
      int prev = branch;
      int cur = std::countr_zero(nb);
      int length = 1;
      while (degree[cur] == 2) {
        const std::uint64_t next =
            adj[cur] & ~(std::uint64_t{1} << prev);
        prev = cur;
        cur = std::countr_zero(next);
        ++length;
      }
      legs[leg++] = length;
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {Family::D, r, 0};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
      return {Family::E, r, 0};
    }
    return none;
  }

  // A path.
  if (labelled.empty()) return {Family::A, r, 0};
  const auto& l = labelled.front();
  const bool at_end = degree[l.a] == 1 || degree[l.b] == 1;
  if (l.m == 4) {
    if (at_end) return {Family::B, r, 0};
    if (r == 4) return {Family::F, 4, 0};
    return none;
  }
  // l.m == 5
  if (at_end && (r == 3 || r == 4)) return {Family::H, r, 0};
  return none;
}

IrreducibleType classify_vertices(const CoxeterMatrix& mat,
                                  const std::vector<int>& verts) {
  switch (verts.size()) {
    case 1:
      return {Family::A, 1, 0};
    case 2: {
      const BondOrder m = mat(verts[0], verts[1]);
      if (m < 3) throw ValidationError("classify: vertex set is disconnected");
      return IrreducibleType::dihedral(m);
    }
    default:
      return classify_tree(mat, verts);
  }
}

}  // namespace

IrreducibleType classify_component(const CoxeterMatrix& mat,
                                   VertexSet component) {
  if (component.empty()) throw ValidationError("classify: empty vertex set");
  return classify_vertices(mat, component.members());
}

IrreducibleType classify_irreducible(const CoxeterMatrix& mat) {
  if (mat.rank() == 0) throw ValidationError("classify: empty diagram");
  if (components(mat).size() != 1) {
    throw ValidationError("classify: diagram is disconnected");
  }
  return classify_component(mat, mat.vertices());
}

TypeDecomposition decompose(const CoxeterMatrix& mat, VertexSet J) {
  if (J.highest() >= mat.rank()) {
    throw ValidationError("vertex " + std::to_string(J.highest()) +
                          " out of range for rank " +
                          std::to_string(mat.rank()));
  }
  std::vector<IrreducibleType> parts;
  for (VertexSet comp : components(mat, J)) {
    parts.push_back(classify_component(mat, comp));
  }
  return TypeDecomposition(std::move(parts));
}

bool is_spherical(const TypeDecomposition& dec) {
  return std::all_of(dec.parts().begin(), dec.parts().end(),
                     [](const auto& p) { return p.spherical(); });
}

bool is_central_type(const IrreducibleType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::B: return true;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank == 7 || t.rank == 8;
    case Family::F: return true;
    case Family::G: return true;
    case Family::H: return t.rank == 3 || t.rank == 4;
    case Family::I2: return !is_infinite(t.param) && t.param % 2 == 0;
    case Family::NonSpherical: return false;
  }
  return false;
}

bool has_central_longest(const TypeDecomposition& dec) {
  return std::all_of(dec.parts().begin(), dec.parts().end(), is_central_type);
}

int coxeter_number(const IrreducibleType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    case Family::H: return t.rank == 3 ? 10 : t.rank == 4 ? 30 : 5;
    case Family::I2: return static_cast<int>(t.param);
    case Family::NonSpherical: break;
  }
  throw DomainError("Coxeter number of non-spherical type " + to_string(t));
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

BigInt group_order(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (BigInt(1) << n) * factorial(n);
    case Family::D: return (BigInt(1) << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040)
                                             : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return n == 3 ? BigInt(120) : n == 4 ? BigInt(14400)
                                                         : BigInt(10);
    case Family::I2: return BigInt(2) * t.param;
    case Family::NonSpherical: break;
  }
  throw DomainError("order of non-spherical type " + to_string(t));
}

BigInt group_order(const TypeDecomposition& dec) {
  BigInt order = 1;
  for (const auto& part : dec.parts()) order *= group_order(part);
  return order;
}

}  // namespace coxinv
