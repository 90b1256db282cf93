#include "support.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace coxinv::testing {

CoxeterMatrix random_matrix(Rng& rng, int rank,
                            const std::vector<BondOrder>& bonds) {
  std::vector<BondOrder> entries(static_cast<std::size_t>(rank) * rank, 1);
  std::uniform_int_distribution<std::size_t> pick(0, bonds.size() - 1);
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      entries[i * rank + j] = entries[j * rank + i] = bonds[pick(rng)];
    }
  }
  return CoxeterMatrix(rank, std::move(entries));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

CoxeterMatrix permuted(const CoxeterMatrix& mat, const std::vector<int>& perm) {
  const int n = mat.rank();
  std::vector<BondOrder> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries[i * n + j] = mat(perm[i], perm[j]);
  }
  return CoxeterMatrix(n, std::move(entries));
}

SimpleGraph random_graph(Rng& rng, int order, double edge_probability) {
  SimpleGraph g(order);
  std::bernoulli_distribution coin(edge_probability);
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

std::uint64_t brute_force_cliques(const SimpleGraph& g) {
  const int n = g.order();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      for (int b = a + 1; b < n && clique; ++b) {
        if ((mask >> a & 1) && (mask >> b & 1) && !g.adjacent(a, b)) {
          clique = false;
        }
      }
    }
    count += clique;
  }
  return count;
}

namespace {

Eigen::MatrixXd gram(const CoxeterMatrix& mat) {
  const int n = mat.rank();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BondOrder m = mat(i, j);
      b(i, j) = i == j          ? 1.0
                : is_infinite(m) ? -1.0
                                 : -std::cos(std::numbers::pi / m);
    }
  }
  return b;
}

}  // namespace

bool gram_positive_definite(const CoxeterMatrix& mat) {
  if (mat.rank() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram(mat));
  return solver.eigenvalues().minCoeff() > 1e-9;
}

int coxeter_element_order(const CoxeterMatrix& mat, int limit) {
  const int n = mat.rank();
  const Eigen::MatrixXd b = gram(mat);
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    s.row(i) -= 2 * b.row(i);
    c = c * s;
  }
  Eigen::MatrixXd power = c;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= limit; ++k) {
    if ((power - id).cwiseAbs().maxCoeff() < 1e-8) return k;
    power = power * c;
  }
  return 0;
}

std::vector<std::string> edge_labels(const CoxeterMatrix& mat) {
  std::vector<std::string> labels;
  for (int i = 0; i < mat.rank(); ++i) {
    for (int j = i + 1; j < mat.rank(); ++j) {
      if (is_edge(mat(i, j))) labels.push_back(bond_to_string(mat(i, j)));
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

CoxeterMatrix circle(const std::vector<BondOrder>& bonds) {
  const int n = static_cast<int>(bonds.size());
  std::vector<BondOrder> entries(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) entries[i * n + i] = 1;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    entries[i * n + j] = entries[j * n + i] = bonds[i];
  }
  return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix path(const std::vector<BondOrder>& bonds) {
  const int n = static_cast<int>(bonds.size()) + 1;
  std::vector<BondOrder> entries(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) entries[i * n + i] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    entries[i * n + i + 1] = entries[(i + 1) * n + i] = bonds[i];
  }
  return CoxeterMatrix(n, std::move(entries));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace coxinv::testing

namespace coxinv::testing {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

VertexSet component_of(const CoxeterMatrix& mat, VertexSet U, int s) {
  VertexSet seen = VertexSet::of({s});
  std::vector<int> stack{s};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    U.for_each([&](int w) {
      if (!seen.contains(w) && is_edge(mat(v, w))) {
        seen = seen.with(w);
        stack.push_back(w);
      }
    });
  }
  return seen;
}

std::vector<int> members(VertexSet C) {
  std::vector<int> out;
  C.for_each([&](int v) { out.push_back(v); });
  return out;
}

int degree_in(const CoxeterMatrix& mat, VertexSet C, int v) {
  int d = 0;
  C.for_each([&](int w) { d += w != v && is_edge(mat(v, w)); });
  return d;
}

// Walks from `from` away from `prev` inside C until a branch or a leaf.
std::vector<int> arm(const CoxeterMatrix& mat, VertexSet C, int prev,
                     int from) {
  std::vector<int> out{from};
  while (true) {
    const int v = out.back();
    std::vector<int> next;
    C.for_each([&](int w) {
      if (w != v && w != prev && is_edge(mat(v, w))) next.push_back(w);
    });
    if (next.size() != 1) return out;
    prev = v;
    out.push_back(next[0]);
  }
}

// Image of s under conjugation by the longest element of the irreducible
// spherical component C.
int opposite(const CoxeterMatrix& mat, VertexSet C, int s) {
  const auto type = classify_irreducible(induced(mat, C));
  const auto vs = members(C);
  switch (type.family) {
    case Family::A: {
      if (vs.size() == 1) return s;
      int end = -1;
      for (int v : vs) {
        if (degree_in(mat, C, v) == 1) end = v;
      }
      auto path = arm(mat, C, -1, end);
      const auto at = std::find(path.begin(), path.end(), s) - path.begin();
      return path[path.size() - 1 - at];
    }
    case Family::I2:
      if (type.param % 2 == 0) return s;
      return vs[0] == s ? vs[1] : vs[0];
    case Family::D:
    case Family::E: {
      if (type.family == Family::D && type.rank % 2 == 0) return s;
      if (type.family == Family::E && type.rank != 6) return s;
      int branch = -1;
      for (int v : vs) {
        if (degree_in(mat, C, v) == 3) branch = v;
      }
      std::vector<std::vector<int>> arms;
      C.for_each([&](int w) {
        if (w != branch && is_edge(mat(branch, w))) {
          arms.push_back(arm(mat, C, branch, w));
        }
      });
      // Swap the two arms of equal length (D: length 1, E6: length 2).
      for (std::size_t a = 0; a < arms.size(); ++a) {
        for (std::size_t b = 0; b < arms.size(); ++b) {
          if (a == b || arms[a].size() != arms[b].size()) continue;
          for (std::size_t i = 0; i < arms[a].size(); ++i) {
            if (arms[a][i] == s) return arms[b][i];
          }
        }
      }
      return s;
    }
    default:
      return s;
  }
}

}  // namespace

std::vector<std::uint64_t> elementary_equivalence_classes(
    const CoxeterMatrix& mat) {
  const int n = mat.rank();
  std::vector<std::uint64_t> out(n, 0);
  std::vector<std::vector<VertexSet>> by_rank(n + 1);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet J;
    for (int v = 0; v < n; ++v) {
      if (bits >> v & 1) J = J.with(v);
    }
    if (has_central_longest(decompose(mat, J))) by_rank[J.size()].push_back(J);
  }
  for (int k = 1; k <= n; ++k) {
    const auto& sets = by_rank[k];
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
    std::vector<int> parent(sets.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const VertexSet J = sets[i];
      for (int s = 0; s < n; ++s) {
        if (J.contains(s)) continue;
        const VertexSet C = component_of(mat, J.with(s), s);
        if (!is_spherical(decompose(mat, C))) continue;
        VertexSet image;
        J.for_each([&](int v) {
          if (!C.contains(v)) image = image.with(v);
        });
        const int t = opposite(mat, C, s);
        C.for_each([&](int v) {
          if (v != t) image = image.with(v);
        });
        parent[find_root(parent, i)] = find_root(parent, index.at(image));
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      out[k - 1] += find_root(parent, i) == static_cast<int>(i);
    }
  }
  return out;
}

}  // namespace coxinv::testing
