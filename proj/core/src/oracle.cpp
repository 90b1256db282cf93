#include "coxinv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace coxinv::oracle {

namespace {

double half_cos_pi_over(BondOrder m) {
  switch (m) {
    case 2:
      return 0.0;
    case 3:
      return 0.5;
    case 4:
      return std::numbers::sqrt2 / 2;
    case 6:
      return std::numbers::sqrt3 / 2;
    default:
      return std::cos(std::numbers::pi / m);
  }
}

std::string context(const GroupTable& t, std::size_t cap) {
  return " [diagram " + (t.name.empty() ? std::string("<unnamed>") : t.name) +
         ", cap " + std::to_string(cap) + ", reached " +
         std::to_string(t.size()) + "]";
}

// Rank by Gaussian elimination with partial pivoting; also reports whether
// some pivot landed in the ambiguous band around the tolerance.
int numeric_rank(Matrix a, int n, bool& ambiguous) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = rank;
    for (int r = rank + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    const double p = std::abs(a[pivot * n + col]);
    if (p > kTolerance * 1e-3 && p < kTolerance * 1e3) ambiguous = true;
    if (p <= kTolerance) continue;
    for (int c = 0; c < n; ++c) std::swap(a[rank * n + c], a[pivot * n + c]);
    for (int r = rank + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[rank * n + col];
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[rank * n + c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ReflectionRep reflection_rep(const CoxeterMatrix& mat) {
  ReflectionRep rep;
  const int n = rep.n = mat.rank();
  rep.bilinear.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BondOrder m = mat(i, j);
      rep.bilinear[i * n + j] =
          i == j ? 1.0 : is_infinite(m) ? -1.0 : -half_cos_pi_over(m);
    }
  }
  for (int i = 0; i < n; ++i) {
    Matrix s = identity(n);
    for (int j = 0; j < n; ++j) s[i * n + j] -= 2 * rep.bilinear[i * n + j];
    rep.generators.push_back(std::move(s));
  }
  return rep;
}

Matrix identity(int n) {
  Matrix m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, int n) {
  Matrix c(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) {
      const double x = a[i * n + t];
      if (x == 0.0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += x * b[t * n + j];
    }
  }
  return c;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

Matrix evaluate_word(const ReflectionRep& rep, const std::vector<int>& word) {
  Matrix m = identity(rep.n);
  for (int g : word) {
    if (g < 0 || g >= rep.n) {
      throw ValidationError("generator index " + std::to_string(g) +
                            " out of range");
    }
    m = multiply(m, rep.generators[g], rep.n);
  }
  return m;
}

std::uint64_t digest(std::span<const double> m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : m) {
    // Adding 1.5 * 2^52 rounds to the nearest integer in the low mantissa.
    const double shifted = x * 1e6 + 6755399441055744.0;
    std::uint64_t q;
    std::memcpy(&q, &shifted, sizeof q);
    q ^= q >> 33;
    q *= 0xff51afd7ed558ccdULL;
    q ^= q >> 33;
    h = (h ^ q) * 0x100000001b3ULL;
  }
  return h;
}

std::uint32_t DigestIndex::find(std::uint64_t h) const {
  if (keys_.empty()) return kAbsent;
  const std::size_t mask = keys_.size() - 1;
  for (std::size_t slot = h & mask;; slot = (slot + 1) & mask) {
    if (values_[slot] == kAbsent) return kAbsent;
    if (keys_[slot] == h) return values_[slot];
  }
}

std::pair<std::uint32_t, bool> DigestIndex::insert(std::uint64_t h,
                                                   std::uint32_t value) {
  if (2 * (size_ + 1) > keys_.size()) grow();
  const std::size_t mask = keys_.size() - 1;
  for (std::size_t slot = h & mask;; slot = (slot + 1) & mask) {
    if (values_[slot] == kAbsent) {
      keys_[slot] = h;
      values_[slot] = value;
      ++size_;
      return {value, true};
    }
    if (keys_[slot] == h) return {values_[slot], false};
  }
}

void DigestIndex::grow() {
  std::vector<std::uint64_t> keys = std::move(keys_);
  std::vector<std::uint32_t> values = std::move(values_);
  const std::size_t capacity = keys.empty() ? 1024 : 2 * keys.size();
  keys_.assign(capacity, 0);
  values_.assign(capacity, kAbsent);
  size_ = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (values[i] != kAbsent) insert(keys[i], values[i]);
  }
}

std::int64_t locate(const GroupTable& table, std::span<const double> m) {
  const auto g = table.by_digest.find(digest(m));
  if (g == DigestIndex::kAbsent) return -1;
  if (max_abs_diff(table.element(g), m) > kTolerance) return -1;
  return g;
}

GroupTable enumerate(const CoxeterMatrix& mat, std::size_t cap,
                     const std::string& name) {
  GroupTable t;
  t.rep = reflection_rep(mat);
  t.name = name;
  const int n = t.n();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const Matrix id = identity(n);
  t.data = id;
  t.by_digest.insert(digest(id), 0);
  if (n == 0) return t;

  Matrix next(nn);
  t.right.reserve(std::min<std::size_t>(cap, 1 << 20) * n);
  // Elements are appended in BFS order, so the table itself is the queue.
  for (std::size_t g = 0; g < t.size(); ++g) {
    for (int i = 0; i < n; ++i) {
      // (g * s_i)[r][j] = g[r][j] - 2 g[r][i] B[i][j]
      const double* src = t.data.data() + g * nn;
      const double* b = t.rep.bilinear.data() + static_cast<std::size_t>(i) * n;
      for (int r = 0; r < n; ++r) {
        const double f = 2 * src[r * n + i];
        for (int c = 0; c < n; ++c) next[r * n + c] = src[r * n + c] - f * b[c];
      }
      const std::uint64_t h = digest(next);
      const auto known = t.by_digest.find(h);
      if (known != DigestIndex::kAbsent) {
        if (max_abs_diff(t.element(known), next) > kTolerance) {
          throw OracleError("hash collision between distinct elements; "
                            "adjust the tolerance" + context(t, cap));
        }
        t.right.push_back(known);
        continue;
      }
      if (t.size() >= cap) {
        throw CapExceededError(
            "element cap exceeded (the group may be infinite)" +
                context(t, cap),
            t.size());
      }
      const auto index = static_cast<std::uint32_t>(t.size());
      t.by_digest.insert(h, index);
      t.right.push_back(index);
      t.data.insert(t.data.end(), next.begin(), next.end());
    }
  }
  return t;
}

int involution_rank(std::span<const double> m, int n) {
  Matrix minus(m.begin(), m.end());
  Matrix plus(m.begin(), m.end());
  for (int i = 0; i < n; ++i) {
    minus[i * n + i] -= 1.0;
    plus[i * n + i] += 1.0;
  }
  bool ambiguous = false;
  const int negative = numeric_rank(std::move(minus), n, ambiguous);
  const int positive = numeric_rank(std::move(plus), n, ambiguous);
  if (ambiguous || negative + positive != n) {
    throw OracleError("ambiguous eigenspace dimensions (" +
                      std::to_string(negative) + " + " +
                      std::to_string(positive) + " vs n = " +
                      std::to_string(n) + ")");
  }
  return negative;
}

InvolutionCensus involution_classes(const GroupTable& table) {
  InvolutionCensus census;
  const int n = table.n();
  const std::size_t count = table.size();
  census.class_of.assign(count, -1);
  std::vector<bool> is_involution(count, false);
  for (std::size_t g = 1; g < count; ++g) {
    const Matrix m(table.element(g).begin(), table.element(g).end());
    is_involution[g] = max_abs_diff(multiply(m, m, n), identity(n)) <= kTolerance;
    census.involution_count += is_involution[g];
  }

  Matrix conj(static_cast<std::size_t>(n) * n);
  for (std::size_t seed = 1; seed < count; ++seed) {
    if (!is_involution[seed] || census.class_of[seed] >= 0) continue;
    const auto id = static_cast<std::int32_t>(census.classes.size());
    InvolutionClass cls;
    cls.representative = static_cast<std::uint32_t>(seed);
    cls.rank = involution_rank(table.element(seed), n);
    std::vector<std::uint32_t> queue{cls.representative};
    census.class_of[seed] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int i = 0; i < n; ++i) {
        // s_i * (x * s_i): left multiplication by s_i changes row i only.
        const auto xs = table.element(table.right[queue[head] * n + i]);
        std::copy(xs.begin(), xs.end(), conj.begin());
        for (int c = 0; c < n; ++c) {
          double v = 0.0;
          for (int t = 0; t < n; ++t) {
            v += table.rep.generators[i][i * n + t] * xs[t * n + c];
          }
          conj[i * n + c] = v;
        }
        const std::int64_t y = locate(table, conj);
        if (y < 0) {
          throw OracleError("conjugate not found in the table" +
                            std::string(" [diagram ") + table.name + "]");
        }
        if (census.class_of[y] < 0) {
          census.class_of[y] = id;
          queue.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    cls.size = queue.size();
    census.classes.push_back(cls);
  }
  return census;
}

std::vector<std::uint64_t> rank_histogram(const InvolutionCensus& census,
                                          int n) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  for (const auto& cls : census.classes) ++hist[cls.rank - 1];
  return hist;
}

}  // namespace coxinv::oracle
