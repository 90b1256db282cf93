// Named Coxeter types. Vertex numbering follows the usual figures:
// paths are numbered left to right, ~A_n is the circle s_0 ... s_n, and the
// branch vertex of E_n / ~E_n sits at the third vertex of the long path.

#include <cctype>
#include <charconv>
#include <string>

#include "coxinv/diagram.hpp"

namespace coxinv {

namespace {

class DiagramBuilder {
 public:
  explicit DiagramBuilder(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * n, 2) {
    for (int i = 0; i < n; ++i) entries_[i * n + i] = 1;
  }

  DiagramBuilder& bond(int i, int j, BondOrder m) {
    entries_[i * n_ + j] = m;
    entries_[j * n_ + i] = m;
    return *this;
  }

  /// Bonds i -- i+1 of order 3 for first <= i < last.
  DiagramBuilder& path(int first, int last) {
    for (int i = first; i < last; ++i) bond(i, i + 1, 3);
    return *this;
  }

  CoxeterMatrix build() const { return CoxeterMatrix(n_, entries_); }

 private:
  int n_;
  std::vector<BondOrder> entries_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void malformed(std::string_view term, const std::string& why) {
  throw ValidationError("cannot parse type '" + std::string(term) + "': " +
                        why);
}

int parse_rank(std::string_view term, std::string_view digits) {
  if (digits.empty()) malformed(term, "missing rank");
  int value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc{} || ptr != end) malformed(term, "bad rank");
  return value;
}

BondOrder parse_param(std::string_view term, std::string_view text) {
  text = trim(text);
  if (text == "inf") return kInfinity;
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    malformed(term, "bad parameter '" + std::string(text) + "'");
  }
  if (value < 2) malformed(term, "parameter must be >= 2 or inf");
  return static_cast<BondOrder>(value);
}

void require_rank(std::string_view term, bool ok, const char* range) {
  if (!ok) {
    throw ValidationError("rank out of range in '" + std::string(term) +
                          "': requires " + range);
  }
}

/// Contents of "prefix(...)" split on commas, or empty if no match.
std::vector<std::string_view> call_args(std::string_view term,
                                        std::string_view prefix) {
  if (!term.starts_with(prefix) || !term.ends_with(")")) return {};
  std::string_view inner = term.substr(prefix.size());
  inner.remove_suffix(1);
  std::vector<std::string_view> args;
  while (true) {
    const auto comma = inner.find(',');
    args.push_back(inner.substr(0, comma));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return args;
}

CoxeterMatrix finite_type(std::string_view term, char family, int n) {
  switch (family) {
    case 'A':
      require_rank(term, n >= 1, "n >= 1");
      return DiagramBuilder(n).path(0, n - 1).build();
    case 'B':
    case 'C':
      require_rank(term, n >= 2, "n >= 2");
      return DiagramBuilder(n).path(0, n - 2).bond(n - 2, n - 1, 4).build();
    case 'D':
      require_rank(term, n >= 4, "n >= 4");
      return DiagramBuilder(n).path(0, n - 2).bond(n - 3, n - 1, 3).build();
    case 'E':
      require_rank(term, n >= 6 && n <= 8, "n in {6,7,8}");
      return DiagramBuilder(n).path(0, n - 2).bond(2, n - 1, 3).build();
    case 'F':
      require_rank(term, n == 4, "n = 4");
      return DiagramBuilder(4).path(0, 3).bond(1, 2, 4).build();
    case 'G':
      require_rank(term, n == 2, "n = 2");
      return DiagramBuilder(2).bond(0, 1, 6).build();
    case 'H':
      require_rank(term, n >= 2 && n <= 4, "n in {2,3,4}");
      return DiagramBuilder(n).path(0, n - 1).bond(n - 2, n - 1, 5).build();
    default:
      malformed(term, "unknown family");
  }
}

CoxeterMatrix affine_type(std::string_view term, char family, int n) {
  switch (family) {
    case 'A':
      require_rank(term, n >= 1, "n >= 1");
      if (n == 1) return DiagramBuilder(2).bond(0, 1, kInfinity).build();
      return DiagramBuilder(n + 1).path(0, n).bond(n, 0, 3).build();
    case 'B':
      require_rank(term, n >= 3, "n >= 3");
      return DiagramBuilder(n + 1)
          .bond(0, 1, 4)
          .path(1, n - 1)
          .bond(n - 2, n, 3)
          .build();
    case 'C':
      require_rank(term, n >= 2, "n >= 2");
      return DiagramBuilder(n + 1)
          .path(0, n)
          .bond(0, 1, 4)
          .bond(n - 1, n, 4)
          .build();
    case 'D':
      require_rank(term, n >= 4, "n >= 4");
      return DiagramBuilder(n + 1)
          .bond(0, 2, 3)
          .bond(1, 2, 3)
          .path(2, n - 1)
          .bond(n - 2, n, 3)
          .build();
    case 'E':
      switch (n) {
        case 6:
          return DiagramBuilder(7).path(0, 4).bond(2, 5, 3).bond(5, 6, 3)
              .build();
        case 7:
          return DiagramBuilder(8).path(0, 6).bond(3, 7, 3).build();
        case 8:
          return DiagramBuilder(9).path(0, 7).bond(2, 8, 3).build();
        default:
          require_rank(term, false, "n in {6,7,8}");
      }
      break;
    case 'F':
      require_rank(term, n == 4, "n = 4");
      return DiagramBuilder(5).path(0, 4).bond(2, 3, 4).build();
    case 'G':
      require_rank(term, n == 2, "n = 2");
      return DiagramBuilder(3).bond(0, 1, 3).bond(1, 2, 6).build();
    case 'I':
      require_rank(term, n == 1, "n = 1");
      return DiagramBuilder(2).bond(0, 1, kInfinity).build();
    default:
      break;
  }
  malformed(term, "unknown affine family");
}

CoxeterMatrix parse_term(std::string_view term) {
  if (term.empty()) throw ValidationError("empty type name");
  if (auto args = call_args(term, "Delta("); !args.empty()) {
    if (args.size() != 3) malformed(term, "Delta takes three parameters");
    return DiagramBuilder(3)
        .bond(0, 1, parse_param(term, args[0]))
        .bond(0, 2, parse_param(term, args[1]))
        .bond(1, 2, parse_param(term, args[2]))
        .build();
  }
  if (auto args = call_args(term, "I2("); !args.empty()) {
    if (args.size() != 1) malformed(term, "I2 takes one parameter");
    return DiagramBuilder(2).bond(0, 1, parse_param(term, args[0])).build();
  }
  const bool affine = term.front() == '~';
  std::string_view body = affine ? term.substr(1) : term;
  if (body.empty()) malformed(term, "missing family");
  const char family = body.front();
  const int n = parse_rank(term, body.substr(1));
  if (family == 'U' && !affine) {
    require_rank(term, n >= 1 && n <= kMaxRank, "1 <= n <= 64");
    DiagramBuilder b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) b.bond(i, j, kInfinity);
    }
    return b.build();
  }
  if (n > kMaxRank) require_rank(term, false, "n <= 64");
  return affine ? affine_type(term, family, n) : finite_type(term, family, n);
}

}  // namespace

CoxeterMatrix parse_name(std::string_view name) {
  name = trim(name);
  if (name.empty()) throw ValidationError("empty type name");
  CoxeterMatrix result;
  bool first = true;
  while (true) {
    const auto plus = name.find('+');
    const auto term = trim(name.substr(0, plus));
    CoxeterMatrix part = parse_term(term);
    result = first ? std::move(part) : disjoint_union(result, part);
    first = false;
    if (plus == std::string_view::npos) break;
    name.remove_prefix(plus + 1);
  }
  return result;
}

}  // namespace coxinv
