#include "coxinv/diagram.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace coxinv {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::string bond_to_string(BondOrder m) {
  return is_infinite(m) ? std::string("inf") : std::to_string(m);
}

VertexSet VertexSet::of(std::initializer_list<int> members) {
  VertexSet s;
  for (int i : members) s = s.with(i);
  return s;
}

VertexSet VertexSet::of(const std::vector<int>& members) {
  VertexSet s;
  for (int i : members) s = s.with(i);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  // One sequence is a prefix of the other.
  return x == 0 && y != 0;
}

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<BondOrder> entries,
                             std::vector<std::string> labels)
    : rank_(rank), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (rank_ < 0 || rank_ > kMaxRank) {
    throw ValidationError("rank " + std::to_string(rank_) +
                          " outside [0, " + std::to_string(kMaxRank) + "]");
  }
  const auto n = static_cast<std::size_t>(rank_);
  if (entries_.size() != n * n) {
    throw ValidationError("expected " + std::to_string(n * n) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels_.size()));
  }
  for (int i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 1) {
      throw ValidationError("bad diagonal at " + at(i, i) + ": m_ii must be 1");
    }
    for (int j = i + 1; j < rank_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw ValidationError("asymmetric at " + at(i, j));
      }
      if ((*this)(i, j) < 2) {
        throw ValidationError("off-diagonal entry at " + at(i, j) +
                              " must be >= 2 or infinity");
      }
    }
  }
  neighbours_.resize(n);
  odd_neighbours_.resize(n);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (is_edge((*this)(i, j))) neighbours_[i] = neighbours_[i].with(j);
      if (is_odd_bond((*this)(i, j))) {
        odd_neighbours_[i] = odd_neighbours_[i].with(j);
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_rows(
    const std::vector<std::vector<BondOrder>>& rows,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<BondOrder> entries;
  entries.reserve(rows.size() * rows.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ValidationError("matrix is not square: row " + std::to_string(i) +
                            " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return CoxeterMatrix(n, std::move(entries), std::move(labels));
}

std::string CoxeterMatrix::label(int i) const {
  return labels_.empty() ? std::to_string(i + 1) : labels_[i];
}

CoxeterMatrix parse_matrix(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw ValidationError("expected an object with a \"matrix\" field");
  }
  const auto& rows = doc.at("matrix");
  if (!rows.is_array()) throw ValidationError("\"matrix\" must be an array");
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<BondOrder>> parsed(rows.size());
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) {
      throw ValidationError("row " + std::to_string(i) + " is not an array");
    }
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError("matrix is not square: row " + std::to_string(i) +
                            " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const auto& v = row[j];
      if (!v.is_number_integer()) {
        throw ValidationError("non-integer entry at " + at(i, j));
      }
      const auto value = v.get<std::int64_t>();
      if (value < 0) throw ValidationError("negative entry at " + at(i, j));
      if (value > std::numeric_limits<std::int32_t>::max()) {
        throw ValidationError("entry too large at " + at(i, j));
      }
      parsed[i].push_back(value == 0 ? kInfinity
                                     : static_cast<BondOrder>(value));
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array()) throw ValidationError("\"labels\" must be an array");
    for (const auto& s : l) {
      if (!s.is_string()) throw ValidationError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return CoxeterMatrix::from_rows(parsed, std::move(labels));
}

std::string to_json(const CoxeterMatrix& mat) {
  nlohmann::json doc;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < mat.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < mat.rank(); ++j) {
      const BondOrder m = mat(i, j);
      row.push_back(is_infinite(m) ? 0 : static_cast<std::int64_t>(m));
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  if (mat.has_labels()) doc["labels"] = mat.labels();
  return doc.dump();
}

namespace {

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError("line " + std::to_string(line_no) +
                          ": expected an integer, got '" +
                          std::string(token) + "'");
  }
  return value;
}

}  // namespace

CoxeterMatrix parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int rank = -1;
  std::vector<BondOrder> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (rank < 0) {
      if (tokens.size() != 2 || tokens[0] != "rank") {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected header 'rank <n>'");
      }
      rank = parse_int(tokens[1], line_no);
      if (rank < 0 || rank > kMaxRank) {
        throw ValidationError("rank " + std::to_string(rank) + " out of range");
      }
      entries.assign(static_cast<std::size_t>(rank) * rank, 2);
      for (int i = 0; i < rank; ++i) entries[i * rank + i] = 1;
      continue;
    }
    if (tokens.size() != 3) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'i j m'");
    }
    const int i = parse_int(tokens[0], line_no);
    const int j = parse_int(tokens[1], line_no);
    if (i < 0 || j < 0 || i >= rank || j >= rank) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": vertex index out of range " + at(i, j));
    }
    if (i == j) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": bond on the diagonal " + at(i, j));
    }
    BondOrder m = kInfinity;
    if (tokens[2] != "inf") {
      const int value = parse_int(tokens[2], line_no);
      if (value < 2) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": bond order must be >= 2 or inf");
      }
      m = static_cast<BondOrder>(value);
    }
    entries[i * rank + j] = m;
    entries[j * rank + i] = m;
  }
  if (rank < 0) throw ValidationError("missing 'rank <n>' header");
  return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix induced(const CoxeterMatrix& mat, VertexSet J) {
  if (J.highest() >= mat.rank()) {
    throw ValidationError("vertex " + std::to_string(J.highest()) +
                          " out of range for rank " +
                          std::to_string(mat.rank()));
  }
  const auto members = J.members();
  const int k = static_cast<int>(members.size());
  std::vector<BondOrder> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int a : members) {
    for (int b : members) entries.push_back(mat(a, b));
  }
  std::vector<std::string> labels;
  if (mat.has_labels()) {
    for (int a : members) labels.push_back(mat.labels()[a]);
  }
  return CoxeterMatrix(k, std::move(entries), std::move(labels));
}

CoxeterMatrix disjoint_union(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const int n = a.rank() + b.rank();
  std::vector<BondOrder> entries(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) entries[i * n + i] = 1;
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < a.rank(); ++j) entries[i * n + j] = a(i, j);
  }
  const int off = a.rank();
  for (int i = 0; i < b.rank(); ++i) {
    for (int j = 0; j < b.rank(); ++j) {
      entries[(i + off) * n + (j + off)] = b(i, j);
    }
  }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (int i = 0; i < a.rank(); ++i) labels.push_back(a.label(i));
    for (int i = 0; i < b.rank(); ++i) {
      labels.push_back(b.has_labels() ? b.labels()[i]
                                      : std::to_string(off + i + 1));
    }
  }
  return CoxeterMatrix(n, std::move(entries), std::move(labels));
}

std::vector<VertexSet> components(const CoxeterMatrix& mat, VertexSet J) {
  std::vector<VertexSet> out;
  VertexSet remaining = J;
  while (!remaining.empty()) {
    VertexSet comp = VertexSet{}.with(remaining.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | mat.neighbours(v); });
      next = (next & J) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

std::vector<VertexSet> components(const CoxeterMatrix& mat) {
  return components(mat, mat.vertices());
}

VertexSet neighbourhood(const CoxeterMatrix& mat, VertexSet K) {
  VertexSet out;
  K.for_each([&](int k) { out = out | mat.neighbours(k); });
  return out - K;
}

}  // namespace coxinv
