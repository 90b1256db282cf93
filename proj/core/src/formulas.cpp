#include "coxinv/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "coxinv/classify.hpp"

namespace coxinv {

namespace {

bool even(BondOrder m) { return m % 2 == 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

bool is_infinite_triangle(const TriangleParams& t) {
  if (is_infinite(t.p) || is_infinite(t.q) || is_infinite(t.r)) return true;
  // 1/p + 1/q + 1/r <= 1  <=>  qr + pr + pq <= pqr
  const std::uint64_t p = t.p, q = t.q, r = t.r;
  return q * r + p * r + p * q <= p * q * r;
}

std::uint64_t cc2_triangle(const TriangleParams& t) {
  require(t.p >= 2 && t.q >= 2 && t.r >= 2, "triangle bonds must be >= 2");
  require(is_infinite_triangle(t),
          "Delta(" + bond_to_string(t.p) + "," + bond_to_string(t.q) + "," +
              bond_to_string(t.r) + ") is finite; use the general algorithm");
  std::vector<BondOrder> finite;
  for (BondOrder m : {t.p, t.q, t.r}) {
    if (!is_infinite(m)) finite.push_back(m);
  }
  const auto evens = std::count_if(finite.begin(), finite.end(), even);
  switch (finite.size()) {
    case 3: {
      static constexpr std::uint64_t by_evens[] = {1, 2, 4, 6};
      return by_evens[evens];
    }
    case 2: {
      static constexpr std::uint64_t by_evens[] = {1, 3, 5};
      return by_evens[evens];
    }
    case 1:
      return evens == 1 ? 4 : 2;
    default:
      return 3;
  }
}

std::uint64_t cc2_A(int n) {
  require(n >= 1, "A_n requires n >= 1");
  const std::uint64_t k = static_cast<std::uint64_t>(n) / 2;
  return n % 2 == 0 ? k : k + 1;
}

std::uint64_t cc2_C(int n) {
  require(n >= 2, "C_n requires n >= 2");
  const std::uint64_t k = static_cast<std::uint64_t>(n) / 2;
  return n % 2 == 0 ? k * k + 2 * k : k * k + 3 * k + 1;
}

std::uint64_t cc2_affine_A(int n) {
  require(n >= 2, "~A_n requires n >= 2");
  const std::uint64_t k = static_cast<std::uint64_t>(n) / 2;
  return n % 2 == 0 ? k : k + 2;
}

std::uint64_t cc2_affine_C(int n) {
  require(n >= 2, "~C_n requires n >= 2");
  // Classes are indexed by the sizes a, b of the B-blocks at the two ends
  // and the number m of free A1 vertices, subject to a + b + 2m <= n.
  auto pairs_up_to = [](std::uint64_t s) { return (s + 1) * (s + 2) / 2; };
  const std::uint64_t len = static_cast<std::uint64_t>(n);
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; 2 * m <= len; ++m) total += pairs_up_to(len - 2 * m);
  return total - 1;
}

std::uint64_t cc2_odd_circle(const CoxeterMatrix& mat) {
  const int vertices = mat.rank();
  require(vertices >= 3, "an odd circle needs at least 3 vertices");
  for (int v = 0; v < vertices; ++v) {
    require(mat.neighbours(v).size() == 2,
            "vertex " + std::to_string(v) + " does not have degree 2");
    require(mat.odd_neighbours(v) == mat.neighbours(v),
            "vertex " + std::to_string(v) + " has an even or infinite bond");
  }
  require(components(mat).size() == 1, "diagram is not a single cycle");
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) {
      for (int c = b + 1; c < vertices; ++c) {
        const auto dec = decompose(mat, VertexSet::of({a, b, c}));
        for (const auto& part : dec.parts()) {
          require(!(part.family == Family::H && part.rank == 3),
                  "diagram contains an H3 subdiagram");
        }
      }
    }
  }
  const std::uint64_t n = static_cast<std::uint64_t>(vertices) - 1;
  const std::uint64_t l = n / 2;
  return n % 2 == 0 ? l : l + 2;
}

SimpleGraph::SimpleGraph(int n) : adjacency_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxRank) {
    throw ValidationError("graph order " + std::to_string(n) +
                          " out of range");
  }
}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= order() || b >= order() || a == b) {
    throw ValidationError("bad edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  }
  adjacency_[a] = adjacency_[a].with(b);
  adjacency_[b] = adjacency_[b].with(a);
}

SimpleGraph parse_presentation_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<SimpleGraph> graph;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    try {
      if (!graph) {
        if (tokens.size() != 2 || tokens[0] != "rank") {
          throw ValidationError(where + "expected header 'rank <n>'");
        }
        graph.emplace(std::stoi(tokens[1]));
        continue;
      }
      if (tokens.size() != 2 && tokens.size() != 3) {
        throw ValidationError(where + "expected 'i j' or 'i j 2'");
      }
      if (tokens.size() == 3 && tokens[2] != "2") {
        throw ValidationError(where + "presentation graph bonds must be 2");
      }
      const int a = std::stoi(tokens[0]), b = std::stoi(tokens[1]);
      try {
        graph->add_edge(a, b);
      } catch (const ValidationError& e) {
        throw ValidationError(where + e.what());
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ValidationError*>(&e)) throw;
      throw ValidationError(where + "expected integers");
    }
  }
  if (!graph) throw ValidationError("missing 'rank <n>' header");
  return *graph;
}

CoxeterMatrix racg_matrix(const SimpleGraph& graph) {
  const int n = graph.order();
  std::vector<BondOrder> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[i * n + j] = i == j ? 1 : graph.adjacent(i, j) ? 2 : kInfinity;
    }
  }
  return CoxeterMatrix(n, std::move(entries));
}

namespace {

// Cliques whose smallest vertex lies in `candidates`, extended only by
// larger common neighbours.
std::uint64_t count_cliques(const SimpleGraph& graph, VertexSet candidates) {
  std::uint64_t count = 0;
  candidates.for_each([&](int v) {
    const VertexSet larger =
        VertexSet::from_bits(v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1));
    count += 1 + count_cliques(graph, candidates & graph.neighbours(v) & larger);
  });
  return count;
}

}  // namespace

std::uint64_t cc2_racg(const SimpleGraph& graph) {
  return count_cliques(graph, VertexSet::first(graph.order()));
}

std::uint64_t ccm_free_product(std::span<const std::uint64_t> ccms) {
  return std::accumulate(ccms.begin(), ccms.end(), std::uint64_t{0});
}

std::uint64_t ccm_direct_product(const std::map<int, std::uint64_t>& cc_g,
                                 const std::map<int, std::uint64_t>& cc_h,
                                 int m) {
  require(m >= 1, "element order must be positive");
  auto with_identity = [](std::map<int, std::uint64_t> cc) {
    cc.try_emplace(1, 1);
    return cc;
  };
  const auto g = with_identity(cc_g);
  const auto h = with_identity(cc_h);
  std::uint64_t total = 0;
  for (const auto& [k, count_g] : g) {
    for (const auto& [l, count_h] : h) {
      if (k >= 1 && l >= 1 && std::lcm(k, l) == m) total += count_g * count_h;
    }
  }
  return total;
}

}  // namespace coxinv
