#include <json.hpp>

#include <sstream>

#include "coxinv/oddgraph.hpp"

namespace coxinv {

namespace {

std::string node_name(VertexSet J, const std::vector<std::string>& labels) {
  std::string name = "W_{";
  bool first = true;
  J.for_each([&](int v) {
    if (!first) name += ',';
    first = false;
    name += labels.empty() ? std::to_string(v + 1) : labels[v];
  });
  return name + "}";
}

nlohmann::json subset_json(VertexSet J) { return J.members(); }

}  // namespace

std::string export_dot(const OddGraph& g,
                       const std::vector<std::string>& labels,
                       std::string_view graph_name) {
  std::ostringstream out;
  const std::string name = graph_name.empty()
                               ? "Gamma" + std::to_string(g.k)
                               : std::string(graph_name);
  out << "graph \"" << name << "\" {\n";
  for (std::size_t c = 0; c < g.component_count; ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.component_id[v] == c) {
        out << "    \"" << node_name(g.vertices[v], labels) << "\";\n";
      }
    }
    out << "  }\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  \"" << node_name(g.vertices[a], labels) << "\" -- \""
        << node_name(g.vertices[b], labels) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_rank_sum(const InvolutionClassReport& report,
                            bool is_finite) {
  std::size_t terms = report.per_rank.size();
  if (!is_finite && terms > 0) --terms;
  if (terms == 0) return std::to_string(report.total);
  std::string out;
  for (std::size_t k = 0; k < terms; ++k) {
    if (k > 0) out += '+';
    out += std::to_string(report.per_rank[k]);
  }
  return out + "=" + std::to_string(report.total);
}

std::string to_json(const InvolutionClassReport& report,
                    const std::optional<Bounds>& b) {
  nlohmann::json doc;
  doc["per_rank"] = report.per_rank;
  doc["total"] = report.total;
  auto classes = nlohmann::json::array();
  for (const auto& rep : report.representatives) {
    classes.push_back({{"rank", rep.rank},
                       {"subset", subset_json(rep.subset)},
                       {"type", to_string(rep.type)},
                       {"word", rep.word}});
  }
  doc["classes"] = std::move(classes);
  if (b) {
    doc["bounds"] = {{"is_finite", b->is_finite},
                     {"maximal_spherical_upper", b->maximal_spherical_upper},
                     {"numeric_upper", b->numeric_upper},
                     {"omega_lower", b->omega_lower}};
  }
  return doc.dump(2) + "\n";
}

std::string to_json(const OddGraph& g, const CoxeterMatrix& mat) {
  nlohmann::json doc;
  doc["k"] = g.k;
  auto vertices = nlohmann::json::array();
  for (VertexSet J : g.vertices) {
    vertices.push_back({{"subset", subset_json(J)},
                        {"type", to_string(decompose(mat, J))}});
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  doc["component_id"] = g.component_id;
  doc["component_count"] = g.component_count;
  return doc.dump(2) + "\n";
}

}  // namespace coxinv
