#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "coxinv/classify.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/formulas.hpp"
#include "coxinv/oddgraph.hpp"
#include "coxinv/oracle.hpp"
#include "coxinv/verify.hpp"

namespace coxinv::cli {

namespace {

using nlohmann::json;

struct Input {
  std::string name;
  std::string file;
};

struct Output {
  std::string format = "table";
  std::string path;
};

void add_input(CLI::App* sub, Input& in) {
  auto* name = sub->add_option("--name", in.name,
                               "Type name, e.g. ~E7, D4+A1, Delta(2,3,inf)");
  auto* file = sub->add_option(
      "--file", in.file, "Coxeter matrix as JSON or as an edge list");
  name->excludes(file);
}

void add_output(CLI::App* sub, Output& o, std::vector<std::string> formats) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--out", o.path, "Write output to this file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CoxeterMatrix load(const Input& in) {
  if (in.name.empty() == in.file.empty()) {
    throw ValidationError("exactly one of --name or --file is required");
  }
  if (!in.name.empty()) return parse_name(in.name);
  const std::string text = read_file(in.file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_matrix(text);
  }
  return parse_edge_list(text);
}

std::string display_name(const Input& in) {
  return in.name.empty() ? in.file : in.name;
}

void emit(const Output& o, const std::string& data, std::ostream& out) {
  if (o.path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.path);
  file << data;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string subset_string(const CoxeterMatrix& mat, VertexSet J) {
  std::string s = "{";
  J.for_each([&](int v) {
    if (s.size() > 1) s += ',';
    s += mat.label(v);
  });
  return s + "}";
}

std::string word_string(const CoxeterMatrix& mat, const std::vector<int>& w) {
  std::string s;
  for (int g : w) s += (s.empty() ? "" : " ") + mat.label(g);
  return s.empty() ? "1" : s;
}

BondOrder parse_bond(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "0") return kInfinity;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || v < 2 || v >= kInfinity) {
    throw ValidationError("bad bond order '" + text + "'");
  }
  return static_cast<BondOrder>(v);
}

std::map<int, std::uint64_t> parse_order_counts(const std::string& text) {
  std::map<int, std::uint64_t> counts;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("expected order:count pairs, got '" + item + "'");
    }
    try {
      counts[std::stoi(item.substr(0, colon))] =
          std::stoull(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw ValidationError("expected order:count pairs, got '" + item + "'");
    }
  }
  return counts;
}

std::string cc2_table(const CoxeterMatrix& mat, const std::string& name,
                      const InvolutionClassReport& report, bool finite) {
  std::ostringstream s;
  s << "diagram: " << name << " (rank " << mat.rank() << ", "
    << (finite ? "finite" : "infinite") << ")\n";
  s << "classes: " << format_rank_sum(report, finite) << "\n";
  if (report.representatives.empty()) return s.str();
  s << std::left << std::setw(6) << "rank" << std::setw(18) << "subset"
    << std::setw(16) << "type"
    << "word\n";
  for (const auto& rep : report.representatives) {
    s << std::setw(6) << rep.rank << std::setw(18)
      << subset_string(mat, rep.subset) << std::setw(16) << to_string(rep.type)
      << word_string(mat, rep.word) << "\n";
  }
  return s.str();
}

int cmd_cc2(const Input& in, const Output& o, bool with_bounds,
            std::ostream& out) {
  const CoxeterMatrix mat = load(in);
  const auto report = cc2(mat);
  const bool finite = is_spherical(decompose(mat, mat.vertices()));
  if (o.format == "json") {
    std::optional<Bounds> b;
    if (with_bounds) b = bounds(mat);
    emit(o, to_json(report, b), out);
  } else {
    emit(o, cc2_table(mat, display_name(in), report, finite), out);
  }
  return kOk;
}

int cmd_graphs(const Input& in, const Output& o, int k, bool omega,
               std::ostream& out) {
  const CoxeterMatrix mat = load(in);
  const OddGraph g = omega ? omega_k(mat, k, {}) : gamma_k(mat, k, {});
  const std::string title = (omega ? "Omega" : "Gamma") + std::to_string(k);
  if (o.format == "dot") {
    emit(o, export_dot(g, mat.labels(), title), out);
  } else if (o.format == "json") {
    emit(o, to_json(g, mat), out);
  } else {
    std::ostringstream s;
    s << title << ": " << g.vertices.size() << " vertices, " << g.edges.size()
      << " edges, " << g.component_count << " components\n";
    for (std::size_t c = 0; c < g.component_count; ++c) {
      s << "  component " << c + 1 << ":";
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.component_id[v] != c) continue;
        s << ' ' << subset_string(mat, g.vertices[v]) << ' '
          << to_string(decompose(mat, g.vertices[v]));
      }
      s << "\n";
    }
    emit(o, s.str(), out);
  }
  return kOk;
}

int cmd_bounds(const Input& in, const Output& o, std::ostream& out) {
  const CoxeterMatrix mat = load(in);
  const Bounds b = bounds(mat);
  const auto total = cc2(mat).total;
  if (o.format == "json") {
    emit(o,
         dump({{"cc2", total},
               {"is_finite", b.is_finite},
               {"maximal_spherical_upper", b.maximal_spherical_upper},
               {"numeric_upper", b.numeric_upper},
               {"omega_lower", b.omega_lower}}),
         out);
    return kOk;
  }
  std::ostringstream s;
  s << "diagram:                 " << display_name(in) << " ("
    << (b.is_finite ? "finite" : "infinite") << ")\n"
    << "omega lower bound:       " << b.omega_lower << "\n"
    << "cc2:                     " << total << "\n"
    << "maximal spherical bound: " << b.maximal_spherical_upper << "\n"
    << "numeric bound:           " << b.numeric_upper << "\n";
  emit(o, s.str(), out);
  return kOk;
}

int emit_value(const Output& o, const std::string& label, json fields,
               std::uint64_t value, std::ostream& out) {
  if (o.format == "json") {
    fields["cc"] = value;
    emit(o, dump(fields), out);
  } else {
    emit(o, label + " = " + std::to_string(value) + "\n", out);
  }
  return kOk;
}

int cmd_verify(const Input& in, const Output& o, std::size_t cap,
               std::ostream& out) {
  const CoxeterMatrix mat = load(in);
  const Verification v = verify(mat, cap, display_name(in));
  if (o.format == "json") {
    emit(o,
         dump({{"elements", v.elements},
               {"involutions", v.involutions},
               {"match", v.ok()},
               {"oracle", {{"per_rank", v.oracle_per_rank},
                           {"total", v.oracle_total}}},
               {"pipeline", {{"per_rank", v.pipeline_per_rank},
                             {"total", v.pipeline_total}}},
               {"representative_problems", v.representative_problems}}),
         out);
  } else {
    std::ostringstream s;
    s << "diagram: " << display_name(in) << ", " << v.elements
      << " elements, " << v.involutions << " involutions\n";
    s << std::left << std::setw(8) << "rank" << std::setw(12) << "odd-graph"
      << "oracle\n";
    for (std::size_t k = 0; k < v.pipeline_per_rank.size(); ++k) {
      const auto a = v.pipeline_per_rank[k];
      const auto b = k < v.oracle_per_rank.size() ? v.oracle_per_rank[k] : 0;
      s << std::setw(8) << k + 1 << std::setw(12) << a << b
        << (a == b ? "" : "  MISMATCH") << "\n";
    }
    s << std::setw(8) << "total" << std::setw(12) << v.pipeline_total
      << v.oracle_total << "\n";
    for (const auto& p : v.representative_problems) {
      s << "representative " << p << "\n";
    }
    s << (v.ok() ? "result: match\n" : "result: MISMATCH\n");
    emit(o, s.str(), out);
  }
  return v.ok() ? kOk : kMismatch;
}

int cmd_racg(const std::string& path, const Output& o, bool cross_check,
             std::ostream& out, std::ostream& err) {
  const SimpleGraph graph = parse_presentation_graph(read_file(path));
  const auto cliques = cc2_racg(graph);
  std::optional<std::uint64_t> general;
  if (cross_check) general = cc2(racg_matrix(graph)).total;
  if (o.format == "json") {
    json doc{{"cc", cliques}, {"vertices", graph.order()}};
    if (general) doc["general"] = *general;
    emit(o, dump(doc), out);
  } else {
    std::string s = "cliques = " + std::to_string(cliques) + "\n";
    if (general) s += "general algorithm = " + std::to_string(*general) + "\n";
    emit(o, s, out);
  }
  if (general && *general != cliques) {
    err << "error: clique count " << cliques
        << " disagrees with the general algorithm (" << *general << ")\n";
    return kMismatch;
  }
  return kOk;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("COXINV_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw ValidationError(std::string("bad COXINV_CAP value '") + env + "'");
    }
  }
  return oracle::kDefaultCap;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Conjugacy classes of involutions in Coxeter groups", "coxinv"};
  app.require_subcommand(1);

  Input in;
  Output o;

  auto* c2 = app.add_subcommand("cc2", "Count involution classes");
  bool with_bounds = false;
  add_input(c2, in);
  add_output(c2, o, {"table", "json"});
  c2->add_flag("--bounds", with_bounds, "Include bounds in JSON output");

  auto* gr = app.add_subcommand("graphs", "Emit the k-odd graph");
  int k = 1;
  bool omega = false;
  add_input(gr, in);
  gr->add_option("--k", k, "Rank of the vertex sets")->required();
  gr->add_flag("--omega", omega, "Emit the O-graph instead");
  o.format = "dot";
  add_output(gr, o, {"dot", "json", "table"});

  auto* bd = app.add_subcommand("bounds", "Lower and upper bounds on cc2");
  add_input(bd, in);
  add_output(bd, o, {"table", "json"});

  auto* fm = app.add_subcommand("formulas", "Closed-form counts");
  fm->require_subcommand(1);

  auto* fam = fm->add_subcommand("family", "A_n, C_n, ~A_n, ~C_n");
  std::string family;
  int n = 0;
  fam->add_option("--family", family, "A, C, ~A or ~C")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "~A", "~C"}));
  fam->add_option("--n", n, "Index n")->required();
  add_output(fam, o, {"table", "json"});

  auto* tri = fm->add_subcommand("triangle", "Infinite triangle groups");
  std::string p = "2", q = "2", r = "2";
  tri->add_option("--p", p, "Bond order or inf")->required();
  tri->add_option("--q", q, "Bond order or inf")->required();
  tri->add_option("--r", r, "Bond order or inf")->required();
  add_output(tri, o, {"table", "json"});

  auto* circ = fm->add_subcommand("odd-circle", "Cycles with odd bonds");
  add_input(circ, in);
  add_output(circ, o, {"table", "json"});

  auto* fr = fm->add_subcommand("free", "Free product rule");
  std::vector<std::uint64_t> factors;
  fr->add_option("--cc", factors, "Class count of each factor")->required();
  add_output(fr, o, {"table", "json"});

  auto* dp = fm->add_subcommand("direct", "Direct product rule");
  std::string g_counts, h_counts;
  int order = 2;
  dp->add_option("--left", g_counts, "order:count pairs of G, e.g. 2:3")
      ->required();
  dp->add_option("--right", h_counts, "order:count pairs of H")->required();
  dp->add_option("--m", order, "Element order")->capture_default_str();
  add_output(dp, o, {"table", "json"});

  auto* vf = app.add_subcommand("verify", "Compare with brute force");
  std::size_t cap = 0;
  add_input(vf, in);
  vf->add_option("--cap", cap, "Element cap (default $COXINV_CAP or 1e6)");
  add_output(vf, o, {"table", "json"});

  auto* rg = app.add_subcommand("racg", "Right-angled groups via cliques");
  std::string graph_path;
  bool cross_check = false;
  rg->add_option("--file", graph_path, "Presentation graph edge list")
      ->required();
  rg->add_flag("--cross-check", cross_check,
               "Also run the general algorithm");
  add_output(rg, o, {"table", "json"});

  // Each subcommand sets its own default before parsing overwrites it.
  for (auto* sub : {c2, bd, fam, tri, circ, fr, dp, vf, rg}) {
    sub->preparse_callback([&o](std::size_t) { o.format = "table"; });
  }
  gr->preparse_callback([&o](std::size_t) { o.format = "dot"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*c2) return cmd_cc2(in, o, with_bounds, out);
    if (*gr) return cmd_graphs(in, o, k, omega, out);
    if (*bd) return cmd_bounds(in, o, out);
    if (*fam) {
      std::uint64_t v = 0;
      if (family == "A") v = cc2_A(n);
      if (family == "B" || family == "C") v = cc2_C(n);
      if (family == "~A") v = cc2_affine_A(n);
      if (family == "~C") v = cc2_affine_C(n);
      return emit_value(o, family + std::to_string(n),
                        {{"family", family}, {"n", n}}, v, out);
    }
    if (*tri) {
      const TriangleParams t{parse_bond(p), parse_bond(q), parse_bond(r)};
      return emit_value(o, "Delta(" + p + "," + q + "," + r + ")",
                        {{"p", p}, {"q", q}, {"r", r}}, cc2_triangle(t), out);
    }
    if (*circ) {
      return emit_value(o, display_name(in), {{"diagram", display_name(in)}},
                        cc2_odd_circle(load(in)), out);
    }
    if (*fr) {
      return emit_value(o, "free product", {{"factors", factors}},
                        ccm_free_product(factors), out);
    }
    if (*dp) {
      return emit_value(
          o, "direct product, order " + std::to_string(order),
          {{"m", order}},
          ccm_direct_product(parse_order_counts(g_counts),
                             parse_order_counts(h_counts), order),
          out);
    }
    if (*vf) return cmd_verify(in, o, cap == 0 ? default_cap() : cap, out);
    if (*rg) return cmd_racg(graph_path, o, cross_check, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace coxinv::cli
