#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gdifs/classify.hpp"
#include "gdifs/counterexample.hpp"
#include "gdifs/dimension.hpp"
#include "gdifs/errors.hpp"
#include "gdifs/gaps.hpp"
#include "gdifs/measure.hpp"
#include "gdifs/render.hpp"
#include "gdifs/spec_io.hpp"

using namespace gdifs;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;
constexpr int kResource = 4;

std::string real_str(const Real& r, int digits = 15) { return r.str(digits); }

json similarity_json(const Similarity& s) {
  return {{"ratio", s.ratio().str()}, {"offset", s.offset().str()}, {"reflect", s.reflects()}};
}

json condition_json(const ConditionEval& c) {
  return {{"status", to_string(c.status)},
          {"value", real_str(c.value)},
          {"margin", real_str(c.margin)},
          {"boundary_warning", c.boundary_warning}};
}

Rational rational_arg(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    throw ArgumentError("\"" + s + "\" is not a rational");
  }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read spec file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  const SpecDocument doc = parse_spec_document(buf.str());
  const GraphIFS g = GraphIFS::build(doc.vertices, doc.edges);
  const auto report = validate_graph(g);
  json issues = report.messages();
  print({{"valid", report.ok()}, {"issues", issues}});
  return report.ok() ? kOk : kInvalid;
}

int cmd_dim(const std::string& path, double tol) {
  const GraphIFS g = load_spec_file(path);
  const DimensionResult d = hausdorff_dimension(g, tol);
  print({{"s", real_str(d.s)},
         {"bracket", {real_str(d.lo, 20), real_str(d.hi, 20)}},
         {"iterations", d.iterations}});
  return kOk;
}

int cmd_gaps(const std::string& path, const std::string& vertex, unsigned depth) {
  const GraphIFS g = load_spec_file(path);
  const VertexId u = g.vertex(vertex);
  json levels = json::array();
  for (unsigned k = 1; k <= depth; ++k) {
    json gs = json::array();
    for (const auto& pg : level_k_gaps(g, u, k)) {
      gs.push_back({{"gap", {pg.gap.lo.str(), pg.gap.hi.str()}}, {"length", pg.length.str()}});
    }
    levels.push_back({{"level", k}, {"gaps", gs}});
  }
  json out{{"vertex", vertex},
           {"min_level1_gap", min_level1_gap(g, u).str()},
           {"max_level1_gap", max_level1_gap(g, u).str()},
           {"levels", levels}};
  try {
    out["max_gap"] = max_gap(g, u).str();
  } catch (const ArgumentError& e) {
    out["max_gap"] = nullptr;
    out["max_gap_note"] = e.what();
  }
  print(out);
  return kOk;
}

int cmd_measure(const std::string& path) {
  const GraphIFS g = load_spec_file(path);
  const auto p = as_figure1(g);
  if (!p) throw ArgumentError("measure is only available for the two-vertex family");
  const MeasureResult m = hausdorff_measure_figure1(*p);
  json out{{"s", real_str(m.s)},
           {"condition1", condition_json(m.cond1)},
           {"condition2", condition_json(m.cond2)}};
  out["h"] = {{g.vertex_name(0), m.h_u ? json(real_str(*m.h_u)) : json(nullptr)},
              {g.vertex_name(1), m.h_v ? json(real_str(*m.h_v)) : json(nullptr)}};
  print(out);
  return kOk;
}

int cmd_classify(const std::string& path, const std::string& vertex, unsigned depth,
                 bool reflected, const std::string& theorem, bool minimal) {
  const GraphIFS g = load_spec_file(path);
  const VertexId u = g.vertex(vertex);
  Certificate cert;
  if (theorem == "p2m") {
    const auto p = as_figure1(g);
    if (!p) throw ArgumentError("p2m applies only to the two-vertex family");
    const auto both = classify_P2M(*p);
    cert = u == 0 ? both.first : both.second;
  } else if (theorem == "p2t") {
    cert = classify_P2T(g, u, depth, minimal, reflected);
  } else {
    cert = classify_P2Q(g, u, depth, reflected);
  }
  print(certificate_to_json(g, cert));
  return cert.verdict == Verdict::Unknown ? kUnknown : kOk;
}

int cmd_rewrite(const std::string& path, const std::string& vertex) {
  const GraphIFS g = load_spec_file(path);
  const StandardRewrite r = rewrite_as_standard(g, g.vertex(vertex));
  json maps = json::array();
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    json m = similarity_json(r.maps[i]);
    m["path"] = r.sources[i];
    maps.push_back(std::move(m));
  }
  print({{"vertex", vertex}, {"maps", maps}, {"containment_substituted", r.containment_substituted}});
  return kOk;
}

int cmd_render(const std::string& path, unsigned levels, const std::string& out) {
  const GraphIFS g = load_spec_file(path);
  RenderSpec spec;
  spec.levels = levels;
  const std::string svg = render_svg(g, spec);
  if (out.empty()) {
    std::cout << svg;
  } else {
    std::ofstream f(out);
    if (!f) throw ArgumentError("cannot write \"" + out + "\"");
    f << svg;
  }
  return kOk;
}

json roots_json(const QuadraticRoots& q) {
  json roots = json::array();
  for (const auto& r : q.roots) {
    roots.push_back({{"exact", r.str()}, {"approx", r.approx()}});
  }
  return {{"discriminant", q.discriminant.str()}, {"roots", roots}};
}

int cmd_span(const std::string& path, const std::string& from, const std::string& to,
             unsigned max_j, unsigned max_k, unsigned verify_depth) {
  const GraphIFS g = load_spec_file(path);
  const auto hits = span_search(g, g.vertex(from), g.vertex(to), max_j, max_k, verify_depth);
  json out = json::array();
  for (const auto& h : hits) {
    out.push_back({{"map", similarity_json(h.s_map)},
                   {"j", h.j},
                   {"k", h.k},
                   {"spanned_gap", {h.spanned_gap.gap.lo.str(), h.spanned_gap.gap.hi.str()}},
                   {"verified_depth", h.verified_depth}});
  }
  print({{"search", "interval-matching shape only"}, {"hits", out}});
  return kOk;
}

int cmd_verify_certificate(const std::string& spec_path, const std::string& cert_path) {
  const GraphIFS g = load_spec_file(spec_path);
  std::ifstream in(cert_path);
  if (!in) throw ArgumentError("cannot read certificate \"" + cert_path + "\"");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("certificate parse error: ") + e.what(), 0, "");
  }
  const Certificate cert = certificate_from_json(g, j);
  const ReplayResult r = verify_certificate(g, cert);
  print({{"replayed", r.ok}, {"problems", r.problems}});
  return r.ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-directed IFS toolkit"};
  app.require_subcommand(1);
  int rc = kOk;

  std::string spec, vertex, theorem = "p2q", out, from, to, cert;
  double tol = 1e-12;
  unsigned depth = 8, levels = 5, max_j = 2, max_k = 3, verify_depth = 3;
  bool reflected = false, minimal = false;
  std::string g1, g2, g3, g4, alpha;

  auto* validate = app.add_subcommand("validate", "Check a spec against the IFS invariants");
  validate->add_option("spec", spec)->required();
  validate->callback([&] { rc = cmd_validate(spec); });

  auto* dim = app.add_subcommand("dim", "Hausdorff dimension");
  dim->add_option("spec", spec)->required();
  dim->add_option("--tol", tol)->check(CLI::PositiveNumber);
  dim->callback([&] { rc = cmd_dim(spec, tol); });

  auto* gaps = app.add_subcommand("gaps", "Gap lengths at a vertex");
  gaps->add_option("spec", spec)->required();
  gaps->add_option("--vertex", vertex)->required();
  unsigned gap_depth = 3;
  gaps->add_option("--depth", gap_depth)->check(CLI::Range(1u, 20u));
  gaps->callback([&] { rc = cmd_gaps(spec, vertex, gap_depth); });

  auto* measure = app.add_subcommand("measure", "Hausdorff measure (two-vertex family)");
  measure->add_option("spec", spec)->required();
  measure->callback([&] { rc = cmd_measure(spec); });

  auto* classify = app.add_subcommand("classify", "Emit a classification certificate");
  classify->add_option("spec", spec)->required();
  classify->add_option("--vertex", vertex)->required();
  classify->add_option("--depth", depth)->check(CLI::Range(1u, 30u));
  classify->add_flag("--reflected", reflected);
  classify->add_option("--theorem", theorem)->check(CLI::IsMember({"p2m", "p2q", "p2t"}));
  classify->add_flag("--assert-minimal-edges", minimal);
  classify->callback([&] { rc = cmd_classify(spec, vertex, depth, reflected, theorem, minimal); });

  auto* rewrite = app.add_subcommand("rewrite", "Standard IFS for a vertex");
  rewrite->add_option("spec", spec)->required();
  rewrite->add_option("--vertex", vertex)->required();
  rewrite->callback([&] { rc = cmd_rewrite(spec, vertex); });

  auto* render = app.add_subcommand("render", "SVG of level-k intervals");
  render->add_option("spec", spec)->required();
  render->add_option("--levels", levels)->check(CLI::Range(0u, 20u));
  render->add_option("-o", out);
  render->callback([&] { rc = cmd_render(spec, levels, out); });

  auto* ce = app.add_subcommand("counterexample", "Gap-spanning construction");
  ce->require_subcommand(1);
  auto* solve = ce->add_subcommand("solve", "Ratios from g1..g4");
  solve->add_option("--g1", g1)->required();
  solve->add_option("--g2", g2)->required();
  solve->add_option("--g3", g3)->required();
  solve->add_option("--g4", g4)->required();
  solve->callback([&] {
    const auto s = solve_ratios_section6(rational_arg(g1), rational_arg(g2), rational_arg(g3),
                                         rational_arg(g4));
    json ratios = json::array();
    for (const auto& r : s.ratios) ratios.push_back(r.str());
    json o{{"feasible", s.feasible}, {"ratios", ratios}, {"r", s.r.str()},
           {"residual", s.residual.str()}};
    if (!s.feasible) o["reason"] = s.reason;
    print(o);
    rc = s.feasible ? kOk : kInvalid;
  });
  auto* quad = ce->add_subcommand("quadratic", "g2 from g1 = g3 = g4 = alpha");
  quad->add_option("--alpha", alpha)->required();
  quad->callback([&] { print(roots_json(quadratic_g2(rational_arg(alpha)))); });
  auto* build = ce->add_subcommand("build", "Print the eight-edge system and S");
  build->callback([&] {
    const Figure6 f = build_figure6(Section6Params::example());
    std::cout << dump_spec(f.ifs, "spanning-counterexample");
    print({{"S", similarity_json(f.s)}});
  });
  auto* verify = ce->add_subcommand("verify", "Check the four map identities");
  verify->callback([&] {
    const Figure6 f = build_figure6(Section6Params::example());
    const IdentityReport r = verify_map_identities(f.ifs, f.s);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"identity", c.name}, {"holds", c.holds}});
    print({{"all", r.all}, {"checks", checks}});
    rc = r.all ? kOk : kInvalid;
  });

  auto* span = app.add_subcommand("span-search", "Bounded search for gap-spanning maps");
  span->add_option("spec", spec)->required();
  span->add_option("--from", from)->required();
  span->add_option("--to", to)->required();
  span->add_option("--max-j", max_j)->check(CLI::Range(1u, 8u));
  span->add_option("--max-k", max_k)->check(CLI::Range(1u, 8u));
  span->add_option("--verify-depth", verify_depth)->check(CLI::Range(0u, 8u));
  span->callback([&] { rc = cmd_span(spec, from, to, max_j, max_k, verify_depth); });

  auto* vc = app.add_subcommand("verify-certificate", "Replay a certificate against a spec");
  vc->add_option("spec", spec)->required();
  vc->add_option("certificate", cert)->required();
  vc->callback([&] { rc = cmd_verify_certificate(spec, cert); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const StructuralError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const SpecError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceError& e) {
    std::cerr << e.what() << "\n";
    return kResource;
  } catch (const ArgumentError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  return rc;
}
