#include "gdifs/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "gdifs/errors.hpp"

namespace gdifs {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw SpecError("spec field " + field + ": " + what, 0, field);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) field_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where + "." + key, "missing");
  return *it;
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

Rational get_rational(const json& v, const std::string& field) {
  const std::string s = get_string(v, field);
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    field_error(field, "\"" + s + "\" is not a rational");
  }
}

bool get_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) field_error(field, "expected a boolean");
  return v.get<bool>();
}

unsigned get_unsigned(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) field_error(field, "expected a non-negative integer");
  return v.get<unsigned>();
}

}  // namespace

SpecDocument parse_spec_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw SpecError("spec parse error at line " + std::to_string(line) + ": " + e.what(), line,
                    "");
  }
  SpecDocument doc;
  const json& vs = member(root, "vertices", "spec");
  if (!vs.is_array()) field_error("vertices", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    doc.vertices.push_back(get_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  }
  const json& es = member(root, "edges", "spec");
  if (!es.is_array()) field_error("edges", "expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = "edges[" + std::to_string(i) + "]";
    const json& e = es[i];
    EdgeSpec spec;
    spec.id = get_string(member(e, "id", at), at + ".id");
    spec.from = get_string(member(e, "from", at), at + ".from");
    spec.to = get_string(member(e, "to", at), at + ".to");
    const Rational ratio = get_rational(member(e, "ratio", at), at + ".ratio");
    const Rational offset = get_rational(member(e, "offset", at), at + ".offset");
    bool reflect = false;
    if (auto it = e.find("reflect"); it != e.end()) reflect = get_bool(*it, at + ".reflect");
    // Similarity needs a positive ratio, so this validation issue is raised
    // here rather than by validate_graph.
    if (ratio.sign() <= 0) {
      const std::string issue = "edge \"" + spec.id + "\" ratio " + ratio.str() + " not in (0,1)";
      throw ValidationError("invalid graph IFS: " + issue, {issue});
    }
    spec.map = Similarity(ratio, offset, reflect);
    doc.edges.push_back(std::move(spec));
  }
  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) field_error("metadata", "expected an object");
    if (auto n = it->find("name"); n != it->end()) doc.name = get_string(*n, "metadata.name");
    if (auto d = it->find("description"); d != it->end()) {
      doc.description = get_string(*d, "metadata.description");
    }
  }
  return doc;
}

GraphIFS load_spec(std::string_view text) {
  SpecDocument doc = parse_spec_document(text);
  GraphIFS g = GraphIFS::build(std::move(doc.vertices), doc.edges);
  require_valid(g);
  return g;
}

GraphIFS load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read spec file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_spec(buf.str());
}

std::string dump_spec(const GraphIFS& ifs, const std::optional<std::string>& name,
                      const std::optional<std::string>& description) {
  json root;
  root["vertices"] = ifs.vertices();
  json edges = json::array();
  for (const Edge& e : ifs.edges()) {
    json je{{"id", e.id},
            {"from", ifs.vertex_name(e.from)},
            {"to", ifs.vertex_name(e.to)},
            {"ratio", e.map.ratio().str()},
            {"offset", e.map.offset().str()}};
    if (e.map.reflects()) je["reflect"] = true;
    edges.push_back(std::move(je));
  }
  root["edges"] = std::move(edges);
  if (name || description) {
    json meta = json::object();
    if (name) meta["name"] = *name;
    if (description) meta["description"] = *description;
    root["metadata"] = std::move(meta);
  }
  return root.dump(2) + "\n";
}

namespace {

json path_json(const GraphIFS& ifs, const Path& p) { return ifs.edge_ids(p); }

Path path_from(const GraphIFS& ifs, const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an edge-id list");
  Path p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string id = get_string(j[i], field + "[" + std::to_string(i) + "]");
    try {
      p.edges.push_back(ifs.edge_id(id));
    } catch (const ArgumentError&) {
      field_error(field, "unknown edge \"" + id + "\"");
    }
  }
  return p;
}

VertexId vertex_from(const GraphIFS& ifs, const json& j, const std::string& field) {
  const std::string name = get_string(j, field);
  try {
    return ifs.vertex(name);
  } catch (const ArgumentError&) {
    field_error(field, "unknown vertex \"" + name + "\"");
  }
}

json vertices_json(const GraphIFS& ifs, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(ifs.vertex_name(v));
  return out;
}

std::vector<VertexId> vertices_from(const GraphIFS& ifs, const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected a vertex list");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vertex_from(ifs, j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json similarity_json(const Similarity& s) {
  return {{"ratio", s.ratio().str()}, {"offset", s.offset().str()}, {"reflect", s.reflects()}};
}

Similarity similarity_from(const json& j, const std::string& field) {
  const Rational ratio = get_rational(member(j, "ratio", field), field + ".ratio");
  if (ratio.sign() <= 0) field_error(field + ".ratio", "must be positive");
  return Similarity(ratio, get_rational(member(j, "offset", field), field + ".offset"),
                    get_bool(member(j, "reflect", field), field + ".reflect"));
}

std::string real_str(const Real& r) { return r.str(30); }

Real real_from(const json& j, const std::string& field) {
  const std::string s = get_string(j, field);
  try {
    return Real(s);
  } catch (const std::exception&) {
    field_error(field, "\"" + s + "\" is not a number");
  }
}

json params_json(const Figure1Params& p) {
  return {{"a", p.a.str()},     {"g_u", p.g_u.str()}, {"b", p.b.str()},
          {"c", p.c.str()},     {"g_v", p.g_v.str()}, {"d", p.d.str()}};
}

Figure1Params params_from(const json& j, const std::string& field) {
  auto r = [&](const char* k) { return get_rational(member(j, k, field), field + "." + k); };
  try {
    return Figure1Params::make(r("a"), r("g_u"), r("b"), r("c"), r("g_v"), r("d"));
  } catch (const ArgumentError& e) {
    field_error(field, e.what());
  }
}

}  // namespace

json certificate_to_json(const GraphIFS& ifs, const Certificate& c) {
  json j;
  j["subject"] = {{"digest", c.digest}, {"vertex", c.vertex_name}};
  j["verdict"] = to_string(c.verdict);
  j["theorem"] = to_string(c.theorem);
  j["depth"] = c.depth;
  j["flags"] = {{"reflected", c.reflected}, {"minimal_edges_asserted", c.minimal_edges_asserted}};
  if (!c.unmet.empty()) j["unmet"] = c.unmet;
  j["notes"] = c.notes;

  json ev = json::object();
  if (c.verdict == Verdict::StandardAttractor) {
    json maps = json::array();
    for (const auto& m : c.standard.maps) maps.push_back(similarity_json(m));
    ev["standard"] = {{"maps", maps},
                      {"sources", c.standard.sources},
                      {"containment_substituted", c.standard.containment_substituted}};
  }
  if (c.condition1) {
    const auto& w = *c.condition1;
    ev["condition1"] = {{"w", ifs.vertex_name(w.w)},
                        {"cycle", path_json(ifs, w.cycle)},
                        {"path", path_json(ifs, w.path)},
                        {"vprime", vertices_json(ifs, w.vprime)}};
  }
  if (c.condition2) {
    const auto& r = *c.condition2;
    json cmp = json::array();
    for (const auto& x : r.comparisons) {
      cmp.push_back({{"v", ifs.vertex_name(x.v)},
                     {"min_level1_gap", x.min_level1_gap.str()},
                     {"holds", x.holds}});
    }
    ev["condition2"] = {{"u", ifs.vertex_name(r.u)},
                        {"max_gap_u", r.max_gap_u.str()},
                        {"comparisons", cmp},
                        {"pass", r.pass},
                        {"level1_gaps_equal_at_u", r.level1_gaps_equal_at_u}};
  }
  if (!c.refutations.empty()) {
    json refs = json::array();
    for (const auto& r : c.refutations) {
      refs.push_back({{"source", ifs.vertex_name(r.source)},
                      {"target", ifs.vertex_name(r.target)},
                      {"reflected", r.reflected},
                      {"witness_point", r.witness_point.str()},
                      {"witness_path", path_json(ifs, r.witness_path)},
                      {"from_one", r.from_one},
                      {"gap", {r.gap.lo.str(), r.gap.hi.str()}},
                      {"witness_depth", r.witness_depth},
                      {"target_level", r.target_level}});
    }
    ev["refutations"] = std::move(refs);
  }
  if (c.measure) {
    json h = json::array();
    for (const auto& x : c.measure->h) h.push_back(x ? json(real_str(*x)) : json(nullptr));
    ev["measure"] = {{"params", params_json(c.measure->params)},
                     {"s", real_str(c.measure->s)},
                     {"h", h},
                     {"required", vertices_json(ifs, c.measure->required)}};
  }
  if (c.figure1) ev["figure1"] = params_json(*c.figure1);
  j["evidence"] = std::move(ev);
  return j;
}

Certificate certificate_from_json(const GraphIFS& ifs, const json& j) {
  Certificate c;
  const json& subject = member(j, "subject", "certificate");
  c.digest = get_string(member(subject, "digest", "subject"), "subject.digest");
  c.vertex_name = get_string(member(subject, "vertex", "subject"), "subject.vertex");
  c.vertex = vertex_from(ifs, subject["vertex"], "subject.vertex");
  try {
    c.verdict = parse_verdict(get_string(member(j, "verdict", "certificate"), "verdict"));
    c.theorem = parse_theorem(get_string(member(j, "theorem", "certificate"), "theorem"));
  } catch (const ArgumentError& e) {
    field_error("verdict/theorem", e.what());
  }
  c.depth = get_unsigned(member(j, "depth", "certificate"), "depth");
  const json& flags = member(j, "flags", "certificate");
  c.reflected = get_bool(member(flags, "reflected", "flags"), "flags.reflected");
  c.minimal_edges_asserted =
      get_bool(member(flags, "minimal_edges_asserted", "flags"), "flags.minimal_edges_asserted");
  if (auto it = j.find("unmet"); it != j.end()) c.unmet = get_string(*it, "unmet");
  if (auto it = j.find("notes"); it != j.end()) {
    if (!it->is_array()) field_error("notes", "expected an array");
    for (const auto& n : *it) c.notes.push_back(get_string(n, "notes[]"));
  }

  const json& ev = member(j, "evidence", "certificate");
  if (auto it = ev.find("standard"); it != ev.end()) {
    const json& maps = member(*it, "maps", "evidence.standard");
    if (!maps.is_array()) field_error("evidence.standard.maps", "expected an array");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      c.standard.maps.push_back(
          similarity_from(maps[i], "evidence.standard.maps[" + std::to_string(i) + "]"));
    }
    for (const auto& s : member(*it, "sources", "evidence.standard")) {
      c.standard.sources.push_back(get_string(s, "evidence.standard.sources[]"));
    }
    c.standard.containment_substituted =
        get_bool(member(*it, "containment_substituted", "evidence.standard"),
                 "evidence.standard.containment_substituted");
  }
  if (auto it = ev.find("condition1"); it != ev.end()) {
    const std::string at = "evidence.condition1";
    Condition1Witness w;
    w.w = vertex_from(ifs, member(*it, "w", at), at + ".w");
    w.cycle = path_from(ifs, member(*it, "cycle", at), at + ".cycle");
    w.path = path_from(ifs, member(*it, "path", at), at + ".path");
    w.vprime = vertices_from(ifs, member(*it, "vprime", at), at + ".vprime");
    c.condition1 = std::move(w);
  }
  if (auto it = ev.find("condition2"); it != ev.end()) {
    const std::string at = "evidence.condition2";
    Condition2Report r;
    r.u = vertex_from(ifs, member(*it, "u", at), at + ".u");
    r.max_gap_u = get_rational(member(*it, "max_gap_u", at), at + ".max_gap_u");
    r.pass = get_bool(member(*it, "pass", at), at + ".pass");
    r.level1_gaps_equal_at_u =
        get_bool(member(*it, "level1_gaps_equal_at_u", at), at + ".level1_gaps_equal_at_u");
    const json& cmp = member(*it, "comparisons", at);
    if (!cmp.is_array()) field_error(at + ".comparisons", "expected an array");
    for (std::size_t i = 0; i < cmp.size(); ++i) {
      const std::string f = at + ".comparisons[" + std::to_string(i) + "]";
      r.comparisons.push_back({vertex_from(ifs, member(cmp[i], "v", f), f + ".v"),
                               get_rational(member(cmp[i], "min_level1_gap", f), f + ".min_level1_gap"),
                               get_bool(member(cmp[i], "holds", f), f + ".holds")});
    }
    c.condition2 = std::move(r);
  }
  if (auto it = ev.find("refutations"); it != ev.end()) {
    if (!it->is_array()) field_error("evidence.refutations", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& x = (*it)[i];
      const std::string f = "evidence.refutations[" + std::to_string(i) + "]";
      SubsetRefutation r;
      r.source = vertex_from(ifs, member(x, "source", f), f + ".source");
      r.target = vertex_from(ifs, member(x, "target", f), f + ".target");
      r.reflected = get_bool(member(x, "reflected", f), f + ".reflected");
      r.witness_point = get_rational(member(x, "witness_point", f), f + ".witness_point");
      r.witness_path = path_from(ifs, member(x, "witness_path", f), f + ".witness_path");
      r.from_one = get_bool(member(x, "from_one", f), f + ".from_one");
      const json& gap = member(x, "gap", f);
      if (!gap.is_array() || gap.size() != 2) field_error(f + ".gap", "expected [lo, hi]");
      r.gap = {get_rational(gap[0], f + ".gap[0]"), get_rational(gap[1], f + ".gap[1]")};
      r.witness_depth = get_unsigned(member(x, "witness_depth", f), f + ".witness_depth");
      r.target_level = get_unsigned(member(x, "target_level", f), f + ".target_level");
      c.refutations.push_back(std::move(r));
    }
  }
  if (auto it = ev.find("measure"); it != ev.end()) {
    const std::string at = "evidence.measure";
    MeasureEvidence m;
    m.params = params_from(member(*it, "params", at), at + ".params");
    m.s = real_from(member(*it, "s", at), at + ".s");
    const json& h = member(*it, "h", at);
    if (!h.is_array()) field_error(at + ".h", "expected an array");
    for (const auto& x : h) {
      m.h.push_back(x.is_null() ? std::optional<Real>() : real_from(x, at + ".h[]"));
    }
    m.required = vertices_from(ifs, member(*it, "required", at), at + ".required");
    c.measure = std::move(m);
  }
  if (auto it = ev.find("figure1"); it != ev.end()) {
    c.figure1 = params_from(*it, "evidence.figure1");
  }
  return c;
}

}  // namespace gdifs
