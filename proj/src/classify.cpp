#include "gdifs/classify.hpp"

#include <algorithm>
#include <set>

#include "gdifs/errors.hpp"

namespace gdifs {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotStandardAttractor: return "NotStandardAttractor";
    case Verdict::StandardAttractor: return "StandardAttractor";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::P2M: return "P2M";
    case TheoremTag::P2Q: return "P2Q";
    case TheoremTag::P2T: return "P2T";
    case TheoremTag::P2nv1: return "P2nv1";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::NotStandardAttractor, Verdict::StandardAttractor, Verdict::Unknown}) {
    if (to_string(v) == s) return v;
  }
  throw ArgumentError("unknown verdict \"" + s + "\"");
}

TheoremTag parse_theorem(const std::string& s) {
  for (TheoremTag t : {TheoremTag::P2M, TheoremTag::P2Q, TheoremTag::P2T, TheoremTag::P2nv1}) {
    if (to_string(t) == s) return t;
  }
  throw ArgumentError("unknown theorem tag \"" + s + "\"");
}

std::optional<Condition1Witness> find_condition1_witness(const GraphIFS& ifs, VertexId u) {
  if (u >= ifs.vertex_count()) throw ArgumentError("find_condition1_witness: unknown vertex");
  for (const Path& cycle : simple_cycles(ifs)) {
    if (ifs.attached(cycle, u)) continue;
    const VertexId w = ifs.initial(cycle);
    auto path = simple_path(ifs, u, w);
    if (!path) continue;
    Condition1Witness out{w, cycle, *path, {}};
    std::set<VertexId> vs;
    for (VertexId x : ifs.vertex_list(cycle)) vs.insert(x);
    for (VertexId x : ifs.vertex_list(*path)) vs.insert(x);
    out.vprime.assign(vs.begin(), vs.end());
    return out;
  }
  return std::nullopt;
}

namespace {

bool all_cycles_through(const GraphIFS& g, VertexId u) {
  const auto cycles = simple_cycles(g);
  return std::all_of(cycles.begin(), cycles.end(),
                     [&](const Path& c) { return g.attached(c, u); });
}

// Replaces, where possible, a block of x's out-edges that duplicates all of
// y's out-edges (same map, same target) by one identity edge x -> y. Valid
// because that block contributes exactly F_y to F_x. Identity edges never
// form a cycle.
GraphIFS collapse_containments(const GraphIFS& ifs) {
  const std::size_t n = ifs.vertex_count();
  std::vector<bool> removed(ifs.edge_count(), false);
  std::vector<std::pair<VertexId, VertexId>> links;

  auto link_reaches = [&](VertexId from, VertexId to) {
    std::vector<VertexId> stack{from};
    std::vector<bool> seen(n, false);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      if (seen[x]) continue;
      seen[x] = true;
      for (const auto& [a, b] : links) {
        if (a == x) stack.push_back(b);
      }
    }
    return false;
  };

  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (x == y || link_reaches(y, x)) continue;
      std::vector<EdgeId> match;
      for (EdgeId ey : ifs.out_edges(y)) {
        const Edge& want = ifs.edge(ey);
        bool found = false;
        for (EdgeId ex : ifs.out_edges(x)) {
          if (removed[ex] || std::find(match.begin(), match.end(), ex) != match.end()) continue;
          const Edge& have = ifs.edge(ex);
          if (have.to == want.to && have.map == want.map) {
            match.push_back(ex);
            found = true;
            break;
          }
        }
        if (!found) break;
      }
      if (match.size() != ifs.out_edges(y).size()) continue;
      for (EdgeId e : match) removed[e] = true;
      links.emplace_back(x, y);
    }
  }

  std::vector<EdgeSpec> specs;
  for (VertexId x = 0; x < n; ++x) {
    for (EdgeId e : ifs.out_edges(x)) {
      if (removed[e]) continue;
      const Edge& ed = ifs.edge(e);
      specs.push_back({ed.id, ifs.vertex_name(ed.from), ifs.vertex_name(ed.to), ed.map});
    }
    for (const auto& [a, b] : links) {
      if (a != x) continue;
      specs.push_back({ifs.vertex_name(a) + ">=" + ifs.vertex_name(b), ifs.vertex_name(a),
                       ifs.vertex_name(b), Similarity::identity()});
    }
  }
  return GraphIFS::build(ifs.vertices(), specs);
}

}  // namespace

StandardRewrite rewrite_as_standard(const GraphIFS& ifs, VertexId u) {
  if (u >= ifs.vertex_count()) throw ArgumentError("rewrite: unknown vertex");
  StandardRewrite out;
  GraphIFS g = ifs;
  if (!all_cycles_through(g, u)) {
    g = collapse_containments(ifs);
    out.containment_substituted = true;
    if (!all_cycles_through(g, u)) {
      throw ArgumentError("rewrite: some simple cycle avoids vertex \"" + ifs.vertex_name(u) +
                          "\"");
    }
  }

  const auto n = static_cast<unsigned>(g.vertex_count());
  // A path of length n that has not come back to u would repeat a vertex and
  // so contain a cycle avoiding u; hence every path below returns to u.
  std::vector<Path> kept;
  for (const Path& p : paths_from(g, u, n)) {
    Path cut;
    for (EdgeId e : p.edges) {
      cut.edges.push_back(e);
      if (g.edge(e).to == u) break;
    }
    if (g.terminal(cut) != u) throw ArgumentError("rewrite: path never returns to u");
    if (std::find(kept.begin(), kept.end(), cut) == kept.end()) kept.push_back(cut);
  }

  struct Item {
    Similarity map;
    Path path;
  };
  std::vector<Item> items;
  for (const Path& p : kept) {
    // S_{pq}(F_u) lies inside S_p(F_u) whenever q returns to u.
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Path& q) {
      return q.length() < p.length() && p.has_prefix(q);
    });
    if (absorbed) continue;
    Similarity s = path_similarity(g, p);
    const bool dup = std::any_of(items.begin(), items.end(),
                                 [&](const Item& it) { return it.map == s; });
    if (dup) continue;
    if (!s.is_contracting()) throw ArgumentError("rewrite: produced a non-contracting map");
    items.push_back({std::move(s), p});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    const Interval a = x.map.image(unit_interval());
    const Interval b = y.map.image(unit_interval());
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  for (const Item& it : items) {
    out.maps.push_back(it.map);
    out.sources.push_back(g.path_str(it.path));
  }
  return out;
}

std::vector<Similarity> rewrite_standard_P2nv1(const GraphIFS& ifs, VertexId u) {
  return rewrite_as_standard(ifs, u).maps;
}

namespace {

Certificate blank(const GraphIFS& ifs, VertexId u, TheoremTag theorem, unsigned depth,
                  bool reflected) {
  Certificate c;
  c.digest = graph_digest(ifs);
  c.vertex = u;
  c.vertex_name = ifs.vertex_name(u);
  c.theorem = theorem;
  c.depth = depth;
  c.reflected = reflected;
  return c;
}

void mark_unmet(Certificate& c, const std::string& what) {
  c.verdict = Verdict::Unknown;
  if (c.unmet.empty()) {
    c.unmet = what;
  } else {
    c.notes.push_back("also unmet: " + what);
  }
}

// Shared front half of the gap and measure tests. Returns true when the
// certificate is already final.
bool hypotheses_and_condition1(const GraphIFS& ifs, VertexId u, Certificate& c) {
  if (u >= ifs.vertex_count()) throw ArgumentError("classify: unknown vertex");
  require_valid(ifs);
  if (!cssc_check(ifs).ok()) {
    mark_unmet(c, "hypothesis: CSSC fails");
    return true;
  }
  if (!defined_on_unit_interval(ifs)) {
    mark_unmet(c, "hypothesis: not defined on the unit interval");
    return true;
  }
  c.condition1 = find_condition1_witness(ifs, u);
  if (!c.condition1) {
    c.standard = rewrite_as_standard(ifs, u);
    c.verdict = Verdict::StandardAttractor;
    c.theorem = TheoremTag::P2nv1;
    return true;
  }
  return false;
}

void condition3(const GraphIFS& ifs, VertexId u, Certificate& c) {
  for (VertexId v : c.condition1->vprime) {
    if (v == u) continue;
    for (bool refl : {false, true}) {
      if (refl && !c.reflected) continue;
      auto r = refute_subset(ifs, u, v, c.depth, refl);
      if (r) {
        c.refutations.push_back(*r);
      } else {
        mark_unmet(c, std::string("condition 3: F_") + ifs.vertex_name(u) + " inside " +
                          (refl ? "R(F_" : "F_") + ifs.vertex_name(v) + (refl ? ")" : "") +
                          " not refuted at depth " + std::to_string(c.depth));
      }
    }
  }
}

std::vector<VertexId> measure_required(const GraphIFS& ifs, VertexId u,
                                       const std::vector<VertexId>& vprime) {
  std::set<VertexId> req{u};
  for (VertexId v : vprime) {
    for (EdgeId e : ifs.out_edges(v)) req.insert(ifs.edge(e).to);
  }
  return {req.begin(), req.end()};
}

MeasureEvidence measure_evidence(const Figure1Params& p, const std::vector<VertexId>& required) {
  MeasureEvidence ev;
  ev.params = p;
  ev.required = required;
  ev.h.assign(2, std::nullopt);
  const MeasureResult fwd = hausdorff_measure_figure1(p);
  const MeasureResult rev = hausdorff_measure_figure1(p.swapped());
  ev.s = fwd.s;
  if (fwd.h_u) {
    ev.h[0] = fwd.h_u;
    ev.h[1] = fwd.h_v;
  }
  if (rev.h_u) {
    ev.h[1] = rev.h_u;
    if (!ev.h[0]) ev.h[0] = rev.h_v;
  }
  return ev;
}

constexpr double kMeasureEps = 1e-9;

bool measure_ok(const MeasureEvidence& ev) {
  for (VertexId v : ev.required) {
    if (v >= ev.h.size() || !ev.h[v]) return false;
    if (boost::multiprecision::abs(*ev.h[v] - 1) > Real(kMeasureEps)) return false;
  }
  return true;
}

}  // namespace

std::pair<Certificate, Certificate> classify_P2M(const Figure1Params& p) {
  const GraphIFS g = figure1_graph(p);
  std::pair<Certificate, Certificate> out{blank(g, 0, TheoremTag::P2M, 0, false),
                                          blank(g, 1, TheoremTag::P2M, 0, false)};
  for (Certificate* c : {&out.first, &out.second}) {
    c->figure1 = p;
    if (figure1_components_equal(p)) {
      c->verdict = Verdict::Unknown;
      c->unmet = "F_u = F_v (a = c and b = d)";
      c->notes.push_back("the two-vertex system reduces to a standard IFS");
    } else {
      c->verdict = Verdict::NotStandardAttractor;
    }
  }
  return out;
}

Certificate classify_P2Q(const GraphIFS& ifs, VertexId u, unsigned depth, bool reflected) {
  if (u >= ifs.vertex_count()) throw ArgumentError("classify: unknown vertex");
  Certificate c = blank(ifs, u, TheoremTag::P2Q, depth, reflected);
  if (hypotheses_and_condition1(ifs, u, c)) return c;
  c.condition2 = condition2_check(ifs, u, c.condition1->vprime);
  if (!c.condition2->pass) mark_unmet(c, "condition 2: max G_u exceeds some min G_v^1");
  condition3(ifs, u, c);
  if (c.unmet.empty()) c.verdict = Verdict::NotStandardAttractor;
  return c;
}

Certificate classify_P2T(const GraphIFS& ifs, VertexId u, unsigned depth,
                         bool minimal_edges_asserted, bool reflected) {
  if (u >= ifs.vertex_count()) throw ArgumentError("classify: unknown vertex");
  Certificate c = blank(ifs, u, TheoremTag::P2T, depth, reflected);
  c.minimal_edges_asserted = minimal_edges_asserted;
  if (hypotheses_and_condition1(ifs, u, c)) return c;
  if (!minimal_edges_asserted) {
    mark_unmet(c, "hypothesis: minimal edge count not asserted");
    return c;
  }
  const auto fig = as_figure1(ifs);
  if (!fig) {
    mark_unmet(c, "condition 2: Hausdorff measure unavailable outside the two-vertex family");
    return c;
  }
  c.figure1 = fig;
  c.measure = measure_evidence(*fig, measure_required(ifs, u, c.condition1->vprime));
  if (!measure_ok(*c.measure)) mark_unmet(c, "condition 2: H^s is not 1 at a required vertex");
  condition3(ifs, u, c);
  if (c.unmet.empty()) c.verdict = Verdict::NotStandardAttractor;
  return c;
}

namespace {

bool same_report(const Condition2Report& a, const Condition2Report& b) {
  if (a.u != b.u || a.max_gap_u != b.max_gap_u || a.pass != b.pass ||
      a.level1_gaps_equal_at_u != b.level1_gaps_equal_at_u ||
      a.comparisons.size() != b.comparisons.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.comparisons.size(); ++i) {
    const auto& x = a.comparisons[i];
    const auto& y = b.comparisons[i];
    if (x.v != y.v || x.min_level1_gap != y.min_level1_gap || x.holds != y.holds) return false;
  }
  return true;
}

void check_condition1(const GraphIFS& ifs, const Certificate& c, ReplayResult& r) {
  auto fail = [&](const std::string& m) {
    r.ok = false;
    r.problems.push_back(m);
  };
  if (!c.condition1) {
    fail("missing condition 1 witness");
    return;
  }
  const auto& w = *c.condition1;
  if (w.w >= ifs.vertex_count() || w.w == c.vertex) fail("condition 1: bad w");
  if (!is_simple_cycle(ifs, w.cycle)) {
    fail("condition 1: cycle is not a simple cycle");
    return;
  }
  if (ifs.attached(w.cycle, c.vertex)) fail("condition 1: cycle passes through u");
  if (!ifs.attached(w.cycle, w.w)) fail("condition 1: cycle avoids w");
  if (!is_simple_path(ifs, w.path) || ifs.initial(w.path) != c.vertex ||
      ifs.terminal(w.path) != w.w) {
    fail("condition 1: path is not a simple path u -> w");
    return;
  }
  std::set<VertexId> vs;
  for (VertexId x : ifs.vertex_list(w.cycle)) vs.insert(x);
  for (VertexId x : ifs.vertex_list(w.path)) vs.insert(x);
  if (std::vector<VertexId>(vs.begin(), vs.end()) != w.vprime) fail("condition 1: V' mismatch");
}

void check_refutations(const GraphIFS& ifs, const Certificate& c, ReplayResult& r) {
  for (const auto& ref : c.refutations) {
    if (ref.source != c.vertex || !replay_refutation(ifs, ref)) {
      r.ok = false;
      r.problems.push_back("refutation against " + ifs.vertex_name(ref.target) +
                           " does not replay");
    }
  }
  for (VertexId v : c.condition1->vprime) {
    if (v == c.vertex) continue;
    for (bool refl : {false, true}) {
      if (refl && !c.reflected) continue;
      const bool have = std::any_of(c.refutations.begin(), c.refutations.end(), [&](const auto& x) {
        return x.target == v && x.reflected == refl;
      });
      if (!have) {
        r.ok = false;
        r.problems.push_back("no refutation for vertex " + ifs.vertex_name(v));
      }
    }
  }
}

}  // namespace

ReplayResult verify_certificate(const GraphIFS& ifs, const Certificate& c) {
  ReplayResult r;
  auto fail = [&](const std::string& m) {
    r.ok = false;
    r.problems.push_back(m);
  };
  if (graph_digest(ifs) != c.digest) {
    fail("digest mismatch");
    return r;
  }
  if (c.vertex >= ifs.vertex_count() || ifs.vertex_name(c.vertex) != c.vertex_name) {
    fail("subject vertex mismatch");
    return r;
  }
  switch (c.verdict) {
    case Verdict::Unknown:
      if (c.unmet.empty()) fail("Unknown certificate names no unmet condition");
      return r;
    case Verdict::StandardAttractor: {
      try {
        const StandardRewrite again = rewrite_as_standard(ifs, c.vertex);
        if (again.maps != c.standard.maps) fail("standard maps do not match the rewrite");
      } catch (const ArgumentError& e) {
        fail(e.what());
      }
      return r;
    }
    case Verdict::NotStandardAttractor: break;
  }

  if (c.theorem == TheoremTag::P2M) {
    const auto fig = as_figure1(ifs);
    if (!fig || !c.figure1 || !(*fig == *c.figure1)) {
      fail("not the recorded two-vertex instance");
    } else if (figure1_components_equal(*fig)) {
      fail("F_u = F_v, so the two-vertex argument does not apply");
    }
    return r;
  }
  if (c.theorem == TheoremTag::P2nv1) {
    fail("P2nv1 certificates must be StandardAttractor");
    return r;
  }

  try {
    require_valid(ifs);
  } catch (const ValidationError& e) {
    fail(e.what());
    return r;
  }
  if (!cssc_check(ifs).ok() || !defined_on_unit_interval(ifs)) {
    fail("hypotheses do not hold");
    return r;
  }
  check_condition1(ifs, c, r);
  if (!r.ok) return r;

  if (c.theorem == TheoremTag::P2Q) {
    if (!c.condition2) {
      fail("missing condition 2 report");
    } else {
      const auto again = condition2_check(ifs, c.vertex, c.condition1->vprime);
      if (!same_report(again, *c.condition2)) fail("condition 2 report does not recompute");
      if (!again.pass) fail("condition 2 fails");
    }
  } else {
    if (!c.minimal_edges_asserted) fail("minimal edge count was not asserted");
    const auto fig = as_figure1(ifs);
    if (!fig || !c.measure) {
      fail("measure evidence unavailable");
    } else {
      const auto again =
          measure_evidence(*fig, measure_required(ifs, c.vertex, c.condition1->vprime));
      if (again.required != c.measure->required) fail("measure: required vertices differ");
      if (!measure_ok(again)) fail("measure: H^s is not 1 at a required vertex");
      for (std::size_t i = 0; i < again.h.size() && i < c.measure->h.size(); ++i) {
        if (again.h[i].has_value() != c.measure->h[i].has_value() ||
            (again.h[i] &&
             boost::multiprecision::abs(*again.h[i] - *c.measure->h[i]) > Real(kMeasureEps))) {
          fail("measure: recorded value does not recompute");
        }
      }
    }
  }
  check_refutations(ifs, c, r);
  return r;
}

}  // namespace gdifs
