#include "gdifs/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gdifs/attractor.hpp"
#include "gdifs/errors.hpp"

namespace gdifs {

Section6Params Section6Params::example() {
  const Rational tenth(1, 10);
  Section6Params p;
  p.g = {Rational(1, 20), Rational(1, 2), Rational(1, 20),
         Rational(1, 20), Rational(1, 5),  Rational(1, 10)};
  p.r_e = {tenth, tenth, tenth, tenth, tenth, tenth, Rational(7, 20), tenth};
  p.r = tenth;
  return p;
}

RatioSolution solve_ratios_section6(const Rational& g1, const Rational& g2, const Rational& g3,
                                    const Rational& g4) {
  for (const Rational* g : {&g1, &g2, &g3, &g4}) {
    if (g->sign() <= 0) throw ArgumentError("solve_ratios: gaps must be positive");
  }
  RatioSolution out;
  out.ratios = {g1 * g1 / (g2 * g3), g1 * g3 / (g2 * g4), g1 / g2,
                g3 * g3 / (g2 * g4), g1 * g4 / (g2 * g3), g3 / g2};
  out.r = out.ratios[2];
  out.residual = out.ratios[0] + g1 + out.ratios[1] + g2 + out.ratios[2] + g3 + out.ratios[3] -
                 Rational(1);
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] >= Rational(1)) {
      out.reason = "r_e" + std::to_string(i + 1) + " = " + out.ratios[i].str() + " is not < 1";
      return out;
    }
  }
  if (!out.residual.is_zero()) {
    out.reason = "u-row sums to " + (out.residual + Rational(1)).str() + ", not 1";
    return out;
  }
  out.feasible = true;
  return out;
}

std::optional<Rational> Surd::exact() const {
  if (!d.is_perfect_square()) return std::nullopt;
  return (p + Rational(sign) * d.sqrt_exact()) / q;
}

double Surd::approx() const {
  return (p.to_double() + sign * std::sqrt(d.to_double())) / q.to_double();
}

std::string Surd::str() const {
  if (auto e = exact()) return e->str();
  return "(" + p.str() + (sign < 0 ? " - " : " + ") + "sqrt(" + d.str() + "))/" + q.str();
}

QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C) {
  if (A.is_zero()) throw ArgumentError("solve_quadratic: leading coefficient is zero");
  QuadraticRoots out;
  out.discriminant = B * B - Rational(4) * A * C;
  const int ds = out.discriminant.sign();
  if (ds < 0) return out;
  // Keep q positive so that sign=+1 gives the larger root.
  const Rational q = Rational(2) * A;
  const Rational p = -B;
  const Rational qs = q.sign() < 0 ? -q : q;
  const Rational ps = q.sign() < 0 ? B : p;
  if (ds == 0) {
    out.roots.push_back({ps, Rational(0), qs, 1});
    return out;
  }
  out.roots.push_back({ps, out.discriminant, qs, 1});
  out.roots.push_back({ps, out.discriminant, qs, -1});
  return out;
}

QuadraticRoots quadratic_g2(const Rational& alpha) {
  if (alpha.sign() <= 0) throw ArgumentError("quadratic_g2: alpha must be positive");
  return solve_quadratic(Rational(1), Rational(2) * alpha - Rational(1), Rational(4) * alpha);
}

Figure6 build_figure6(const Section6Params& p) {
  for (std::size_t i = 0; i < p.r_e.size(); ++i) {
    if (p.r_e[i].sign() <= 0 || p.r_e[i] >= Rational(1)) {
      throw ArgumentError("build_figure6: r_e" + std::to_string(i + 1) + " not in (0,1)");
    }
  }
  for (std::size_t i = 0; i < p.g.size(); ++i) {
    if (p.g[i].sign() <= 0) {
      throw ArgumentError("build_figure6: g" + std::to_string(i + 1) + " must be positive");
    }
  }
  if (p.r.sign() <= 0 || p.r >= Rational(1)) throw ArgumentError("build_figure6: r not in (0,1)");
  const auto& g = p.g;
  const auto& r = p.r_e;
  if (r[0] + g[0] + r[1] + g[1] + r[2] + g[2] + r[3] != Rational(1) ||
      r[4] + g[3] + r[5] + g[4] + r[6] + g[5] + r[7] != Rational(1)) {
    throw ArgumentError("build_figure6: a row does not sum to 1");
  }
  const Rational one(1);
  std::vector<EdgeSpec> edges = {
      {"e1", "u", "u", Similarity(r[0], Rational(0))},
      {"e2", "u", "v", Similarity(r[1], r[0] + g[0])},
      {"e3", "u", "u", Similarity(r[2], r[0] + g[0] + r[1] + g[1])},
      {"e4", "u", "v", Similarity(r[3], one - r[3])},
      {"e5", "v", "u", Similarity(r[4], Rational(0))},
      {"e6", "v", "v", Similarity(r[5], r[4] + g[3])},
      {"e7", "v", "u", Similarity(r[6], r[4] + g[3] + r[5] + g[4])},
      {"e8", "v", "v", Similarity(r[7], one - r[7])},
  };
  const Rational offset = r[0] * r[0] + r[0] * g[0] + r[0] * r[1] + r[0] * g[1];
  return {GraphIFS::build({"u", "v"}, edges), Similarity(p.r, offset)};
}

IdentityReport verify_map_identities(const GraphIFS& ifs, const Similarity& s) {
  auto map = [&](const char* id) { return ifs.edge(ifs.edge_id(id)).map; };
  const Similarity e1 = map("e1"), e2 = map("e2"), e3 = map("e3"), e4 = map("e4"),
                   e5 = map("e5"), e6 = map("e6");
  IdentityReport out;
  auto add = [&](std::string name, const Similarity& lhs, const Similarity& rhs) {
    out.checks.push_back({std::move(name), lhs, rhs, lhs == rhs});
  };
  add("S o S_e1 = S_e1 o S_e3", s.compose(e1), e1.compose(e3));
  add("S o S_e2 = S_e1 o S_e4", s.compose(e2), e1.compose(e4));
  add("S o S_e3 = S_e2 o S_e5", s.compose(e3), e2.compose(e5));
  add("S o S_e4 = S_e2 o S_e6", s.compose(e4), e2.compose(e6));
  out.all = std::all_of(out.checks.begin(), out.checks.end(),
                        [](const IdentityCheck& c) { return c.holds; });
  return out;
}

namespace {

std::vector<Interval> hulls(const std::vector<LevelInterval>& ivs) {
  std::vector<Interval> out;
  out.reserve(ivs.size());
  for (const auto& li : ivs) out.push_back(li.hull);
  return out;
}

}  // namespace

std::vector<SpanningHit> span_search(const GraphIFS& ifs, VertexId src, VertexId dst,
                                     unsigned max_j, unsigned max_k, unsigned verify_depth,
                                     std::uint64_t cap) {
  if (src >= ifs.vertex_count() || dst >= ifs.vertex_count()) {
    throw ArgumentError("span_search: unknown vertex");
  }
  if (!cssc_check(ifs).ok()) throw ArgumentError("span_search: system is not CSSC");
  const auto level1_gaps = level_k_gaps(ifs, dst, 1, cap);

  std::vector<SpanningHit> out;
  for (unsigned j = 1; j <= max_j; ++j) {
    const auto src_ivs = hulls(level_k_intervals(ifs, src, j, cap));
    for (unsigned k = 1; k <= max_k; ++k) {
      const auto dst_ivs = hulls(level_k_intervals(ifs, dst, k, cap));
      const std::set<std::pair<Rational, Rational>> dst_set = [&] {
        std::set<std::pair<Rational, Rational>> s;
        for (const auto& iv : dst_ivs) s.emplace(iv.lo, iv.hi);
        return s;
      }();
      const Interval& first = src_ivs.front();
      for (const Interval& target : dst_ivs) {
        const Rational ratio = target.length() / first.length();
        if (ratio >= Rational(1)) continue;
        const Similarity cand(ratio, target.lo - ratio * first.lo);
        const bool exact = std::all_of(src_ivs.begin(), src_ivs.end(), [&](const Interval& iv) {
          const Interval im = cand.image(iv);
          return dst_set.count({im.lo, im.hi}) > 0;
        });
        if (!exact) continue;

        const Interval span = cand.image(unit_interval());
        auto gap = std::find_if(level1_gaps.begin(), level1_gaps.end(), [&](const PositionedGap& g) {
          return span.lo <= g.gap.lo && g.gap.hi <= span.hi;
        });
        if (gap == level1_gaps.end()) continue;

        bool contained = true;
        for (unsigned d = 1; d <= verify_depth && contained; ++d) {
          const IntervalSet target_set = level_k_set(ifs, dst, k + d, cap);
          for (const auto& li : level_k_intervals(ifs, src, j + d, cap)) {
            if (!target_set.covers(cand.image(li.hull))) {
              contained = false;
              break;
            }
          }
        }
        if (!contained) continue;

        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const SpanningHit& h) { return h.s_map == cand; });
        if (dup) continue;
        out.push_back({cand, src, dst, j, k, *gap, verify_depth});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SpanningHit& a, const SpanningHit& b) {
    if (a.j != b.j) return a.j < b.j;
    if (a.k != b.k) return a.k < b.k;
    if (a.s_map.offset() != b.s_map.offset()) return a.s_map.offset() < b.s_map.offset();
    return a.s_map.ratio() < b.s_map.ratio();
  });
  return out;
}

}  // namespace gdifs
