#include "gdifs/gaps.hpp"

#include <algorithm>
#include <set>

#include "gdifs/errors.hpp"

namespace gdifs {

std::vector<PositionedGap> level_k_gaps(const GraphIFS& ifs, VertexId u, unsigned k,
                                        std::uint64_t cap) {
  std::vector<PositionedGap> out;
  for (auto& g : level_k_set(ifs, u, k, cap).gaps()) {
    Rational len = g.length();
    out.push_back({std::move(g), std::move(len)});
  }
  return out;
}

namespace {

std::vector<Rational> level1_lengths(const GraphIFS& ifs, VertexId v) {
  std::vector<Rational> out;
  for (const auto& g : level_k_gaps(ifs, v, 1)) out.push_back(g.length);
  if (out.empty()) throw ArgumentError("vertex \"" + ifs.vertex_name(v) + "\" has no level-1 gap");
  return out;
}

}  // namespace

Rational min_level1_gap(const GraphIFS& ifs, VertexId v) {
  auto lens = level1_lengths(ifs, v);
  return *std::min_element(lens.begin(), lens.end());
}

Rational max_level1_gap(const GraphIFS& ifs, VertexId v) {
  auto lens = level1_lengths(ifs, v);
  return *std::max_element(lens.begin(), lens.end());
}

std::vector<Rational> max_gaps(const GraphIFS& ifs) {
  if (!cssc_check(ifs).ok() || !defined_on_unit_interval(ifs)) {
    throw ArgumentError("max_gap needs a CSSC system defined on the unit interval");
  }
  const std::size_t n = ifs.vertex_count();
  std::vector<Rational> m(n);
  for (VertexId v = 0; v < n; ++v) m[v] = max_level1_gap(ifs, v);
  // Each round extends the candidate paths by one edge. Paths long enough
  // that r_max^L * max gap < min gap can never win, so this stabilises.
  for (;;) {
    std::vector<Rational> next = m;
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : ifs.out_edges(v)) {
        const Edge& edge = ifs.edge(e);
        next[v] = max(next[v], edge.map.ratio() * m[edge.to]);
      }
    }
    if (next == m) return m;
    m = std::move(next);
  }
}

Rational max_gap(const GraphIFS& ifs, VertexId u) { return max_gaps(ifs).at(u); }

std::pair<GapCosets, GapCosets> figure1_gap_cosets(const Figure1Params& p) {
  const Rational bd = p.b * p.d;
  const std::vector<Rational> mixed{p.a, bd, p.c};
  GapCosets gu{{{p.g_u, {p.a}}, {bd * p.g_u, mixed}, {p.b * p.g_v, mixed}}};
  GapCosets gv{{{p.g_v, {p.c}}, {bd * p.g_v, mixed}, {p.d * p.g_u, mixed}}};
  return {std::move(gu), std::move(gv)};
}

std::vector<Rational> enumerate_coset_lengths(const GapCosets& cosets, const Rational& threshold) {
  if (threshold.sign() <= 0) throw ArgumentError("enumerate_coset_lengths: threshold must be > 0");
  std::set<Rational> found;
  for (const auto& coset : cosets.cosets) {
    if (coset.coefficient.sign() <= 0) throw ArgumentError("coset coefficient must be positive");
    for (const auto& g : coset.generators) {
      if (g.sign() <= 0 || g >= Rational(1)) {
        throw ArgumentError("coset generator " + g.str() + " not in (0,1)");
      }
    }
    // Every generator shrinks, so the frontier dies out below the threshold.
    std::vector<Rational> frontier;
    if (coset.coefficient >= threshold) frontier.push_back(coset.coefficient);
    std::set<Rational> local(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
      std::vector<Rational> next;
      for (const auto& x : frontier) {
        for (const auto& g : coset.generators) {
          Rational y = x * g;
          if (y >= threshold && local.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    found.insert(local.begin(), local.end());
  }
  return {found.begin(), found.end()};
}

bool coset_member(const GapCosets& cosets, const Rational& x) {
  if (x.sign() <= 0) return false;
  const auto members = enumerate_coset_lengths(cosets, x);
  return std::binary_search(members.begin(), members.end(), x);
}

Condition2Report condition2_check(const GraphIFS& ifs, VertexId u,
                                  const std::vector<VertexId>& vset) {
  Condition2Report report;
  report.u = u;
  report.max_gap_u = max_gap(ifs, u);
  report.pass = true;
  for (VertexId v : vset) {
    Rational min_gap = min_level1_gap(ifs, v);
    const bool holds = report.max_gap_u <= min_gap;
    report.pass = report.pass && holds;
    report.comparisons.push_back({v, std::move(min_gap), holds});
  }
  const auto lens = level1_lengths(ifs, u);
  report.level1_gaps_equal_at_u =
      std::all_of(lens.begin(), lens.end(), [&](const Rational& x) { return x == lens.front(); });
  return report;
}

}  // namespace gdifs
