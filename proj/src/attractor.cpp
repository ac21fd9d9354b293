#include "gdifs/attractor.hpp"

#include <algorithm>
#include <map>

#include "gdifs/errors.hpp"

namespace gdifs {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  IntervalSet out;
  for (auto& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      if (out.intervals_.back().hi < iv.hi) out.intervals_.back().hi = std::move(iv.hi);
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(x);
}

bool IntervalSet::covers(const Interval& iv) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), iv.lo,
                             [](const Rational& v, const Interval& x) { return v < x.lo; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->contains(iv);
}

std::vector<Interval> IntervalSet::gaps() const {
  std::vector<Interval> out;
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    out.push_back({intervals_[i - 1].hi, intervals_[i].lo});
  }
  return out;
}

IntervalSet IntervalSet::transformed(const Similarity& s) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back(s.image(iv));
  return from_intervals(std::move(out));
}

namespace {

class LevelMemo {
 public:
  explicit LevelMemo(const GraphIFS& ifs) : ifs_(ifs) {}

  const IntervalSet& get(VertexId v, unsigned k) {
    auto key = std::make_pair(v, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    IntervalSet result;
    if (k == 0) {
      result = IntervalSet::from_intervals({unit_interval()});
    } else {
      std::vector<Interval> parts;
      for (EdgeId e : ifs_.out_edges(v)) {
        const Edge& edge = ifs_.edge(e);
        for (const auto& iv : get(edge.to, k - 1).intervals()) parts.push_back(edge.map.image(iv));
      }
      result = IntervalSet::from_intervals(std::move(parts));
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const GraphIFS& ifs_;
  std::map<std::pair<VertexId, unsigned>, IntervalSet> memo_;
};

void check_cap(const GraphIFS& ifs, VertexId u, unsigned k, std::uint64_t cap) {
  if (u >= ifs.vertex_count()) throw ArgumentError("unknown vertex index");
  const std::uint64_t n = count_paths(ifs, u, k);
  if (n > cap) {
    throw ResourceError("level-" + std::to_string(k) + " set needs " + std::to_string(n) +
                            " intervals, cap is " + std::to_string(cap),
                        n);
  }
}

}  // namespace

IntervalSet level_k_set(const GraphIFS& ifs, VertexId u, unsigned k, std::uint64_t cap) {
  check_cap(ifs, u, k, cap);
  LevelMemo memo(ifs);
  return memo.get(u, k);
}

std::vector<IntervalSet> level_sets(const GraphIFS& ifs, VertexId u, unsigned k,
                                    std::uint64_t cap) {
  check_cap(ifs, u, k, cap);
  LevelMemo memo(ifs);
  std::vector<IntervalSet> out;
  for (unsigned j = 0; j <= k; ++j) out.push_back(memo.get(u, j));
  return out;
}

std::vector<LevelInterval> level_k_intervals(const GraphIFS& ifs, VertexId u, unsigned k,
                                             std::uint64_t cap) {
  std::vector<LevelInterval> out;
  if (k == 0) {
    out.push_back({unit_interval(), Path{}});
    return out;
  }
  for (auto& p : paths_from(ifs, u, k, cap)) {
    Interval hull = path_similarity(ifs, p).image(unit_interval());
    out.push_back({std::move(hull), std::move(p)});
  }
  std::stable_sort(out.begin(), out.end(), [](const LevelInterval& x, const LevelInterval& y) {
    return x.hull.lo < y.hull.lo || (x.hull.lo == y.hull.lo && x.hull.hi < y.hull.hi);
  });
  return out;
}

CsscReport cssc_check(const GraphIFS& ifs) {
  CsscReport report;
  for (VertexId u = 0; u < ifs.vertex_count(); ++u) {
    const auto& out = ifs.out_edges(u);
    Rational total(0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Interval hi = ifs.edge(out[i]).map.image(unit_interval());
      total += hi.length();
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        const Interval hj = ifs.edge(out[j]).map.image(unit_interval());
        if (hi.intersects(hj)) report.violations.push_back({u, out[i], out[j]});
      }
    }
    report.level1_total.push_back(std::move(total));
  }
  return report;
}

std::vector<EndpointWitness> endpoint_witnesses(const GraphIFS& ifs, VertexId u, unsigned depth,
                                                std::uint64_t cap) {
  if (!defined_on_unit_interval(ifs)) {
    throw ArgumentError("endpoint points need a system defined on the unit interval");
  }
  std::map<Rational, EndpointWitness> seen;
  auto offer = [&](const Rational& x, const Path& p, bool from_one, unsigned j) {
    seen.try_emplace(x, EndpointWitness{x, p, from_one, j});
  };
  offer(Rational(0), Path{}, false, 0);
  offer(Rational(1), Path{}, true, 0);
  for (unsigned j = 1; j <= depth; ++j) {
    for (const auto& p : paths_from(ifs, u, j, cap)) {
      const Similarity s = path_similarity(ifs, p);
      offer(s(Rational(0)), p, false, j);
      offer(s(Rational(1)), p, true, j);
    }
  }
  std::vector<EndpointWitness> out;
  out.reserve(seen.size());
  for (auto& [x, w] : seen) out.push_back(std::move(w));
  std::stable_sort(out.begin(), out.end(), [](const EndpointWitness& a, const EndpointWitness& b) {
    return a.depth < b.depth || (a.depth == b.depth && a.point < b.point);
  });
  return out;
}

std::vector<Rational> endpoint_points(const GraphIFS& ifs, VertexId u, unsigned depth,
                                      std::uint64_t cap) {
  std::vector<Rational> out;
  for (auto& w : endpoint_witnesses(ifs, u, depth, cap)) out.push_back(std::move(w.point));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<IntervalSet> target_levels(const GraphIFS& ifs, VertexId v, unsigned depth,
                                       bool reflected) {
  auto levels = level_sets(ifs, v, depth);
  if (reflected) {
    const Similarity r = Similarity::unit_reflection();
    for (auto& level : levels) level = level.transformed(r);
  }
  return levels;
}

const Interval* open_gap_containing(const std::vector<Interval>& gaps, const Rational& x) {
  auto it = std::upper_bound(gaps.begin(), gaps.end(), x,
                             [](const Rational& v, const Interval& g) { return v < g.lo; });
  if (it == gaps.begin()) return nullptr;
  const Interval& g = *std::prev(it);
  return (g.lo < x && x < g.hi) ? &g : nullptr;
}

}  // namespace

std::optional<SubsetRefutation> refute_subset(const GraphIFS& ifs, VertexId u, VertexId v,
                                              unsigned depth, bool reflected) {
  if (u == v) throw ArgumentError("refute_subset: source and target must differ");
  const auto witnesses = endpoint_witnesses(ifs, u, depth);
  const auto levels = target_levels(ifs, v, depth, reflected);
  std::vector<std::vector<Interval>> gaps;
  for (const auto& level : levels) gaps.push_back(level.gaps());

  for (const auto& w : witnesses) {
    for (unsigned m = 1; m <= depth; ++m) {
      if (const Interval* g = open_gap_containing(gaps[m], w.point)) {
        return SubsetRefutation{u, v, reflected, w.point, w.path, w.from_one, *g, w.depth, m};
      }
    }
  }
  return std::nullopt;
}

bool replay_refutation(const GraphIFS& ifs, const SubsetRefutation& r) {
  if (r.source == r.target || r.source >= ifs.vertex_count() ||
      r.target >= ifs.vertex_count() || r.target_level == 0) {
    return false;
  }
  if (!defined_on_unit_interval(ifs)) return false;
  Rational point = r.from_one ? Rational(1) : Rational(0);
  if (!r.witness_path.empty()) {
    if (!ifs.is_consecutive(r.witness_path) || ifs.initial(r.witness_path) != r.source) {
      return false;
    }
    point = path_similarity(ifs, r.witness_path)(point);
  }
  if (point != r.witness_point) return false;
  if (!(r.gap.lo < point && point < r.gap.hi)) return false;
  IntervalSet level = level_k_set(ifs, r.target, r.target_level);
  if (r.reflected) level = level.transformed(Similarity::unit_reflection());
  const auto gaps = level.gaps();
  return std::find(gaps.begin(), gaps.end(), r.gap) != gaps.end();
}

bool figure1_components_equal(const Figure1Params& p) { return p.a == p.c && p.b == p.d; }

}  // namespace gdifs
