#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdifs/families.hpp"
#include "gdifs/graph.hpp"

namespace gdifs {

// Sorted, pairwise disjoint closed intervals. Construction merges anything
// that overlaps or touches, which never happens for level sets of CSSC
// systems.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  bool contains(const Rational& x) const;
  // Some single member interval contains `iv`.
  bool covers(const Interval& iv) const;
  // Open gaps between consecutive intervals, left to right.
  std::vector<Interval> gaps() const;
  IntervalSet transformed(const Similarity& s) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

// F_u^k = union of S_be([0,1]) over E^k_u; F_u^0 = [0,1]. Throws
// ResourceError when |E^k_u| exceeds `cap`.
IntervalSet level_k_set(const GraphIFS& ifs, VertexId u, unsigned k,
                        std::uint64_t cap = kDefaultPathCap);

// F_u^0 .. F_u^k.
std::vector<IntervalSet> level_sets(const GraphIFS& ifs, VertexId u, unsigned k,
                                    std::uint64_t cap = kDefaultPathCap);

// A level-k interval together with the path that produced it.
struct LevelInterval {
  Interval hull;
  Path path;
};

// Level-k intervals of u by direct path enumeration, ordered by position.
std::vector<LevelInterval> level_k_intervals(const GraphIFS& ifs, VertexId u, unsigned k,
                                             std::uint64_t cap = kDefaultPathCap);

struct CsscViolation {
  VertexId vertex;
  EdgeId first;
  EdgeId second;
};

struct CsscReport {
  std::vector<CsscViolation> violations;
  // Sum of level-1 interval lengths per vertex.
  std::vector<Rational> level1_total;
  bool ok() const { return violations.empty(); }
};

CsscReport cssc_check(const GraphIFS& ifs);

// A point of F_u with the path and endpoint that certify it.
struct EndpointWitness {
  Rational point;
  Path path;  // empty means the endpoint itself
  bool from_one = false;
  unsigned depth = 0;
};

// Every S_be(0), S_be(1) for be in E^j_u, j <= depth, plus 0 and 1. Each
// point keeps its first witness (shallowest, then lexicographic path).
// Requires a unit-interval system.
std::vector<EndpointWitness> endpoint_witnesses(const GraphIFS& ifs, VertexId u, unsigned depth,
                                                std::uint64_t cap = kDefaultPathCap);

// Sorted distinct points from endpoint_witnesses.
std::vector<Rational> endpoint_points(const GraphIFS& ifs, VertexId u, unsigned depth,
                                      std::uint64_t cap = kDefaultPathCap);

// Proof that F_source is not a subset of F_target (or of R(F_target) when
// `reflected`): the point lies in F_source and inside an open gap of the
// target's level-m approximation, which contains F_target.
struct SubsetRefutation {
  VertexId source = 0;
  VertexId target = 0;
  bool reflected = false;
  Rational witness_point;
  Path witness_path;
  bool from_one = false;
  Interval gap;  // open
  unsigned witness_depth = 0;
  unsigned target_level = 0;
};

// Searches endpoint witnesses of `u` (by increasing depth, then value)
// against gaps of F_v^m for m = 1..depth. nullopt means no certificate was
// found, which proves nothing.
std::optional<SubsetRefutation> refute_subset(const GraphIFS& ifs, VertexId u, VertexId v,
                                              unsigned depth, bool reflected);

// Re-derives the refutation from scratch.
bool replay_refutation(const GraphIFS& ifs, const SubsetRefutation& r);

// F_u == F_v for the two-vertex family, decided exactly: a == c and b == d.
bool figure1_components_equal(const Figure1Params& p);

}  // namespace gdifs
