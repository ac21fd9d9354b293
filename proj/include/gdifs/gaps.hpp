#pragma once

#include <utility>
#include <vector>

#include "gdifs/attractor.hpp"
#include "gdifs/families.hpp"

namespace gdifs {

struct PositionedGap {
  Interval gap;  // open interval (lo, hi)
  Rational length;
};

// Complementary open intervals of F_u^k in [0,1], left to right.
std::vector<PositionedGap> level_k_gaps(const GraphIFS& ifs, VertexId u, unsigned k,
                                        std::uint64_t cap = kDefaultPathCap);

Rational min_level1_gap(const GraphIFS& ifs, VertexId v);
Rational max_level1_gap(const GraphIFS& ifs, VertexId v);

// max G_u for every vertex, the least solution of
//   M_u = max(max G_u^1, max_{e in E_u^1} r_e M_{t(e)}).
// Requires CSSC on a unit-interval system (throws ArgumentError otherwise).
std::vector<Rational> max_gaps(const GraphIFS& ifs);
Rational max_gap(const GraphIFS& ifs, VertexId u);

// coefficient * <generators>, where <.> is the multiplicative semigroup with
// the empty product included.
struct GapCoset {
  Rational coefficient;
  std::vector<Rational> generators;
  friend bool operator==(const GapCoset&, const GapCoset&) = default;
};

struct GapCosets {
  std::vector<GapCoset> cosets;
  friend bool operator==(const GapCosets&, const GapCosets&) = default;
};

// G_u = g_u<a> u bd g_u<a,bd,c> u b g_v<a,bd,c>
// G_v = g_v<c> u bd g_v<a,bd,c> u d g_u<a,bd,c>
std::pair<GapCosets, GapCosets> figure1_gap_cosets(const Figure1Params& p);

// All members >= threshold, sorted and distinct. Throws ArgumentError when
// threshold <= 0 or a generator is outside (0,1).
std::vector<Rational> enumerate_coset_lengths(const GapCosets& cosets, const Rational& threshold);

bool coset_member(const GapCosets& cosets, const Rational& x);

struct GapComparison {
  VertexId v;
  Rational min_level1_gap;
  bool holds;
};

struct Condition2Report {
  VertexId u = 0;
  Rational max_gap_u;
  std::vector<GapComparison> comparisons;
  bool pass = false;
  // All level-1 gap lengths at u coincide; forced whenever pass is true.
  bool level1_gaps_equal_at_u = false;
};

// max G_u <= min G_v^1 for each v in vset.
Condition2Report condition2_check(const GraphIFS& ifs, VertexId u,
                                  const std::vector<VertexId>& vset);

}  // namespace gdifs
