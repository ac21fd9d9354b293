#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gdifs/gaps.hpp"
#include "gdifs/graph.hpp"

namespace gdifs {

// Two-vertex, eight-edge system whose vertex u admits a similarity S with
// S(F_u) inside F_u and S([0,1]) spanning a level-1 gap.
//   u: e1 loop, g1, e2 ->v, g2, e3 loop, g3, e4 ->v
//   v: e5 ->u,  g4, e6 loop, g5, e7 ->u, g6, e8 loop
// Gaps g and ratios r_e are listed left to right; `r` is the ratio of S.
struct Section6Params {
  std::array<Rational, 6> g;
  std::array<Rational, 8> r_e;
  Rational r;

  // r = r_e1..r_e6 = r_e8 = 1/10, r_e7 = 7/20, g1 = g3 = g4 = 1/20,
  // g2 = 1/2, g5 = 1/5, g6 = 1/10.
  static Section6Params example();
};

struct RatioSolution {
  bool feasible = false;
  // r_e1..r_e6; filled whenever the inputs are positive.
  std::array<Rational, 6> ratios;
  Rational r;
  // r_e1 + g1 + r_e2 + g2 + r_e3 + g3 + r_e4 - 1.
  Rational residual;
  std::string reason;
};

// Ratios forced by the four map identities given g1..g4:
//   r_e1 = g1^2/(g2 g3), r_e2 = g1 g3/(g2 g4), r_e3 = g1/g2,
//   r_e4 = g3^2/(g2 g4), r_e5 = g1 g4/(g2 g3), r_e6 = g3/g2, r = r_e3.
// Infeasible when a ratio leaves (0,1) or the u-row does not sum to 1.
// Throws ArgumentError when an input is <= 0.
RatioSolution solve_ratios_section6(const Rational& g1, const Rational& g2, const Rational& g3,
                                    const Rational& g4);

// (p + sign*sqrt(d)) / q with q != 0 and d >= 0.
struct Surd {
  Rational p;
  Rational d;
  Rational q;
  int sign = 1;

  // The value when d is a perfect square.
  std::optional<Rational> exact() const;
  double approx() const;
  std::string str() const;
};

struct QuadraticRoots {
  Rational discriminant;
  // Empty when the discriminant is negative, one root when it is zero, else
  // the larger root first.
  std::vector<Surd> roots;
};

// Roots of A x^2 + B x + C with A != 0 (ArgumentError otherwise).
QuadraticRoots solve_quadratic(const Rational& A, const Rational& B, const Rational& C);

// g2 when g1 = g3 = g4 = alpha: g2^2 + (2 alpha - 1) g2 + 4 alpha = 0.
// Throws ArgumentError when alpha <= 0.
QuadraticRoots quadratic_g2(const Rational& alpha);

struct Figure6 {
  GraphIFS ifs;
  Similarity s;
};

// Throws ArgumentError unless every ratio lies in (0,1), every gap is
// positive and both rows sum to 1.
Figure6 build_figure6(const Section6Params& p);

struct IdentityCheck {
  std::string name;
  Similarity lhs;
  Similarity rhs;
  bool holds = false;
};

struct IdentityReport {
  bool all = false;
  std::vector<IdentityCheck> checks;
};

// S o S_e1 = S_e1 o S_e3, S o S_e2 = S_e1 o S_e4, S o S_e3 = S_e2 o S_e5,
// S o S_e4 = S_e2 o S_e6, as exact map equalities. Edges are looked up by id;
// ArgumentError if e1..e6 are missing.
IdentityReport verify_map_identities(const GraphIFS& ifs, const Similarity& s);

struct SpanningHit {
  Similarity s_map;
  VertexId source = 0;
  VertexId target = 0;
  unsigned j = 0;
  unsigned k = 0;
  PositionedGap spanned_gap;
  unsigned verified_depth = 0;
};

// Similarities that send the level-j intervals of `src` exactly onto level-k
// intervals of `dst` (1 <= j <= max_j, 1 <= k <= max_k), contract, keep
// S(F_src^{j+d}) inside F_dst^{k+d} for d <= verify_depth, and whose image of
// [0,1] covers a level-1 gap of `dst`. Only this interval-matching shape is
// searched, so an empty result rules out nothing else. Sorted by (j, k,
// offset, ratio), without duplicate maps.
std::vector<SpanningHit> span_search(const GraphIFS& ifs, VertexId src, VertexId dst,
                                     unsigned max_j, unsigned max_k, unsigned verify_depth = 3,
                                     std::uint64_t cap = kDefaultPathCap);

}  // namespace gdifs
