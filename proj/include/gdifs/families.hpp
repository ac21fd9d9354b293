#pragma once

#include <optional>

#include "gdifs/graph.hpp"

namespace gdifs {

// The basic two-vertex family. Vertex u has a loop e1 with image [0,a] and an
// edge e2 to v with image [a+g_u, 1]; vertex v has a loop e3 with image [0,c]
// and an edge e4 to u with image [c+g_v, 1]. No map reflects.
struct Figure1Params {
  Rational a, g_u, b, c, g_v, d;

  // Throws ArgumentError unless all six are positive and each row sums to 1.
  static Figure1Params make(Rational a, Rational g_u, Rational b, Rational c, Rational g_v,
                            Rational d);
  // Gaps filled in from the row sums; throws if a+b >= 1 or c+d >= 1.
  static Figure1Params from_ratios(Rational a, Rational b, Rational c, Rational d);

  // Relabel u <-> v: (a,g_u,b) <-> (c,g_v,d).
  Figure1Params swapped() const { return {c, g_v, d, a, g_u, b}; }

  friend bool operator==(const Figure1Params&, const Figure1Params&) = default;
};

// a = 1/4, g_u = 1/4, b = 1/2, c = 1/2, g_v = 1/4, d = 1/4: the golden-ratio
// instance.
Figure1Params golden_params();

GraphIFS figure1_graph(const Figure1Params& p);

// Recognises the two-vertex family: two vertices, each with exactly two
// non-reflecting out-edges, a loop fixing 0 and an edge to the other vertex
// fixing 1. Parameters are read with vertex 0 in the role of u.
std::optional<Figure1Params> as_figure1(const GraphIFS& ifs);

// Same layout as figure1_graph but the left map at u (e1) goes to v, so the
// only loop is e3 at v.
GraphIFS one_loop_graph(const Figure1Params& p);

// Same layout with both loops replaced: e1 u->v and e3 v->u.
GraphIFS no_loop_graph(const Figure1Params& p);

// Two-vertex system where F_u is contained in F_v:
//   u: e1 loop [0,a], e2 u->v [a+g_u, 1]
//   v: e3 v->u [0,a], e4 v->u [a+g_v, a+g_u-g_v], e5 loop [a+g_u, 1]
// so S_e1 = S_e3 and S_e2 = S_e5, and S_e4 has ratio g_u - 2 g_v.
struct SubsetParams {
  Rational a, g_u, b, g_v;
  Rational d() const { return g_u - Rational(2) * g_v; }
};
GraphIFS subset_graph(const SubsetParams& p);

// a = b = 1/4, g_u = 1/2, g_v = 1/8.
SubsetParams subset_example_params();

}  // namespace gdifs
