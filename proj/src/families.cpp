#include "gdifs/families.hpp"

#include "gdifs/errors.hpp"

namespace gdifs {

Figure1Params Figure1Params::make(Rational a, Rational g_u, Rational b, Rational c, Rational g_v,
                                  Rational d) {
  Figure1Params p{std::move(a), std::move(g_u), std::move(b),
                  std::move(c), std::move(g_v), std::move(d)};
  for (const Rational* x : {&p.a, &p.g_u, &p.b, &p.c, &p.g_v, &p.d}) {
    if (x->sign() <= 0) throw ArgumentError("Figure1Params: parameters must be positive");
  }
  if (p.a + p.g_u + p.b != Rational(1) || p.c + p.g_v + p.d != Rational(1)) {
    throw ArgumentError("Figure1Params: a+g_u+b and c+g_v+d must both equal 1");
  }
  return p;
}

Figure1Params Figure1Params::from_ratios(Rational a, Rational b, Rational c, Rational d) {
  Rational g_u = Rational(1) - a - b;
  Rational g_v = Rational(1) - c - d;
  return make(std::move(a), std::move(g_u), std::move(b), std::move(c), std::move(g_v),
              std::move(d));
}

Figure1Params golden_params() {
  return Figure1Params::make(Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(1, 2),
                             Rational(1, 4), Rational(1, 4));
}

namespace {

GraphIFS two_vertex(const Figure1Params& p, const std::string& e1_to, const std::string& e3_to) {
  return GraphIFS::build({"u", "v"},
                         {
                             {"e1", "u", e1_to, Similarity(p.a, Rational(0))},
                             {"e2", "u", "v", Similarity(p.b, p.a + p.g_u)},
                             {"e3", "v", e3_to, Similarity(p.c, Rational(0))},
                             {"e4", "v", "u", Similarity(p.d, p.c + p.g_v)},
                         });
}

}  // namespace

GraphIFS figure1_graph(const Figure1Params& p) { return two_vertex(p, "u", "v"); }
GraphIFS one_loop_graph(const Figure1Params& p) { return two_vertex(p, "v", "v"); }
GraphIFS no_loop_graph(const Figure1Params& p) { return two_vertex(p, "v", "u"); }

std::optional<Figure1Params> as_figure1(const GraphIFS& ifs) {
  if (ifs.vertex_count() != 2 || ifs.edge_count() != 4) return std::nullopt;
  struct Row {
    Rational left, right;
  };
  Row rows[2];
  for (VertexId x = 0; x < 2; ++x) {
    const auto& out = ifs.out_edges(x);
    if (out.size() != 2) return std::nullopt;
    const Edge* loop = nullptr;
    const Edge* cross = nullptr;
    for (EdgeId e : out) {
      const Edge& edge = ifs.edge(e);
      if (edge.map.reflects()) return std::nullopt;
      if (edge.to == x) loop = &edge;
      else cross = &edge;
    }
    if (loop == nullptr || cross == nullptr) return std::nullopt;
    if (!loop->map.offset().is_zero()) return std::nullopt;
    if (cross->map.offset() + cross->map.ratio() != Rational(1)) return std::nullopt;
    if (loop->map.ratio() >= cross->map.offset()) return std::nullopt;
    rows[x] = {loop->map.ratio(), cross->map.ratio()};
  }
  try {
    return Figure1Params::from_ratios(rows[0].left, rows[0].right, rows[1].left, rows[1].right);
  } catch (const ArgumentError&) {
    return std::nullopt;
  }
}

GraphIFS subset_graph(const SubsetParams& p) {
  const Rational d = p.d();
  if (d.sign() <= 0) throw ArgumentError("subset_graph: need g_u > 2 g_v");
  if (p.a + p.g_u + p.b != Rational(1)) throw ArgumentError("subset_graph: a+g_u+b must be 1");
  return GraphIFS::build({"u", "v"},
                         {
                             {"e1", "u", "u", Similarity(p.a, Rational(0))},
                             {"e2", "u", "v", Similarity(p.b, p.a + p.g_u)},
                             {"e3", "v", "u", Similarity(p.a, Rational(0))},
                             {"e4", "v", "u", Similarity(d, p.a + p.g_v)},
                             {"e5", "v", "v", Similarity(p.b, p.a + p.g_u)},
                         });
}

SubsetParams subset_example_params() {
  return {Rational(1, 4), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
}

}  // namespace gdifs
