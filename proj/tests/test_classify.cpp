#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "gdifs/classify.hpp"
#include "gdifs/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gdifs;
using namespace gdifs::oracle;

namespace {

GraphIFS golden() { return figure1_graph(golden_params()); }
GraphIFS subset() { return subset_graph(subset_example_params()); }

std::set<std::pair<Rational, Rational>> as_set(const std::vector<Similarity>& maps) {
  std::set<std::pair<Rational, Rational>> out;
  for (const auto& s : maps) out.emplace(s.ratio(), s.offset());
  return out;
}

std::set<std::pair<Rational, Rational>> compose_set(const GraphIFS& g,
                                                   const std::vector<std::vector<std::string>>& ps) {
  std::vector<Similarity> maps;
  for (const auto& p : ps) maps.push_back(path_similarity(g, g.path(p)));
  return as_set(maps);
}

}  // namespace

TEST(Condition1, Examples) {
  const GraphIFS g = golden();
  const auto w = find_condition1_witness(g, 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->w, 1u);
  EXPECT_EQ(g.path_str(w->cycle), "e3");
  EXPECT_EQ(g.path_str(w->path), "e2");
  EXPECT_EQ(w->vprime, (std::vector<VertexId>{0, 1}));

  const GraphIFS s = subset();
  const auto ws = find_condition1_witness(s, 1);
  ASSERT_TRUE(ws);
  EXPECT_EQ(ws->w, 0u);
  EXPECT_EQ(s.path_str(ws->cycle), "e1");
  EXPECT_EQ(s.path_str(ws->path), "e3");

  EXPECT_FALSE(find_condition1_witness(no_loop_graph(golden_params()), 0));
}

TEST(P2M, Examples) {
  auto [u, v] = classify_P2M(golden_params());
  EXPECT_EQ(u.verdict, Verdict::NotStandardAttractor);
  EXPECT_EQ(v.verdict, Verdict::NotStandardAttractor);
  EXPECT_TRUE(verify_certificate(golden(), u).ok);
  EXPECT_TRUE(verify_certificate(golden(), v).ok);

  const auto reduced = Figure1Params::from_ratios(Rational(1, 4), Rational(1, 2), Rational(1, 4),
                                                  Rational(1, 2));
  auto [ru, rv] = classify_P2M(reduced);
  EXPECT_EQ(ru.verdict, Verdict::Unknown);
  EXPECT_EQ(rv.verdict, Verdict::Unknown);
  EXPECT_FALSE(ru.unmet.empty());

  const auto b_ne_d = Figure1Params::from_ratios(Rational(1, 4), Rational(1, 2), Rational(1, 4),
                                                 Rational(1, 3));
  EXPECT_EQ(classify_P2M(b_ne_d).first.verdict, Verdict::NotStandardAttractor);
}

TEST(P2Q, GoldenBothVertices) {
  const GraphIFS g = golden();
  for (VertexId u : {0u, 1u}) {
    const Certificate c = classify_P2Q(g, u, 8, false);
    EXPECT_EQ(c.verdict, Verdict::NotStandardAttractor);
    EXPECT_EQ(c.theorem, TheoremTag::P2Q);
    ASSERT_EQ(c.refutations.size(), 1u);
    EXPECT_TRUE(verify_certificate(g, c).ok);
  }
  const Certificate r = classify_P2Q(g, 0, 8, true);
  EXPECT_EQ(r.verdict, Verdict::NotStandardAttractor);
  EXPECT_EQ(r.refutations.size(), 2u);
  EXPECT_TRUE(verify_certificate(g, r).ok);
}

TEST(P2Q, SubsetExample) {
  const GraphIFS g = subset();
  const Certificate v = classify_P2Q(g, 1, 8, false);
  EXPECT_EQ(v.verdict, Verdict::NotStandardAttractor);
  EXPECT_TRUE(verify_certificate(g, v).ok);
  const Certificate u = classify_P2Q(g, 0, 8, false);
  EXPECT_EQ(u.verdict, Verdict::Unknown);
  EXPECT_NE(u.unmet.find("condition 2"), std::string::npos);
  ASSERT_EQ(u.notes.size(), 1u);
  EXPECT_NE(u.notes[0].find("condition 3"), std::string::npos);
}

TEST(P2Q, NoLoopIsStandard) {
  const GraphIFS g = no_loop_graph(golden_params());
  const Certificate c = classify_P2Q(g, 0, 4, false);
  EXPECT_EQ(c.verdict, Verdict::StandardAttractor);
  EXPECT_EQ(c.theorem, TheoremTag::P2nv1);
  EXPECT_EQ(c.standard.maps.size(), 4u);
  EXPECT_TRUE(verify_certificate(g, c).ok);
}

TEST(P2Q, InvalidGraphThrows) {
  const GraphIFS g = GraphIFS::build({"u"}, {{"e1", "u", "u", Similarity(Rational(1, 2), Rational(0))}});
  EXPECT_THROW(classify_P2Q(g, 0, 3, false), ValidationError);
}

TEST(P2T, Examples) {
  const GraphIFS g = golden();
  for (VertexId u : {0u, 1u}) {
    const Certificate c = classify_P2T(g, u, 8, true);
    EXPECT_EQ(c.verdict, Verdict::NotStandardAttractor);
    ASSERT_TRUE(c.measure);
    EXPECT_TRUE(verify_certificate(g, c).ok);
  }
  EXPECT_EQ(classify_P2T(g, 0, 8, false).verdict, Verdict::Unknown);
  EXPECT_EQ(classify_P2T(subset(), 1, 8, true).verdict, Verdict::Unknown);
}

TEST(Rewrite, OneLoopAtV) {
  const GraphIFS g = one_loop_graph(golden_params());
  const auto maps = rewrite_standard_P2nv1(g, 1);
  EXPECT_EQ(as_set(maps), compose_set(g, {{"e4", "e1"}, {"e4", "e2"}, {"e3"}}));
  EXPECT_EQ(maps.size(), 3u);
  EXPECT_TRUE(cross_refutation_empty(g, 1, maps, 6));
}

TEST(Rewrite, NoLoopAtU) {
  const GraphIFS g = no_loop_graph(golden_params());
  const auto maps = rewrite_standard_P2nv1(g, 0);
  std::vector<Similarity> e2;
  for (const auto& p : paths_from(g, 0, 2)) e2.push_back(path_similarity(g, p));
  EXPECT_EQ(as_set(maps), as_set(e2));
  EXPECT_EQ(maps.size(), 4u);
  EXPECT_TRUE(cross_refutation_empty(g, 0, maps, 6));
}

TEST(Rewrite, SubsetAtU) {
  const GraphIFS g = subset();
  const auto r = rewrite_as_standard(g, 0);
  EXPECT_TRUE(r.containment_substituted);
  EXPECT_EQ(as_set(r.maps), compose_set(g, {{"e1"}, {"e2"}, {"e2", "e4"}}));
  EXPECT_EQ(r.maps.size(), 3u);
  EXPECT_TRUE(cross_refutation_empty(g, 0, r.maps, 6));
}

TEST(Rewrite, PreconditionViolated) {
  EXPECT_THROW(rewrite_standard_P2nv1(golden(), 0), ArgumentError);
}

TEST(Rewrite, SoundnessAndOrderProperty) {
  std::mt19937_64 rng(gen::kSeed + 40);
  int cases = 0;
  while (cases < 200) {
    const GraphIFS g = gen::random_graph(rng, 3, 3);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (find_condition1_witness(g, u)) continue;
      ++cases;
      const auto maps = rewrite_standard_P2nv1(g, u);
      ASSERT_FALSE(maps.empty());
      for (std::size_t i = 0; i < maps.size(); ++i) {
        ASSERT_TRUE(maps[i].is_contracting());
        ASSERT_TRUE(unit_interval().contains(maps[i].image(unit_interval())));
        if (i > 0) ASSERT_LE(maps[i - 1].image(unit_interval()).hi, maps[i].image(unit_interval()).lo);
      }
      ASSERT_TRUE(cross_refutation_empty(g, u, maps, 2));
    }
  }
}

TEST(Certificates, ReplayAndAgreementOnFamily) {
  std::mt19937_64 rng(gen::kSeed + 41);
  int not_standard = 0;
  for (int i = 0; i < 200; ++i) {
    const Figure1Params p = gen::random_figure1(rng, 16);
    const GraphIFS g = figure1_graph(p);
    const auto [mu, mv] = classify_P2M(p);
    for (VertexId u : {0u, 1u}) {
      const Certificate& m = u == 0 ? mu : mv;
      ASSERT_TRUE(verify_certificate(g, m).ok);
      const Certificate q = classify_P2Q(g, u, 5, false);
      const auto replay = verify_certificate(g, q);
      ASSERT_TRUE(replay.ok) << (replay.problems.empty() ? "" : replay.problems[0]);
      if (q.verdict == Verdict::NotStandardAttractor) {
        ++not_standard;
        ASSERT_EQ(m.verdict, Verdict::NotStandardAttractor);
        // Deeper search never loses the verdict.
        ASSERT_EQ(classify_P2Q(g, u, 7, false).verdict, Verdict::NotStandardAttractor);
      }
    }
  }
  EXPECT_GT(not_standard, 0);
}

TEST(Certificates, ReplayRandomGraphsProperty) {
  std::mt19937_64 rng(gen::kSeed + 42);
  for (int i = 0; i < 200; ++i) {
    const GraphIFS g = gen::random_graph(rng, 3, 3);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      const Certificate c = classify_P2Q(g, u, 4, i % 2 == 0);
      const auto r = verify_certificate(g, c);
      ASSERT_TRUE(r.ok) << r.problems.front();
    }
  }
}

TEST(Certificates, TamperingIsDetected) {
  const GraphIFS g = golden();
  Certificate c = classify_P2Q(g, 0, 8, false);
  Certificate bad_gap = c;
  bad_gap.refutations[0].gap.hi = Rational(7, 8);
  EXPECT_FALSE(verify_certificate(g, bad_gap).ok);
  Certificate bad_cycle = c;
  bad_cycle.condition1->cycle = g.path({"e1"});
  EXPECT_FALSE(verify_certificate(g, bad_cycle).ok);
  Certificate missing = c;
  missing.refutations.clear();
  EXPECT_FALSE(verify_certificate(g, missing).ok);
  Certificate bad_c2 = c;
  bad_c2.condition2->max_gap_u = Rational(1, 8);
  EXPECT_FALSE(verify_certificate(g, bad_c2).ok);
  EXPECT_FALSE(verify_certificate(one_loop_graph(golden_params()), c).ok);
}
