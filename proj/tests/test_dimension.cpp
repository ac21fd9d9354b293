#include <gtest/gtest.h>

#include <cmath>

#include "gdifs/dimension.hpp"
#include "gdifs/errors.hpp"
#include "gdifs/measure.hpp"
#include "support.hpp"

using namespace gdifs;
using boost::multiprecision::abs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

const Real kGoldenDim = log((sqrt(Real(5)) - 1) / 2) / log(Real(1) / 2);

}  // namespace

TEST(Dimension, GoldenClosedForm) {
  const auto d = hausdorff_dimension(figure1_graph(golden_params()));
  EXPECT_LE(abs(d.s - kGoldenDim), Real(1e-9));
  EXPECT_LE(d.lo, kGoldenDim);
  EXPECT_GE(d.hi, kGoldenDim);
  const auto c = figure1_char_root(golden_params(), 1e-12);
  EXPECT_LE(abs(c.s - d.s), Real(2e-12));
}

TEST(Dimension, SingleVertexMoran) {
  // Three maps of ratio 1/4: s = ln 3 / ln 4.
  const GraphIFS g = GraphIFS::build(
      {"u"}, {{"e1", "u", "u", Similarity(Rational(1, 4), Rational(0))},
              {"e2", "u", "u", Similarity(Rational(1, 4), Rational(3, 8))},
              {"e3", "u", "u", Similarity(Rational(1, 4), Rational(3, 4))}});
  const auto d = hausdorff_dimension(g);
  EXPECT_LE(abs(d.s - log(Real(3)) / log(Real(4))), Real(1e-11));
}

TEST(Dimension, NoLoopGraphIsPeriodicButConverges) {
  const auto d = hausdorff_dimension(no_loop_graph(golden_params()));
  EXPECT_GT(d.s, Real(0));
  EXPECT_LT(d.s, Real(1));
}

TEST(SpectralRadius, TwoByTwoClosedForm) {
  std::mt19937_64 rng(gen::kSeed + 30);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  for (int i = 0; i < 200; ++i) {
    MoranMatrix m(2);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    const double want = (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * c);
    ASSERT_NEAR(spectral_radius(m).convert_to<double>(), want, 1e-12 * want);
  }
}

TEST(SpectralRadius, ReducibleThrows) {
  MoranMatrix m(2);
  m.at(0, 0) = 1;
  EXPECT_THROW(spectral_radius(m), NumericError);
}

TEST(SpectralRadius, MonotoneInTProperty) {
  std::mt19937_64 rng(gen::kSeed + 31);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  int cases = 0;
  while (cases < 200) {
    const GraphIFS g = gen::random_graph(rng);
    double t1 = t(rng), t2 = t(rng);
    if (t1 > t2) std::swap(t1, t2);
    if (t2 - t1 < 1e-6) continue;
    ++cases;
    const Real r1 = spectral_radius(moran_matrix(g, Real(t1)));
    const Real r2 = spectral_radius(moran_matrix(g, Real(t2)));
    ASSERT_GT(r1, r2);
    // rho(A(s)) = 1 at the dimension.
    const auto d = hausdorff_dimension(g, 1e-10);
    ASSERT_LE(abs(spectral_radius(moran_matrix(g, d.s)) - 1), Real(1e-8));
  }
}

TEST(Measure, GoldenBothOne) {
  const MeasureResult m = hausdorff_measure_figure1(golden_params());
  EXPECT_EQ(m.cond1.status, ConditionStatus::HoldsAtBoundary);
  EXPECT_LE(abs(m.cond1.margin), Real(1e-9));
  EXPECT_LE(abs(m.cond2.value - (1 + sqrt(Real(5))) / 2), Real(1e-9));
  EXPECT_EQ(m.cond2.status, ConditionStatus::Holds);
  ASSERT_TRUE(m.h_u && m.h_v);
  EXPECT_EQ(*m.h_u, Real(1));
  EXPECT_LE(abs(*m.h_v - 1), Real(1e-9));
}

TEST(Measure, FailingConditionLeavesMeasureUnset) {
  // Wide gap at u: (1 - a^s)/b^s exceeds 1.
  const auto p = Figure1Params::from_ratios(Rational(1, 8), Rational(1, 8), Rational(1, 2),
                                            Rational(1, 4));
  const MeasureResult m = hausdorff_measure_figure1(p);
  EXPECT_TRUE(m.cond1.status == ConditionStatus::Fails ||
              m.cond2.status == ConditionStatus::Fails);
  EXPECT_FALSE(m.h_u.has_value());
}

TEST(Measure, CharacteristicRootMatchesSpectralProperty) {
  std::mt19937_64 rng(gen::kSeed + 32);
  for (int i = 0; i < 200; ++i) {
    const Figure1Params p = gen::random_figure1(rng);
    const auto a = figure1_char_root(p, 1e-12);
    const auto b = hausdorff_dimension(figure1_graph(p), 1e-12);
    ASSERT_LE(abs(a.s - b.s), Real(1e-11));
  }
}
