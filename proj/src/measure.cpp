#include "gdifs/measure.hpp"

#include "gdifs/errors.hpp"

namespace gdifs {

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "Holds";
    case ConditionStatus::HoldsAtBoundary: return "HoldsAtBoundary";
    case ConditionStatus::Fails: return "Fails";
  }
  return "?";
}

namespace {

ConditionEval classify(Real value, Real margin, double eps) {
  ConditionEval out;
  out.value = std::move(value);
  out.margin = std::move(margin);
  const Real e(eps);
  if (out.margin > e) {
    out.status = ConditionStatus::Holds;
  } else if (out.margin >= -e) {
    out.status = ConditionStatus::HoldsAtBoundary;
    out.boundary_warning = out.margin < 0;
  } else {
    out.status = ConditionStatus::Fails;
  }
  return out;
}

}  // namespace

std::pair<ConditionEval, ConditionEval> measure_conditions(const Figure1Params& p, const Real& s,
                                                           double eps) {
  if (eps <= 0) throw ArgumentError("measure_conditions: eps must be > 0");
  using boost::multiprecision::pow;
  const Real a_s = pow(to_real(p.a), s);
  const Real b = to_real(p.b);
  const Real b_s = pow(b, s);
  Real v1 = (1 - a_s) / b_s;
  Real v2 = (1 - b) * (1 - a_s) / (b * a_s);
  Real m1 = 1 - v1;
  Real m2 = v2 - 1;
  return {classify(std::move(v1), std::move(m1), eps), classify(std::move(v2), std::move(m2), eps)};
}

MeasureResult hausdorff_measure_figure1(const Figure1Params& p, double tol, double eps) {
  MeasureResult out;
  out.s = figure1_char_root(p, tol).s;
  std::tie(out.cond1, out.cond2) = measure_conditions(p, out.s, eps);
  if (out.cond1.status != ConditionStatus::Fails && out.cond2.status != ConditionStatus::Fails) {
    out.h_u = Real(1);
    out.h_v = out.cond1.value;
  }
  return out;
}

}  // namespace gdifs
