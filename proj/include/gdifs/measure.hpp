#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gdifs/dimension.hpp"
#include "gdifs/families.hpp"

namespace gdifs {

enum class ConditionStatus { Holds, HoldsAtBoundary, Fails };

std::string to_string(ConditionStatus s);

// One inequality of the measure theorem for the two-vertex family, evaluated
// at s. `margin` is signed so that positive means satisfied.
struct ConditionEval {
  ConditionStatus status = ConditionStatus::Fails;
  Real value;
  Real margin;
  // Within eps of equality but on the failing side.
  bool boundary_warning = false;
};

// (1) (1 - a^s)/b^s <= 1 and (2) (1 - b)(1 - a^s)/(b a^s) >= 1, each
// classified with boundary tolerance eps.
std::pair<ConditionEval, ConditionEval> measure_conditions(const Figure1Params& p, const Real& s,
                                                           double eps = 1e-9);

struct MeasureResult {
  Real s;
  ConditionEval cond1;
  ConditionEval cond2;
  // Present only when neither condition fails: H^s(F_u) = 1 and
  // H^s(F_v) = (1 - a^s)/b^s.
  std::optional<Real> h_u;
  std::optional<Real> h_v;
};

MeasureResult hausdorff_measure_figure1(const Figure1Params& p, double tol = 1e-12,
                                        double eps = 1e-9);

}  // namespace gdifs
