#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gdifs/families.hpp"
#include "gdifs/graph.hpp"

namespace gdifs {

// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& r);

// A(t) with A_uv(t) = sum of r_e^t over edges e from u to v.
class MoranMatrix {
 public:
  explicit MoranMatrix(std::size_t n) : n_(n), entries_(n * n, Real(0)) {}
  std::size_t size() const { return n_; }
  Real& at(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const Real& at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

 private:
  std::size_t n_;
  std::vector<Real> entries_;
};

MoranMatrix moran_matrix(const GraphIFS& ifs, const Real& t);

// Perron root of a nonnegative irreducible matrix. Power iteration runs on
// A + I (same Perron vector, and aperiodic), starting from all ones, until
// the Collatz-Wielandt bounds min/max (Ax)_i/x_i agree to `tol`. Throws
// NumericError after `max_iterations`.
Real spectral_radius(const MoranMatrix& m, const Real& tol = Real("1e-40"),
                     unsigned max_iterations = 100000);

struct DimensionResult {
  Real s;
  Real lo;
  Real hi;
  unsigned iterations = 0;
};

// Bisection for rho(A(t)) = 1 on [0,1]. Throws NumericError unless
// rho(A(0)) > 1 > rho(A(1)).
DimensionResult hausdorff_dimension(const GraphIFS& ifs, double tol = 1e-12);

// Root in (0,1) of (a^t - 1)(c^t - 1) - b^t d^t by bisection.
DimensionResult figure1_char_root(const Figure1Params& p, double tol = 1e-12);

}  // namespace gdifs
