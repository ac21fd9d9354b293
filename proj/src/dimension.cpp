#include "gdifs/dimension.hpp"

#include <functional>

#include "gdifs/errors.hpp"

namespace gdifs {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;

Real to_real(const Rational& r) { return Real(r.numerator_str()) / Real(r.denominator_str()); }

namespace {

Real rpow(const Real& base, const Real& t) {
  if (t == 0) return Real(1);
  return exp(t * log(base));
}

DimensionResult bisect(const std::function<Real(const Real&)>& f, double tol) {
  DimensionResult out;
  out.lo = 0;
  out.hi = 1;
  const Real width(tol);
  while (out.hi - out.lo > width) {
    const Real mid = (out.lo + out.hi) / 2;
    if (f(mid) > 0) {
      out.lo = mid;
    } else {
      out.hi = mid;
    }
    ++out.iterations;
  }
  out.s = (out.lo + out.hi) / 2;
  return out;
}

}  // namespace

MoranMatrix moran_matrix(const GraphIFS& ifs, const Real& t) {
  if (t < 0) throw ArgumentError("moran_matrix: t must be >= 0");
  MoranMatrix m(ifs.vertex_count());
  for (const Edge& e : ifs.edges()) m.at(e.from, e.to) += rpow(to_real(e.map.ratio()), t);
  return m;
}

Real spectral_radius(const MoranMatrix& m, const Real& tol, unsigned max_iterations) {
  const std::size_t n = m.size();
  if (n == 0) throw NumericError("spectral_radius: empty matrix");
  std::vector<Real> x(n, Real(1));
  std::vector<Real> y(n);
  for (unsigned it = 0; it < max_iterations; ++it) {
    Real lower = -1;
    Real upper = -1;
    Real norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real acc = x[i];  // the +I shift
      for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * x[j];
      y[i] = acc;
      const Real q = acc / x[i];
      if (lower < 0 || q < lower) lower = q;
      if (upper < 0 || q > upper) upper = q;
      if (acc > norm) norm = acc;
    }
    if (upper - lower <= tol * (upper > 1 ? upper : Real(1))) return (lower + upper) / 2 - 1;
    if (norm == 0) throw NumericError("spectral_radius: iterate vanished");
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = y[i] / norm;
      if (x[i] == 0) throw NumericError("spectral_radius: matrix is not irreducible");
    }
  }
  throw NumericError("spectral_radius: no convergence within iteration cap");
}

DimensionResult hausdorff_dimension(const GraphIFS& ifs, double tol) {
  if (tol <= 0) throw ArgumentError("hausdorff_dimension: tol must be > 0");
  auto f = [&](const Real& t) { return spectral_radius(moran_matrix(ifs, t)) - 1; };
  if (!(f(Real(0)) > 0) || !(f(Real(1)) < 0)) {
    throw NumericError("hausdorff_dimension: rho(A(t)) = 1 is not bracketed by [0,1]");
  }
  return bisect(f, tol);
}

DimensionResult figure1_char_root(const Figure1Params& p, double tol) {
  if (tol <= 0) throw ArgumentError("figure1_char_root: tol must be > 0");
  const Real a = to_real(p.a), b = to_real(p.b), c = to_real(p.c), d = to_real(p.d);
  // Negative at 0, positive at 1; the sign flips once in between.
  auto f = [&](const Real& t) {
    return -((rpow(a, t) - 1) * (rpow(c, t) - 1) - rpow(b, t) * rpow(d, t));
  };
  return bisect(f, tol);
}

}  // namespace gdifs
