#pragma once

#include <string>

#include "gdifs/rational.hpp"

namespace gdifs {

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval unit_interval() { return {Rational(0), Rational(1)}; }

// Affine map of the line x -> ratio*x + offset (or -ratio*x + offset when
// reflecting). `ratio` is always positive; contracting maps additionally have
// ratio < 1, which is what graph edges require.
class Similarity {
 public:
  Similarity() : ratio_(1) {}
  Similarity(Rational ratio, Rational offset, bool reflect = false);

  static Similarity identity() { return Similarity(); }
  // R(x) = 1 - x.
  static Similarity unit_reflection() { return Similarity(Rational(1), Rational(1), true); }

  const Rational& ratio() const { return ratio_; }
  const Rational& offset() const { return offset_; }
  bool reflects() const { return reflect_; }
  bool is_contracting() const { return ratio_ < Rational(1); }

  Rational operator()(const Rational& x) const;
  Interval image(const Interval& iv) const;

  // (this o inner)(x) = this(inner(x)).
  Similarity compose(const Similarity& inner) const;
  Similarity inverse() const;

  std::string str() const;

  friend bool operator==(const Similarity&, const Similarity&) = default;

 private:
  Rational ratio_;
  Rational offset_;
  bool reflect_ = false;
};

}  // namespace gdifs
