#include "gdifs/similarity.hpp"

#include <stdexcept>

namespace gdifs {

Similarity::Similarity(Rational ratio, Rational offset, bool reflect)
    : ratio_(std::move(ratio)), offset_(std::move(offset)), reflect_(reflect) {
  if (ratio_.sign() <= 0) throw std::invalid_argument("similarity ratio must be positive");
}

Rational Similarity::operator()(const Rational& x) const {
  return reflect_ ? offset_ - ratio_ * x : ratio_ * x + offset_;
}

Interval Similarity::image(const Interval& iv) const {
  Rational a = (*this)(iv.lo);
  Rational b = (*this)(iv.hi);
  if (reflect_) return {std::move(b), std::move(a)};
  return {std::move(a), std::move(b)};
}

Similarity Similarity::compose(const Similarity& inner) const {
  return Similarity(ratio_ * inner.ratio_, (*this)(inner.offset_), reflect_ != inner.reflect_);
}

Similarity Similarity::inverse() const {
  // y = +-r x + b  =>  x = +-(y - b)/r
  const Rational inv = ratio_.inverse();
  if (reflect_) return Similarity(inv, offset_ * inv, true);
  return Similarity(inv, -(offset_ * inv), false);
}

std::string Similarity::str() const {
  std::string s = reflect_ ? "x -> -" : "x -> ";
  s += ratio_.str() + "*x";
  if (offset_.sign() < 0) {
    s += " - " + (-offset_).str();
  } else if (!offset_.is_zero()) {
    s += " + " + offset_.str();
  }
  return s;
}

}  // namespace gdifs
