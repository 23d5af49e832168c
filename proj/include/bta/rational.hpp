#pragma once

#include <gmpxx.h>

#include <string>

#include "bta/errors.hpp"

namespace bta {

/// Arbitrary-precision rational. Always kept reduced with positive
/// denominator (mpq_class maintains canonical form as long as inputs are
/// canonical, so every constructor canonicalizes).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (decimal, optional leading minus). Canonicalizes.
Rational parse_rational(const std::string& text);

/// Renders as "p/q" with q > 0 and gcd(p, q) = 1; zero is "0/1".
std::string rational_to_string(const Rational& q);

/// Exact complex scalar: a pair of reduced rationals.
class ComplexRational {
 public:
  ComplexRational() : re_(0), im_(0) {}
  ComplexRational(long re) : re_(re), im_(0) {}  // NOLINT: implicit by design
  ComplexRational(Rational re, Rational im = Rational(0))
      : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return ComplexRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  ComplexRational operator-() const { return {-re_, -im_}; }
  ComplexRational conj() const { return {re_, -im_}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) {
    return a += b;
  }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) {
    return a -= b;
  }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) {
    return a *= b;
  }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) {
    return a /= b;
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
    return !(a == b);
  }

  ComplexRational inverse() const;

  /// Debug rendering, e.g. "1/2+3/4i".
  std::string str() const;

 private:
  Rational re_, im_;
};

}  // namespace bta
