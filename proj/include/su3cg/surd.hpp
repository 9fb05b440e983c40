#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "su3cg/rational.hpp"

namespace su3 {

// If r is the square of a rational, return that (non-negative) square root.
std::optional<Rational> rational_sqrt(const Rational& r);

// Exact scalar of the form sign * sqrt(radicand) with radicand a non-negative
// reduced rational. Closed under multiplication; addition is defined only when
// the two radicands differ by a perfect rational square (or one operand is 0).
class SurdValue {
 public:
  SurdValue() : sign_(0), radicand_(0) {}

  static SurdValue zero() { return SurdValue(); }
  static SurdValue one() { return SurdValue(+1, Rational(1)); }

  // sqrt(r), r >= 0.
  static SurdValue sqrt_of(const Rational& r) {
    if (r.is_negative()) throw InternalError("SurdValue: sqrt of negative");
    return SurdValue(r.is_zero() ? 0 : +1, r);
  }
  // The rational r itself, encoded as sign(r)*sqrt(r^2).
  static SurdValue of_rational(const Rational& r) {
    return SurdValue(r.sign(), r * r);
  }
  static SurdValue of_int(long n) { return of_rational(Rational(n)); }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  // value^2, always an exact rational.
  Rational squared() const { return radicand_; }

  // Exact rational value if the radicand is a perfect square.
  std::optional<Rational> as_rational() const {
    auto root = rational_sqrt(radicand_);
    if (!root) return std::nullopt;
    return sign_ < 0 ? -*root : *root;
  }

  SurdValue operator-() const { return SurdValue(-sign_, radicand_); }
  friend SurdValue operator*(const SurdValue& a, const SurdValue& b) {
    int s = a.sign_ * b.sign_;
    return SurdValue(s, s == 0 ? Rational(0) : a.radicand_ * b.radicand_);
  }
  friend SurdValue operator/(const SurdValue& a, const SurdValue& b) {
    if (b.is_zero()) throw InternalError("SurdValue: division by zero");
    int s = a.sign_ * b.sign_;
    return SurdValue(s, s == 0 ? Rational(0) : a.radicand_ / b.radicand_);
  }

  // Exact sum, or nullopt when the radicands are incompatible and the caller
  // must drop to the float path.
  std::optional<SurdValue> add(const SurdValue& o) const;

  double to_double() const {
    return sign_ * std::sqrt(radicand_.to_double());
  }

  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  std::string str() const;

 private:
  SurdValue(int sign, Rational radicand)
      : sign_(sign), radicand_(std::move(radicand)) {
    if (sign_ == 0 || radicand_.is_zero()) {
      sign_ = 0;
      radicand_ = Rational(0);
    }
  }

  int sign_;           // -1, 0, +1
  Rational radicand_;  // >= 0, reduced; zero iff sign is zero
};

std::ostream& operator<<(std::ostream& os, const SurdValue& s);

// Accumulator for sums of surds, grouped by compatibility class. Two surds are
// compatible when the ratio of their radicands is a perfect rational square;
// within a class the sum is rational and stays exact. Distinct square roots
// are linearly independent over Q, so a grouped sum is zero iff every class
// coefficient is zero.
class SurdSum {
 public:
  SurdSum() = default;

  void add(const SurdValue& v);
  void add_product(const SurdValue& a, const SurdValue& b) { add(a * b); }

  bool is_zero() const;
  // Collapses to a single surd when exactly one class survives (or zero).
  std::optional<SurdValue> as_surd() const;
  double to_double() const;

 private:
  struct Term {
    Rational coeff;  // rational multiple of sqrt(base)
    Rational base;   // class representative radicand, > 0
  };
  std::vector<Term> terms_;
};

// Reconstruct a surd from a float: finds a small-denominator rational close to
// value^2 and returns sign*sqrt(it) when the match is within rel_tol.
std::optional<SurdValue> snap_to_surd(double value, double rel_tol = 1e-10,
                                      long max_den = 16000000L);

}  // namespace su3
