#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "su3cg/errors.hpp"

namespace su3 {

// Exact rational scalar backed by GMP. Always reduced, denominator > 0,
// zero is 0/1. Quantum numbers (i, i3, y, mu, ...) are stored in this type
// so lattice membership tests stay exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(mpz_class(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(mpz_class(n), mpz_class(d)) {
    if (d == 0) throw InternalError("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw InternalError("Rational: zero denominator");
    v_.canonicalize();
  }

  // Accepts "n", "-n", "n/d".
  static Rational parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // 2x integral (isospin-type quantum number).
  bool is_half_integral() const { return v_.get_den() == 1 || v_.get_den() == 2; }
  // 3x integral (hypercharge-type quantum number).
  bool is_third_integral() const {
    return v_.get_den() == 1 || v_.get_den() == 3;
  }
  int sign() const { return sgn(v_); }

  // Throws unless the value is an integer that fits in long.
  long to_long() const {
    if (!is_integer()) throw InternalError("Rational::to_long: not an integer");
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p()) throw InternalError("Rational::to_long: overflow");
    return n.get_si();
  }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InternalError("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// n! for an integral, non-negative Rational. A fractional or negative argument
// signals a lattice-enumeration bug upstream and throws InternalError.
mpz_class factorial(const Rational& n);

// (-1)^n for an integral Rational.
int parity_sign(const Rational& n);

}  // namespace su3
