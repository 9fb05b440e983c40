#include "su3cg/rational.hpp"
#include "su3cg/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace su3 {

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(text), mpz_class(1));
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw MalformedKey("not a rational: '" + text + "'");
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << '/' << v_.get_den();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class factorial(const Rational& n) {
  if (!n.is_integer() || n.is_negative())
    throw InternalError("factorial: argument " + n.str() +
                        " is not a non-negative integer");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n.to_long()));
  return out;
}

int parity_sign(const Rational& n) {
  if (!n.is_integer())
    throw InternalError("parity_sign: argument " + n.str() + " not integral");
  return mpz_odd_p(n.num().get_mpz_t()) ? -1 : +1;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.is_negative()) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<SurdValue> SurdValue::add(const SurdValue& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  auto ratio = rational_sqrt(o.radicand_ / radicand_);
  if (!ratio) return std::nullopt;
  // this + o = (sign + o.sign*ratio) * sqrt(radicand)
  Rational coeff = Rational(sign_) + Rational(o.sign_) * *ratio;
  Rational rad = coeff * coeff * radicand_;
  return SurdValue(coeff.sign(), rad);
}

std::string SurdValue::str() const {
  if (sign_ == 0) return "0";
  auto rat = as_rational();
  std::ostringstream os;
  if (rat) {
    os << rat->str();
  } else {
    if (sign_ < 0) os << '-';
    os << "sqrt(" << radicand_.str() << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurdValue& s) {
  return os << s.str();
}

void SurdSum::add(const SurdValue& v) {
  if (v.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    auto ratio = rational_sqrt(v.radicand() / it->base);
    if (!ratio) continue;
    it->coeff += Rational(v.sign()) * *ratio;
    if (it->coeff.is_zero()) terms_.erase(it);
    return;
  }
  terms_.push_back({Rational(v.sign()), v.radicand()});
}

bool SurdSum::is_zero() const { return terms_.empty(); }

std::optional<SurdValue> SurdSum::as_surd() const {
  if (terms_.empty()) return SurdValue::zero();
  if (terms_.size() > 1) return std::nullopt;
  const Term& t = terms_.front();
  return SurdValue::of_rational(t.coeff) * SurdValue::sqrt_of(t.base);
}

double SurdSum::to_double() const {
  double acc = 0.0;
  for (const auto& t : terms_)
    acc += t.coeff.to_double() * std::sqrt(t.base.to_double());
  return acc;
}

std::optional<SurdValue> snap_to_surd(double value, double rel_tol,
                                      long max_den) {
  if (!std::isfinite(value)) return std::nullopt;
  double sq = value * value;
  if (sq < rel_tol * rel_tol) return SurdValue::zero();
  // Continued-fraction expansion of value^2 with bounded denominator.
  double x = sq;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 48 && frac > 1e-15; ++it) {
    x = 1.0 / frac;
    double fl = std::floor(x);
    if (fl > 4e18 / std::max(1L, q1)) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    frac = x - fl;
    if (std::abs(static_cast<double>(p1) / q1 - sq) < rel_tol * sq) break;
  }
  if (q1 <= 0 || p1 < 0) return std::nullopt;
  Rational rad(p1, q1);
  if (std::abs(rad.to_double() - sq) > rel_tol * std::max(sq, 1e-300))
    return std::nullopt;
  SurdValue s = SurdValue::sqrt_of(rad);
  if (value < 0) s = -s;
  if (std::abs(s.to_double() - value) >
      rel_tol * std::max(std::abs(value), 1e-300))
    return std::nullopt;
  return s;
}

}  // namespace su3
