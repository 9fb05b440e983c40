#include "su3cg/su2.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "su3cg/errors.hpp"

namespace su3 {

namespace {

struct Key {
  std::array<long, 6> twice;  // doubled (j1, m1, j2, m2, J, M)
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (long v : k.twice) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

long doubled(const Rational& r, const char* what) {
  Rational t = r * Rational(2);
  if (!t.is_integer())
    throw MalformedKey(std::string(what) + "=" + r.str() +
                       " is not half-integral");
  return t.to_long();
}

void check_projection(const Rational& j, const Rational& m, const char* what) {
  if (m.abs() > j || !(j - m).is_integer())
    throw MalformedKey(std::string("projection ") + what + " invalid: j=" +
                       j.str() + " m=" + m.str());
}

SurdValue compute(const Rational& j1, const Rational& m1, const Rational& j2,
                  const Rational& m2, const Rational& J, const Rational& M) {
  if (m1 + m2 != M) return SurdValue::zero();
  if (J > j1 + j2 || J < (j1 - j2).abs()) return SurdValue::zero();
  if (!(j1 + j2 - J).is_integer()) return SurdValue::zero();

  // Prefactor under a single square root.
  Rational pref = Rational(2) * J + Rational(1);
  pref *= Rational(factorial(j1 + j2 - J), factorial(j1 + j2 + J + Rational(1)));
  pref *= Rational(factorial(j1 - j2 + J) * factorial(j2 - j1 + J), 1);
  pref *= Rational(factorial(J + M) * factorial(J - M), 1);
  pref *= Rational(factorial(j1 + m1) * factorial(j1 - m1), 1);
  pref *= Rational(factorial(j2 + m2) * factorial(j2 - m2), 1);

  // Alternating rational sum.
  Rational lo = max(Rational(0), max(j2 - J - m1, j1 + m2 - J));
  Rational hi = min(j1 + j2 - J, min(j1 - m1, j2 + m2));
  Rational sum(0);
  for (Rational k = lo; k <= hi; k += Rational(1)) {
    mpz_class den = factorial(k) * factorial(j1 + j2 - J - k) *
                    factorial(j1 - m1 - k) * factorial(j2 + m2 - k) *
                    factorial(J - j2 + m1 + k) * factorial(J - j1 - m2 + k);
    Rational term(parity_sign(k), 1);
    sum += term / Rational(den, 1);
  }
  return SurdValue::of_rational(sum) * SurdValue::sqrt_of(pref);
}

std::unordered_map<Key, SurdValue, KeyHash> g_memo;
std::shared_mutex g_memo_mutex;

}  // namespace

SurdValue su2_cgc(const Rational& j1, const Rational& m1, const Rational& j2,
                  const Rational& m2, const Rational& J, const Rational& M) {
  Key key{{doubled(j1, "j1"), doubled(m1, "m1"), doubled(j2, "j2"),
           doubled(m2, "m2"), doubled(J, "J"), doubled(M, "M")}};
  if (j1.is_negative() || j2.is_negative() || J.is_negative())
    throw MalformedKey("negative angular momentum");
  check_projection(j1, m1, "m1");
  check_projection(j2, m2, "m2");
  check_projection(J, M, "M");
  {
    std::shared_lock lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  SurdValue v = compute(j1, m1, j2, m2, J, M);
  std::unique_lock lock(g_memo_mutex);
  return g_memo.emplace(key, v).first->second;
}

std::vector<std::tuple<Rational, Rational, SurdValue>> su2_couplings(
    const Rational& j1, const Rational& j2, const Rational& J,
    const Rational& M) {
  if (J > j1 + j2 || J < (j1 - j2).abs() || !(j1 + j2 - J).is_integer())
    throw TriangleViolation("no coupling (" + j1.str() + "," + j2.str() +
                            ") -> " + J.str());
  std::vector<std::tuple<Rational, Rational, SurdValue>> out;
  if (M.abs() > J || !(J - M).is_integer()) return out;
  Rational m1_hi = min(j1, M + j2);
  Rational m1_lo = max(-j1, M - j2);
  for (Rational m1 = m1_hi; m1 >= m1_lo; m1 -= Rational(1)) {
    SurdValue c = su2_cgc(j1, m1, j2, M - m1, J, M);
    if (!c.is_zero()) out.emplace_back(m1, M - m1, c);
  }
  return out;
}

}  // namespace su3
