#include "su3cg/irrep.hpp"

#include <sstream>

namespace su3 {

IrrepLabel::IrrepLabel(int P, int Q) : p(P), q(Q) {
  if (P < 0 || Q < 0)
    throw BadState("irrep labels must be non-negative, got (" +
                   std::to_string(P) + "," + std::to_string(Q) + ")");
}

std::string IrrepLabel::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

long dimension(IrrepLabel s) {
  return static_cast<long>(s.p + 1) * (s.q + 1) * (s.p + s.q + 2) / 2;
}

Rational casimir_f(IrrepLabel s) {
  long P = s.p, Q = s.q;
  return Rational(P * P + P * Q + Q * Q, 3) + Rational(P + Q);
}

Rational casimir_g(IrrepLabel s) {
  long P = s.p, Q = s.q;
  return Rational((P - Q) * (2 * P + Q + 3) * (P + 2 * Q + 3), 9);
}

IrrepLabel conjugate(IrrepLabel s) { return IrrepLabel(s.q, s.p); }

int triality(IrrepLabel s) {
  int t = (s.p - s.q) % 3;
  if (t == 2) t = -1;
  if (t == -2) t = 1;
  return t;
}

std::string CanonicalState::str() const {
  std::ostringstream os;
  os << irrep.str() << " i=" << i << " i3=" << i3 << " y=" << y;
  return os.str();
}

CanonicalState highest_weight(IrrepLabel s) {
  Rational top(s.p + s.q, 2);
  return CanonicalState{s, top, top, Rational(s.p - s.q, 3)};
}

std::pair<Rational, Rational> hypercharge_range(IrrepLabel s) {
  return {Rational(-(2 * s.p + s.q), 3), Rational(s.p + 2 * s.q, 3)};
}

bool hypercharge_admissible(IrrepLabel s, const Rational& y) {
  auto [lo, hi] = hypercharge_range(s);
  if (y < lo || y > hi) return false;
  return (y - lo).is_integer();
}

IsospinRange isospin_range(IrrepLabel s, const Rational& y) {
  if (!hypercharge_admissible(s, y))
    throw YOutOfRange("y=" + y.str() + " not admissible for " + s.str());
  const Rational third_p_minus_q(s.p - s.q, 3);
  const Rational half_y = y / Rational(2);

  // Lower boundary: line nu above the fold at y = -2(P-Q)/3, line delta below.
  Rational i_min;
  const Rational fold = Rational(-2 * (s.p - s.q), 3);
  Rational via_nu = third_p_minus_q + half_y;
  Rational via_delta = -third_p_minus_q - half_y;
  if (y > fold) {
    i_min = via_nu;
  } else if (y < fold) {
    i_min = via_delta;
  } else {
    if (via_nu != via_delta)
      throw InternalError("isospin_range: boundary branches disagree at fold");
    i_min = via_nu;
  }

  // Upper boundary: line d above y = (P-Q)/3, line u below.
  Rational i_max;
  Rational via_d = -half_y + Rational(2 * s.p + s.q, 3);
  Rational via_u = half_y + Rational(s.p + 2 * s.q, 3);
  if (y > third_p_minus_q) {
    i_max = via_d;
  } else if (y < third_p_minus_q) {
    i_max = via_u;
  } else {
    if (via_d != via_u)
      throw InternalError("isospin_range: boundary branches disagree at crest");
    i_max = via_d;
  }
  return {i_min, i_max};
}

bool in_diagram(IrrepLabel s, const Rational& i, const Rational& y) {
  if (!hypercharge_admissible(s, y)) return false;
  auto r = isospin_range(s, y);
  if (i < r.i_min || i > r.i_max) return false;
  return (i - r.i_min).is_integer();
}

bool state_in_lattice(const CanonicalState& st) {
  if (!st.i3.is_half_integral() || !st.i.is_half_integral()) return false;
  if (!in_diagram(st.irrep, st.i, st.y)) return false;
  if (st.i3.abs() > st.i) return false;
  return (st.i - st.i3).is_integer();
}

void validate_state(const CanonicalState& st) {
  if (!state_in_lattice(st))
    throw BadState("state " + st.str() + " not in the canonical lattice");
}

int WeightLattice::index_of(const Rational& i, const Rational& i3,
                            const Rational& y) const {
  Rational twice_i = i * Rational(2), twice_i3 = i3 * Rational(2);
  Rational thrice_y = y * Rational(3);
  if (!twice_i.is_integer() || !twice_i3.is_integer() || !thrice_y.is_integer())
    return -1;
  auto it = index_.find(
      {{twice_i.to_long(), twice_i3.to_long()}, thrice_y.to_long()});
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rational> WeightLattice::isospins_at(const Weight& w) const {
  std::vector<Rational> out;
  for (const auto& st : states)
    if (st.i3 == w.i3 && st.y == w.y) out.push_back(st.i);
  return out;
}

WeightLattice enumerate_basis(IrrepLabel s) {
  WeightLattice lat;
  lat.irrep = s;
  auto [ylo, yhi] = hypercharge_range(s);
  for (Rational y = yhi; y >= ylo; y -= Rational(1)) {
    auto r = isospin_range(s, y);
    for (Rational i = r.i_max; i >= r.i_min; i -= Rational(1)) {
      for (Rational i3 = i; i3 >= -i; i3 -= Rational(1)) {
        lat.index_[{{(i * Rational(2)).to_long(), (i3 * Rational(2)).to_long()},
                    (y * Rational(3)).to_long()}] =
            static_cast<int>(lat.states.size());
        lat.states.push_back(CanonicalState{s, i, i3, y});
      }
    }
  }
  if (static_cast<long>(lat.states.size()) != dimension(s))
    throw InternalError("enumerate_basis: state count " +
                        std::to_string(lat.states.size()) +
                        " does not match dimension of " + s.str());
  return lat;
}

int weight_multiplicity(IrrepLabel s, const Weight& w) {
  if (!w.i3.is_half_integral() || !w.y.is_third_integral()) return 0;
  if (!hypercharge_admissible(s, w.y)) return 0;
  auto r = isospin_range(s, w.y);
  if (!(w.i3 - r.i_min).is_integer()) return 0;
  Rational lo = max(r.i_min, w.i3.abs());
  if (lo > r.i_max) return 0;
  return static_cast<int>((r.i_max - lo).to_long()) + 1;
}

}  // namespace su3
