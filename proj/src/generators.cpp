#include "su3cg/generators.hpp"

#include <algorithm>
#include <map>

#include "su3cg/errors.hpp"

namespace su3 {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);

SurdValue srd(long n) { return SurdValue::of_int(n); }

Mat3c zero3c() { return Mat3c{}; }

std::array<Mat3c, 8> make_gell_mann() {
  std::array<Mat3c, 8> lam;
  for (auto& m : lam) m = zero3c();
  auto re = [](long n) { return ComplexSurd{srd(n), SurdValue::zero()}; };
  auto im = [](long n) { return ComplexSurd{SurdValue::zero(), srd(n)}; };

  lam[0][0][1] = re(1); lam[0][1][0] = re(1);
  lam[1][0][1] = im(-1); lam[1][1][0] = im(1);
  lam[2][0][0] = re(1); lam[2][1][1] = re(-1);
  lam[3][0][2] = re(1); lam[3][2][0] = re(1);
  lam[4][0][2] = im(-1); lam[4][2][0] = im(1);
  lam[5][1][2] = re(1); lam[5][2][1] = re(1);
  lam[6][1][2] = im(-1); lam[6][2][1] = im(1);
  SurdValue inv_sqrt3 = SurdValue::sqrt_of(Rational(1, 3));
  lam[7][0][0] = {inv_sqrt3, SurdValue::zero()};
  lam[7][1][1] = {inv_sqrt3, SurdValue::zero()};
  lam[7][2][2] = {-(srd(2) * inv_sqrt3), SurdValue::zero()};
  return lam;
}

// Nonzero structure constants with ascending index triples.
struct ConstEntry {
  int a, b, c;
  SurdValue v;
};

const std::vector<ConstEntry>& f_table() {
  static const std::vector<ConstEntry> t = [] {
    SurdValue half = SurdValue::sqrt_of(Rational(1, 4));
    SurdValue s32 = SurdValue::sqrt_of(Rational(3, 4));
    return std::vector<ConstEntry>{
        {1, 2, 3, srd(1)},  {4, 5, 8, s32},    {6, 7, 8, s32},
        {1, 4, 7, half},    {2, 4, 6, half},   {3, 4, 5, half},
        {2, 5, 7, half},    {1, 5, 6, -half},  {3, 6, 7, -half},
    };
  }();
  return t;
}

const std::vector<ConstEntry>& d_table() {
  static const std::vector<ConstEntry> t = [] {
    SurdValue half = SurdValue::sqrt_of(Rational(1, 4));
    SurdValue r3 = SurdValue::sqrt_of(Rational(1, 3));
    SurdValue r12 = SurdValue::sqrt_of(Rational(1, 12));
    return std::vector<ConstEntry>{
        {1, 1, 8, r3},     {2, 2, 8, r3},     {3, 3, 8, r3},
        {8, 8, 8, -r3},    {4, 4, 8, -r12},   {5, 5, 8, -r12},
        {6, 6, 8, -r12},   {7, 7, 8, -r12},   {1, 4, 6, half},
        {1, 5, 7, half},   {2, 5, 6, half},   {3, 4, 4, half},
        {3, 5, 5, half},   {2, 4, 7, -half},  {3, 6, 6, -half},
        {3, 7, 7, -half},
    };
  }();
  return t;
}

int permutation_parity(std::array<int, 3> v) {
  int parity = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        parity = -parity;
      }
  return parity;
}

}  // namespace

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::I3: return "I3";
    case Gen::Y: return "Y";
    case Gen::IPlus: return "I+";
    case Gen::IMinus: return "I-";
    case Gen::KPlus: return "K+";
    case Gen::KMinus: return "K-";
    case Gen::LPlus: return "L+";
    case Gen::LMinus: return "L-";
  }
  throw InternalError("gen_name: bad enum");
}

Gen gen_from_name(const std::string& name) {
  for (Gen g : kAllGens)
    if (gen_name(g) == name) return g;
  throw MalformedKey("unknown generator '" + name + "'");
}

const std::array<Mat3c, 8>& gell_mann() {
  static const std::array<Mat3c, 8> lam = make_gell_mann();
  return lam;
}

SurdValue f_const(int i, int j, int k) {
  std::array<int, 3> idx{i, j, k};
  std::array<int, 3> s = idx;
  std::sort(s.begin(), s.end());
  for (const auto& e : f_table())
    if (e.a == s[0] && e.b == s[1] && e.c == s[2])
      return permutation_parity(idx) > 0 ? e.v : -e.v;
  return SurdValue::zero();
}

SurdValue d_const(int i, int j, int k) {
  std::array<int, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  for (const auto& e : d_table())
    if (e.a == s[0] && e.b == s[1] && e.c == s[2]) return e.v;
  return SurdValue::zero();
}

Mat3 fundamental_matrix(Gen g) {
  const auto& lam = gell_mann();
  SurdValue half = SurdValue::sqrt_of(Rational(1, 4));
  // F_k = lambda_k / 2; ladder combos F_a +- i F_b.
  auto combo = [&](int a, int b, int sign) {
    Mat3 out{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        // (lam_a +- i lam_b)/2: the real part picks up -sign * Im(lam_b)/2.
        SurdValue re = half * lam[a - 1][r][c].re;
        SurdValue contrib = half * lam[b - 1][r][c].im;
        auto sum = sign > 0 ? re.add(-contrib) : re.add(contrib);
        SurdValue imag_re = lam[a - 1][r][c].im;
        auto imag = sign > 0 ? imag_re.add(lam[b - 1][r][c].re)
                             : imag_re.add(-lam[b - 1][r][c].re);
        if (!sum || !imag || !imag->is_zero())
          throw InternalError("fundamental_matrix: non-real entry");
        out[r][c] = *sum;
      }
    return out;
  };
  switch (g) {
    case Gen::I3: {
      Mat3 out{};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = half * gell_mann()[2][r][c].re;
      return out;
    }
    case Gen::Y: {
      Mat3 out{};
      SurdValue scale = SurdValue::sqrt_of(Rational(1, 3));
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = scale * gell_mann()[7][r][c].re;
      return out;
    }
    case Gen::IPlus: return combo(1, 2, +1);
    case Gen::IMinus: return combo(1, 2, -1);
    case Gen::KPlus: return combo(4, 5, +1);
    case Gen::KMinus: return combo(4, 5, -1);
    case Gen::LPlus: return combo(6, 7, +1);
    case Gen::LMinus: return combo(6, 7, -1);
  }
  throw InternalError("fundamental_matrix: bad enum");
}

Mat3 conjugate_fundamental_matrix(Gen g) {
  Mat3 base = fundamental_matrix(g);
  Mat3 out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = -base[c][r];
  return out;
}

Mat3 eta_basis_matrix(Gen g) {
  // eta1 = -y^1, eta2 = y^2, eta3 = y^3: conjugate by diag(-1,1,1).
  Mat3 conj = conjugate_fundamental_matrix(g);
  Mat3 out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int sign = ((r == 0) ? -1 : 1) * ((c == 0) ? -1 : 1);
      out[r][c] = sign > 0 ? conj[r][c] : -conj[r][c];
    }
  return out;
}

SurdValue isospin_lowering_element(const Rational& i, const Rational& i3) {
  if (i3.abs() > i) return SurdValue::zero();
  Rational val = i * (i + kOne) - i3 * (i3 - kOne);
  if (val.is_negative() || val.is_zero()) return SurdValue::zero();
  return SurdValue::sqrt_of(val);
}

LineInvariants ladder_invariants(IrrepLabel s, const Rational& i,
                                 const Rational& y) {
  if (!in_diagram(s, i, y))
    throw OutsideDiagram("(i,y)=(" + i.str() + "," + y.str() +
                         ") outside diagram of " + s.str());
  const Rational hy = y / Rational(2);
  Rational tp(2 * s.p + s.q, 3), tq(s.p + 2 * s.q, 3), tpq(s.p - s.q, 3);
  Rational z2 = (tp - i - hy) * (tq + i + hy + Rational(2)) *
                (tpq + i + hy + kOne);
  Rational w2 = (-tpq + i - hy) * (tq - i + hy + kOne) * (tp + i - hy + kOne);
  if (z2.is_negative() || w2.is_negative())
    throw InternalError("ladder_invariants: negative square inside diagram");
  return {z2, w2};
}

BranchAmplitudes branch_amplitudes(IrrepLabel s, const Rational& i,
                                   const Rational& y) {
  auto inv = ladder_invariants(s, i, y);
  SurdValue up = SurdValue::sqrt_of(inv.z2 / (Rational(2) * (i + kOne)));
  SurdValue down = i.is_zero()
                       ? SurdValue::zero()
                       : SurdValue::sqrt_of(inv.w2 / (Rational(2) * i + kOne));
  return {up, down};
}

BranchAmplitudes branch_amplitudes_or_zero(IrrepLabel s, const Rational& i,
                                           const Rational& y) {
  if (!in_diagram(s, i, y)) return {SurdValue::zero(), SurdValue::zero()};
  return branch_amplitudes(s, i, y);
}

namespace {

// sqrt((i + sign*i3 + off) / (2i + d)); zero when the numerator vanishes,
// and by convention zero when i = 0 on the 1/(2i) branches.
SurdValue iso_weight(const Rational& num, const Rational& den) {
  if (den.is_zero()) return SurdValue::zero();
  if (num.is_zero()) return SurdValue::zero();
  if (num.is_negative())
    throw InternalError("iso_weight: negative ratio");
  return SurdValue::sqrt_of(num / den);
}

}  // namespace

LadderCoefficients ladder_coefficients(const CanonicalState& st) {
  const IrrepLabel s = st.irrep;
  const Rational &i = st.i, &i3 = st.i3, &y = st.y;
  const Rational two_i = Rational(2) * i;

  auto src = branch_amplitudes_or_zero(s, i, y);
  auto up_tgt = branch_amplitudes_or_zero(s, i + kHalf, y - kOne);
  auto down_tgt = branch_amplitudes_or_zero(s, i - kHalf, y - kOne);

  LadderCoefficients lc;
  lc.a_plus = iso_weight(i + i3 + kOne, two_i + kOne) * src.up;
  lc.b_plus = iso_weight(i - i3, two_i) * src.down;
  lc.c_plus = iso_weight(i - i3 + kOne, two_i + kOne) * src.up;
  lc.d_plus = -(iso_weight(i + i3, two_i) * src.down);
  // Hermitian transposes: coefficient of the raising operator evaluated at
  // the lowering target.
  lc.a_minus = iso_weight(i - i3 + kOne, two_i + kOne) * up_tgt.down;
  lc.b_minus = i.is_zero() ? SurdValue::zero()
                           : iso_weight(i + i3, two_i) * down_tgt.up;
  lc.c_minus = -(iso_weight(i + i3 + kOne, two_i + kOne) * up_tgt.down);
  lc.d_minus = i.is_zero() ? SurdValue::zero()
                           : iso_weight(i - i3, two_i) * down_tgt.up;
  return lc;
}

std::vector<std::pair<CanonicalState, SurdValue>> apply_generator(
    Gen g, const CanonicalState& st) {
  validate_state(st);
  std::vector<std::pair<CanonicalState, SurdValue>> out;
  auto push = [&](Rational i, Rational i3, Rational y, const SurdValue& v) {
    if (v.is_zero()) return;
    CanonicalState tgt{st.irrep, std::move(i), std::move(i3), std::move(y)};
    if (!state_in_lattice(tgt))
      throw InternalError("apply_generator: nonzero amplitude to " + tgt.str());
    out.emplace_back(std::move(tgt), v);
  };
  const Rational &i = st.i, &i3 = st.i3, &y = st.y;
  switch (g) {
    case Gen::I3:
      push(i, i3, y, SurdValue::of_rational(i3));
      break;
    case Gen::Y:
      push(i, i3, y, SurdValue::of_rational(y));
      break;
    case Gen::IPlus:
      if (i3 + kOne <= i)
        push(i, i3 + kOne, y, isospin_lowering_element(i, i3 + kOne));
      break;
    case Gen::IMinus:
      if (i3 - kOne >= -i)
        push(i, i3 - kOne, y, isospin_lowering_element(i, i3));
      break;
    case Gen::KPlus: {
      auto lc = ladder_coefficients(st);
      push(i + kHalf, i3 + kHalf, y + kOne, lc.a_plus);
      push(i - kHalf, i3 + kHalf, y + kOne, lc.b_plus);
      break;
    }
    case Gen::KMinus: {
      auto lc = ladder_coefficients(st);
      push(i + kHalf, i3 - kHalf, y - kOne, lc.a_minus);
      push(i - kHalf, i3 - kHalf, y - kOne, lc.b_minus);
      break;
    }
    case Gen::LPlus: {
      auto lc = ladder_coefficients(st);
      push(i + kHalf, i3 - kHalf, y + kOne, lc.c_plus);
      push(i - kHalf, i3 - kHalf, y + kOne, lc.d_plus);
      break;
    }
    case Gen::LMinus: {
      auto lc = ladder_coefficients(st);
      push(i + kHalf, i3 + kHalf, y - kOne, lc.c_minus);
      push(i - kHalf, i3 + kHalf, y - kOne, lc.d_minus);
      break;
    }
  }
  return out;
}

Eigen::MatrixXd GeneratorMatrixSet::dense(Gen g) const {
  const auto n = static_cast<Eigen::Index>(lattice.states.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const auto& cols = of(g);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c])
      m(r, static_cast<Eigen::Index>(c)) = v.to_double();
  return m;
}

GeneratorMatrixSet build_generator_matrices(IrrepLabel s) {
  GeneratorMatrixSet set;
  set.irrep = s;
  set.lattice = enumerate_basis(s);
  const size_t n = set.lattice.states.size();
  for (Gen g : kAllGens) {
    auto& cols = set.columns[static_cast<size_t>(g)];
    cols.resize(n);
    for (size_t c = 0; c < n; ++c) {
      for (auto& [tgt, v] : apply_generator(g, set.lattice.states[c])) {
        int r = set.lattice.index_of(tgt);
        if (r < 0) throw InternalError("build_generator_matrices: bad target");
        cols[c].emplace_back(r, v);
      }
    }
  }
  return set;
}

}  // namespace su3
