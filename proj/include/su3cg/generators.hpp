#pragma once

#include <Eigen/Core>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "su3cg/irrep.hpp"
#include "su3cg/surd.hpp"

namespace su3 {

enum class Gen { I3, Y, IPlus, IMinus, KPlus, KMinus, LPlus, LMinus };
inline constexpr std::array<Gen, 8> kAllGens = {
    Gen::I3,    Gen::Y,      Gen::IPlus, Gen::IMinus,
    Gen::KPlus, Gen::KMinus, Gen::LPlus, Gen::LMinus};

std::string gen_name(Gen g);          // "I3", "Y", "I+", ...
Gen gen_from_name(const std::string& name);

// ---- Fundamental realization -----------------------------------------------

struct ComplexSurd {
  SurdValue re, im;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};
using Mat3c = std::array<std::array<ComplexSurd, 3>, 3>;

// The eight Gell-Mann matrices (exact entries).
const std::array<Mat3c, 8>& gell_mann();

// Totally antisymmetric f and totally symmetric d structure constants,
// indices in 1..8.
SurdValue f_const(int i, int j, int k);
SurdValue d_const(int i, int j, int k);

// Generator matrices on V(1,0) in the (x1,x2,x3) basis, assembled from the
// Gell-Mann matrices through the Cartan-Weyl combinations. All entries real.
using Mat3 = std::array<std::array<SurdValue, 3>, 3>;
Mat3 fundamental_matrix(Gen g);

// Conjugate-triplet stages, kept separate so each is testable.
// Stage 1: matrices on the conjugated basis (y^1,y^2,y^3): negated transpose.
Mat3 conjugate_fundamental_matrix(Gen g);
// Stage 2: phase flip to the canonical (eta1,eta2,eta3) basis of V(0,1).
Mat3 eta_basis_matrix(Gen g);

// ---- Ladder matrix elements on V(P,Q) --------------------------------------

// Matrix element of I-: I- |i,i3> = B(i,i3) |i,i3-1>; zero at the bottom.
SurdValue isospin_lowering_element(const Rational& i, const Rational& i3);

// Line invariants z^2, w^2 of the hypercharge ladder at (i, y); both are
// non-negative inside the diagram. Throws OutsideDiagram.
struct LineInvariants {
  Rational z2, w2;
};
LineInvariants ladder_invariants(IrrepLabel s, const Rational& i,
                                 const Rational& y);

// Reduced amplitudes of K+/L+ at (i, y): `up` multiplies the i+1/2 branch
// (vanishes exactly on line d), `down` the i-1/2 branch (vanishes exactly on
// line nu, and is defined as 0 at i = 0). Both taken non-negative.
struct BranchAmplitudes {
  SurdValue up, down;
};
BranchAmplitudes branch_amplitudes(IrrepLabel s, const Rational& i,
                                   const Rational& y);
// Same, but zero outside the diagram instead of throwing.
BranchAmplitudes branch_amplitudes_or_zero(IrrepLabel s, const Rational& i,
                                           const Rational& y);

// K+-/L+- coefficients of one canonical state: K+ -> a(i+1/2) + b(i-1/2),
// L+ -> c(i+1/2) + d(i-1/2); a,b >= 0 and the lowering-operator versions
// follow by Hermitian transposition. Out-of-lattice targets get zero.
struct LadderCoefficients {
  SurdValue a_plus, b_plus, c_plus, d_plus;
  SurdValue a_minus, b_minus, c_minus, d_minus;
};
LadderCoefficients ladder_coefficients(const CanonicalState& st);

// Sparse action of one generator on a canonical state: (target, amplitude)
// pairs, omitting zeros. At most two entries for K/L, one for I+-, and the
// diagonal for I3/Y.
std::vector<std::pair<CanonicalState, SurdValue>> apply_generator(
    Gen g, const CanonicalState& st);

// ---- Whole-irrep matrix set -------------------------------------------------

// Sparse matrices over the enumerate_basis ordering; I3 and Y diagonal,
// lowering operators exact transposes of the raising ones.
struct GeneratorMatrixSet {
  IrrepLabel irrep;
  WeightLattice lattice;

  using SparseColumn = std::vector<std::pair<int, SurdValue>>;
  std::array<std::vector<SparseColumn>, 8> columns;  // indexed by kAllGens order

  const std::vector<SparseColumn>& of(Gen g) const {
    return columns[static_cast<size_t>(g)];
  }
  Eigen::MatrixXd dense(Gen g) const;  // float mirror, generated on demand
};

GeneratorMatrixSet build_generator_matrices(IrrepLabel s);

}  // namespace su3
