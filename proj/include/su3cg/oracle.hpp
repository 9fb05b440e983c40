#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <vector>

#include "su3cg/generators.hpp"
#include "su3cg/irrep.hpp"

namespace su3 {

// Brute-force reduction of V(s1) (x) V(s2) by explicit linear algebra.
// Everything here is float-kernel numerics, deliberately independent of the
// recurrence pipeline it validates.

using SpMat = Eigen::SparseMatrix<double>;

struct ProductSpace {
  IrrepLabel s1, s2;
  WeightLattice lat1, lat2;
  long dim = 0;  // dim(s1) * dim(s2); pair (a,b) -> index a*dim(s2)+b

  std::array<SpMat, 8> ops;  // coupled generators, kAllGens order
  const SpMat& op(Gen g) const { return ops[static_cast<size_t>(g)]; }

  long pair_index(int a, int b) const {
    return static_cast<long>(a) * static_cast<long>(lat2.states.size()) + b;
  }
  Weight pair_weight(long idx) const;
};

// Throws CapExceeded when dim(s1)*dim(s2) > cap.
ProductSpace build_product(IrrepLabel s1, IrrepLabel s2, long cap = 400);

// Kernel of the stacked raising operators restricted to the top-weight
// eigenspace of s; columns orthonormal, count equals the series multiplicity
// (else DimensionMismatch).
Eigen::MatrixXd highest_weight_subspace(const ProductSpace& ps, IrrepLabel s);

struct OracleIrrep {
  IrrepLabel s;
  std::vector<CanonicalState> states;  // enumerate_basis order
  Eigen::MatrixXd basis;               // column per state, in product space
};

// Lowers one highest-weight vector into a full orthonormal copy of V(s),
// labeling states by the I^2/I3/Y eigenvalues and fixing phases to the
// non-negative ladder convention. Throws DegenerateLabeling when the I^2
// spectrum fails to separate states.
OracleIrrep generate_irrep(const ProductSpace& ps, IrrepLabel s,
                           const Eigen::VectorXd& hw);

// Overlap table <pair | coupled state>: identical to irrep.basis, exposed as
// the coefficient table of the coupled copy.
Eigen::MatrixXd extract_cgc(const ProductSpace& ps, const OracleIrrep& irrep);

// Quadratic and cubic invariants and the Moshinsky multiplicity operator,
// assembled from one-factor operators.
Eigen::MatrixXd casimir_f_matrix(const ProductSpace& ps);
Eigen::MatrixXd casimir_g_matrix(const ProductSpace& ps);
Eigen::MatrixXd moshinsky_x(const ProductSpace& ps);

// Isospin-squared operator of the coupled system (dense).
Eigen::MatrixXd isospin_squared(const ProductSpace& ps);

}  // namespace su3
