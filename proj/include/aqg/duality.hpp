#pragma once

#include "aqg/integrals.hpp"

namespace aqg {

/// A together with B = Â realized on the basis f_j = φ(·e_j).
///
/// pairing(i, j) = ⟨e_i, f_j⟩ = φ(e_i e_j). With `modified` set, B carries the
/// opposite of the coproduct dual to A's product, i.e. ⟨aa', b⟩ = ⟨a'⊗a, Δ_B(b)⟩,
/// and its left integral is φ_B(φ(·a)) = ε(a).
struct DualPair {
  HopfData a;
  IntegralData a_integrals;
  HopfData b;
  IntegralData b_integrals;
  Matrix pairing;
  bool modified = true;

  std::size_t dim() const { return a.dim(); }
  /// ⟨a, b⟩ for coordinate vectors.
  cplx pair(const AlgebraElement& x, const AlgebraElement& y) const {
    return (x.transpose() * pairing * y)(0, 0);
  }
};

/// Structure constants of B computed through the pairing; B's Hopf data and
/// integrals are then derived by the same code used for A.
DualPair build_dual(const HopfData& a, const IntegralData& a_integrals, const Tolerance& tol,
                    bool modified = true);

/// Pairing compatibilities: products against coproducts, unit/counit,
/// antipodes, involutions, non-degeneracy.
CheckList verify_dual_pair(const DualPair& pair, const Tolerance& tol);

/// Coordinates in B of the basis dual to e_i: column i is e^i with ⟨e_k, e^i⟩ = δ_ki.
Matrix dual_basis(const DualPair& pair);

/// Σ_i e_i ⊗ e^i in A⊗B (index i*n + l for e_i ⊗ f_l).
Vector canonical_element(const DualPair& pair);

struct BidualityResult {
  Matrix iso;  // column i: image of e_i in the bidual basis
  double product_residual = 0.0;
  double coproduct_residual = 0.0;
  double star_residual = 0.0;
  double unit_residual = 0.0;
  CheckList checks;
};

/// Dualizes B once more, undoing the coproduct flip first, and compares the
/// result with A through a ↦ ⟨a, ·⟩.
BidualityResult verify_biduality(const DualPair& pair, const Tolerance& tol);

}  // namespace aqg
