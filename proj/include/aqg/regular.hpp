#pragma once

#include "aqg/fourier.hpp"

namespace aqg {

/// V(x⊗x') = Δ(x')(x⊗1) and W = V⁻¹ on A⊗A, together with W as the element
/// Σ e_i⊗e^i of A⊗B and its inverse there.
struct RegularRep {
  Matrix v;
  Matrix w;           // closed form S⁻¹(x'₍₁₎)x ⊗ x'₍₂₎
  Vector w_elem;      // A⊗B, index i*n + l
  Vector w_inv_elem;  // inverse of w_elem in A⊗B
};

/// V and W = V⁻¹ (closed form) for any Hopf algebra given by structure constants.
Matrix left_regular_v(const HopfData& h);
Matrix left_regular_w(const HopfData& h);

RegularRep build_regular(const DualPair& pair, const Tolerance& tol);

/// (W12 W13 W23, W23 W12) on A⊗A⊗A.
std::pair<Matrix, Matrix> pentagon_sides(const Matrix& w, std::size_t n);

/// The map y⊗x ↦ ⟨S⁻¹(x₍₁₎), y₍₁₎⟩ y₍₂₎⊗x₍₂₎ on B⊗A.
Matrix transformed_w(const DualPair& pair);
/// The map y⊗x ↦ ⟨x₍₁₎, y₍₁₎⟩ y₍₂₎⊗x₍₂₎ on B⊗A.
Matrix transformed_w_inverse(const DualPair& pair);

struct TraceFormula {
  bool applicable = false;  // S² = ι
  cplx k{0.0, 0.0};         // φ(a) = k tr(π(a))
  double residual = 0.0;
};

TraceFormula trace_formula(const DualPair& pair, const Tolerance& tol);

CheckList verify_regular(const DualPair& pair, const RegularRep& rep, const FourierMaps& f,
                         const Tolerance& tol);

}  // namespace aqg
