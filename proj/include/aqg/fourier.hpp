#pragma once

#include <cstdint>

#include "aqg/duality.hpp"

namespace aqg {

/// F1(a) = φ(·a) and F2(a) = ψ(S(·)a) as matrices from A-coordinates to B-coordinates.
struct FourierMaps {
  Matrix f1;
  Matrix f1_inv;
  Matrix f1_w_form;  // (φ⊗ι)(W(a⊗1)) evaluated in A⊗B
  Matrix f2;
  Matrix f2_inv;
  cplx f2_scalar{0.0, 0.0};            // F2 = c · F1∘σ∘S⁻¹
  double f2_scalar_residual = 0.0;
  cplx inverse_constant{0.0, 0.0};     // φ_B(S_B⁻¹(·)b) = c · F1⁻¹(b)
  double inverse_constant_spread = 0.0;
  cplx f2_inverse_constant{0.0, 0.0};  // ψ_B(·b) = c · F2⁻¹(b)
  double f2_inverse_constant_spread = 0.0;
};

FourierMaps build_fourier(const DualPair& pair, const Tolerance& tol);

/// π(a): left multiplication on A.
Matrix pi_a(const DualPair& pair, const AlgebraElement& a);
/// λ(b)x = ⟨S⁻¹(x₍₁₎), b⟩ x₍₂₎ on A.
Matrix lambda_a(const DualPair& pair, const AlgebraElement& b);
/// λ(a)y = ⟨a, y₍₁₎⟩ y₍₂₎ on B.
Matrix lambda_b(const DualPair& pair, const AlgebraElement& a);
/// π(b): left multiplication on B.
Matrix pi_b(const DualPair& pair, const AlgebraElement& b);

/// |φ_B(F(a)*F(a)) − φ(a*a)| / max(1, |φ(a*a)|).
double plancherel_residual(const DualPair& pair, const FourierMaps& f, const AlgebraElement& a);

/// Inverse, W-form, F2 relation, homomorphism and intertwining properties of
/// the actions, and (with a star) Plancherel on `samples` random vectors.
CheckList verify_fourier(const DualPair& pair, const FourierMaps& f, const Tolerance& tol,
                         std::uint64_t seed = 1, int samples = 100);

}  // namespace aqg
