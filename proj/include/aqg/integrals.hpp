#pragma once

#include <optional>

#include "aqg/hopf.hpp"

namespace aqg {

struct PositivityResult {
  bool positive = false;       // Gram PSD within abs_tol
  bool faithful = false;       // Gram positive definite
  double min_eigenvalue = 0.0;
  Matrix gram;                 // gram(j, i) = functional(e_j* e_i)
};

/// Left/right integrals and the data they determine: modular element δ,
/// modular automorphisms σ, σ', and the scalar ν with φ∘S² = νφ.
struct IntegralData {
  RowVector phi;
  RowVector psi;
  AlgebraElement delta;
  AlgebraElement delta_inv;
  Matrix sigma;
  Matrix sigma_prime;
  cplx nu{1.0, 0.0};
  std::optional<PositivityResult> phi_positivity;  // nullopt without a star
  std::optional<PositivityResult> psi_positivity;
  cplx psi_over_phi_s{0.0, 0.0};  // ψ = c · φ∘S
  std::size_t left_solution_dim = 0;
  std::size_t right_solution_dim = 0;
};

/// Scales a functional so that its largest-modulus basis value is 1 (the
/// first such value in basis order when several tie).
RowVector canonical_normalization(const RowVector& functional, const Tolerance& tol);

/// The 1-dimensional solution ray of (ι⊗φ)Δ(a) = φ(a)1, canonically normalized.
/// Throws NoIntegral / NonUniqueIntegral.
RowVector solve_left_integral(const HopfData& h, const Tolerance& tol);
/// Mirror: (ψ⊗ι)Δ(a) = ψ(a)1.
RowVector solve_right_integral(const HopfData& h, const Tolerance& tol);
std::size_t left_invariant_dimension(const HopfData& h, const Tolerance& tol);
std::size_t right_invariant_dimension(const HopfData& h, const Tolerance& tol);

/// δ from (φ⊗ι)Δ(a) = φ(a)δ. Throws InconsistentDelta / NotInvertible.
std::pair<AlgebraElement, AlgebraElement> derive_modular_element(const HopfData& h,
                                                                 const RowVector& phi,
                                                                 const Tolerance& tol);

/// The automorphism σ with ω(ab) = ω(bσ(a)) for a faithful functional ω.
/// Throws NotFaithful / NotAutomorphism.
Matrix modular_automorphism(const FiniteDimAlgebra& a, const RowVector& omega,
                            const Tolerance& tol);

/// ν with φ(S²(a)) = νφ(a). Throws InconsistentNu.
cplx derive_nu(const HopfData& h, const RowVector& phi, const Tolerance& tol);

/// Gram test of ω(a*a) ≥ 0; nullopt when the algebra has no involution.
std::optional<PositivityResult> check_positivity(const FiniteDimAlgebra& a, const RowVector& omega,
                                                 const Tolerance& tol);

/// Solves both integrals and derives everything from them.
IntegralData derive_integrals(const HopfData& h, const Tolerance& tol);
/// Same, for a left integral fixed by the caller (the right one is solved).
IntegralData derive_integrals_with_left(const HopfData& h, const RowVector& phi,
                                        const Tolerance& tol);

CheckList verify_integrals(const HopfData& h, const IntegralData& d, const Tolerance& tol,
                           const std::string& prefix = "integrals");

}  // namespace aqg
