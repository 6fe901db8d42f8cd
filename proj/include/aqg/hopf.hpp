#pragma once

#include <optional>

#include "aqg/algebra.hpp"

namespace aqg {

/// T1(a⊗a') = Δ(a)(1⊗a') and T2(a⊗a') = (a⊗1)Δ(a') as n² × n² matrices.
struct TMaps {
  Matrix t1;
  Matrix t2;
  double cond_t1 = 0.0;
  double cond_t2 = 0.0;
  std::size_t rank_t1 = 0;
  std::size_t rank_t2 = 0;
  bool t1_bijective = false;
  bool t2_bijective = false;
};

/// A finite-dimensional Hopf (*-)algebra with derived counit and antipode.
///
/// The coproduct is an n² × n matrix: column i holds Δ(e_i) in the basis
/// e_j ⊗ e_k (index j*n + k). The counit is a row vector; the antipode and
/// its inverse are n × n matrices acting on coordinates.
struct HopfData {
  FiniteDimAlgebra algebra;
  Matrix coproduct;
  RowVector counit;
  Matrix antipode;
  Matrix antipode_inv;
  AlgebraElement unit;
  TMaps t_maps;

  std::size_t dim() const { return algebra.dim(); }
};

/// Optional user-declared structure for cross-checking the derived one.
struct DeclaredHopfData {
  std::optional<Matrix> antipode;
  std::optional<RowVector> counit;
};

/// Throws NotBijectiveT naming the map and its rank.
TMaps build_t_maps(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol);

/// Solves (ε⊗ι)Δ = ι; throws NoCounit if inconsistent or not unique,
/// NotHomomorphism if ε(ab) ≠ ε(a)ε(b).
RowVector derive_counit(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol);

/// S(a) = (ε⊗ι)(T1⁻¹(a⊗1)). Throws AntipodeLawFailed if either antipode law
/// fails afterwards.
Matrix derive_antipode(const FiniteDimAlgebra& a, const Matrix& coproduct, const RowVector& counit,
                       const Tolerance& tol);

/// Derives the full Hopf structure; throws on the first failed prerequisite.
HopfData make_hopf(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol);

/// Every Hopf-level identity as a check list; never throws for math failures.
CheckList verify_hopf(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol,
                      const DeclaredHopfData& declared = {});

/// Checks of the identities for already-derived data (used on dual algebras too).
CheckList verify_hopf_data(const HopfData& h, const Tolerance& tol, const std::string& prefix = "hopf");

/// Flip of the coproduct: Δ^op(a) = a₍₂₎ ⊗ a₍₁₎.
Matrix opposite_coproduct(const Matrix& coproduct, std::size_t n);

/// Matrix of the product map on A⊗A (needed for homomorphism checks).
Matrix tensor_square_product(const FiniteDimAlgebra& a);

}  // namespace aqg
