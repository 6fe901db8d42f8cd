#pragma once

#include <vector>

#include "aqg/heisenberg.hpp"
#include "aqg/regular.hpp"

namespace aqg {

/// GNS space of a faithful positive functional: ⟨η(x'), η(x)⟩ = φ(x*x') = vᴴ G v'.
/// With G = L Lᴴ, w = Lᴴ v are orthonormal coordinates; every operator below
/// is expressed in them.
struct GnsSpace {
  Matrix gram;  // gram(j, i) = φ(e_j* e_i)
  Matrix frame;
  Matrix frame_inv;

  std::size_t dim() const { return static_cast<std::size_t>(gram.rows()); }
  Vector eta(const AlgebraElement& x) const { return frame * x; }
  Matrix op(const Matrix& x) const { return frame * x * frame_inv; }
};

/// Throws NoStar, NotPositive or NotFaithful.
GnsSpace build_gns(const FiniteDimAlgebra& a, const RowVector& phi, const Tolerance& tol);

/// Polar decomposition of η(x) ↦ η(x*) in orthonormal coordinates.
struct TomitaData {
  AntilinearMap j;
  Matrix nabla;
  double residual = 0.0;
};

TomitaData tomita(const FiniteDimAlgebra& a, const GnsSpace& g, const Tolerance& tol);

/// Operators on H⊗H, Ĥ⊗Ĥ and Ĥ⊗H in orthonormal coordinates.
struct GnsData {
  GnsSpace h;
  GnsSpace h_hat;
  TomitaData t;
  TomitaData t_hat;
  Matrix fourier;  // H → Ĥ
  Matrix w;
  Matrix v;
  Matrix w_hat;    // left regular representation of B, same recipe as W
  Matrix u;        // (F⊗1)W(F*⊗1)
};

GnsData build_gns_data(const DualPair& pair, const FourierMaps& f, const RegularRep& r, const Tolerance& tol);

/// The GNS space of f on the Heisenberg algebra, realized on Ĥ⊗H.
struct FGnsData {
  Matrix gram_raw;  // f(z_k* z_l) on the generators λ(f_j)π(e_i)
  Matrix frame;     // frame_B ⊗ frame_A
  AntilinearMap t;  // η_f(z) ↦ η_f(z*) in orthonormal coordinates
  TomitaData polar;
};

FGnsData build_f_gns(const DualPair& pair, const HeisenbergRep& rep, const GnsData& g, const Tolerance& tol);

/// Orthonormal-frame operators.
Matrix gns_pi(const DualPair& pair, const GnsData& g, const AlgebraElement& a);
Matrix gns_lambda(const DualPair& pair, const GnsData& g, const AlgebraElement& b);
Matrix gns_hat_pi(const DualPair& pair, const GnsData& g, const AlgebraElement& b);
Matrix gns_hat_lambda(const DualPair& pair, const GnsData& g, const AlgebraElement& a);

/// The Hilbert-space layer; everything is skipped (NoStar) without an involution.
CheckList verify_gns(const DualPair& pair, const FourierMaps& f, const RegularRep& r, const HeisenbergRep& rep,
                     const Tolerance& tol);

}  // namespace aqg
