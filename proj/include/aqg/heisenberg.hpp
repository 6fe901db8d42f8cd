#pragma once

#include <cstdint>
#include <vector>

#include "aqg/fourier.hpp"

namespace aqg {

/// The Heisenberg algebra C = span{λ(b)π(a)} as operators on A, with the
/// functional f(λ(b)π(a)) = φ_B(b)φ(a).
struct HeisenbergRep {
  std::vector<Matrix> generators;  // index j*n + i: λ(f_j)π(e_i)
  Matrix span;                     // column k = vec(generators[k])
  std::size_t span_dim = 0;
  Vector weights;                  // f on the generators
  RowVector f_row;                 // f(X) = f_row · vec(X)

  cplx f(const Matrix& x) const { return (f_row * x.reshaped())(0); }
};

HeisenbergRep build_heisenberg(const DualPair& pair, const Tolerance& tol);

/// Σ ⟨a₍₁₎, b₍₁₎⟩ λ(b₍₂₎) π(a₍₂₎), expanded through both coproducts.
Matrix heisenberg_expansion(const DualPair& pair, const AlgebraElement& a, const AlgebraElement& b);

/// Coordinates of an operator in the generator basis.
Vector c_coordinates(const HeisenbergRep& rep, const Matrix& x, const Tolerance& tol);

/// The involution of C: (λ(b)π(a))* = π(a*)λ(b*), extended conjugate-linearly.
Matrix c_star(const DualPair& pair, const HeisenbergRep& rep, const Matrix& x, const Tolerance& tol);

/// gram(k, l) = f(z_k* z_l) over the generators z.
Matrix f_gram(const DualPair& pair, const HeisenbergRep& rep, const Tolerance& tol);

CheckList verify_heisenberg(const DualPair& pair, const HeisenbergRep& rep, const Tolerance& tol,
                            std::uint64_t seed = 2);

}  // namespace aqg
