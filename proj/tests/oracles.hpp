#pragma once

// Reference computations written directly from definitions, without going
// through the library's derivations. Only the shared matrix types are reused.

#include <random>
#include <vector>

#include "aqg/numerics.hpp"

namespace oracle {

using aqg::cplx;
using aqg::Matrix;
using aqg::RowVector;
using aqg::Vector;

using Table = std::vector<std::vector<std::size_t>>;

Table cyclic_table(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order, (pq)(i) = p(q(i)).
Table s3_table();
std::size_t inverse_in(const Table& t, std::size_t p);

/// Structure constants of K(G) and C[G] written from the table.
struct Tensors {
  Matrix mult;    // n × n², mult(k, i*n + j)
  Matrix comult;  // n² × n
  Matrix star;    // column i = e_i*
  Vector unit;
  Matrix antipode;
  RowVector counit;
};
Tensors function_algebra(const Table& t);
Tensors group_algebra(const Table& t);
/// Sweedler's algebra from g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x;
/// basis g^a x^b at index a + 2b. No star.
Tensors sweedler();

Vector product(const Tensors& h, const Vector& a, const Vector& b);
Matrix left_mult(const Matrix& mult, const Vector& a);

/// Null space by full-pivot LU.
Matrix kernel(const Matrix& a);
/// Nonzero solutions of (ι⊗φ)Δ(a) = φ(a)1 (columns are φ as vectors).
Matrix left_invariant_functionals(const Tensors& h);
/// Nonzero solutions of (ψ⊗ι)Δ(a) = ψ(a)1.
Matrix right_invariant_functionals(const Tensors& h);
/// Scales so the first largest-modulus coordinate is 1.
RowVector max_modulus_normalized(const Vector& v);

Vector random_vector(std::mt19937_64& rng, std::size_t n);
/// Standard basis vector.
Vector e(std::size_t n, std::size_t i);

}  // namespace oracle
