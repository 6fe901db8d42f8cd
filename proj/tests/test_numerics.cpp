#include <random>

#include "aqg/numerics.hpp"
#include "aqg/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aqg;

TEST_CASE("solve recovers a known solution and rejects inconsistent systems") {
  std::mt19937_64 rng(3);
  Matrix a(3, 3);
  for (int j = 0; j < 3; ++j) a.col(j) = oracle::random_vector(rng, 3);
  const Vector x = oracle::random_vector(rng, 3);
  const SolveResult r = solve(a, a * x, Tolerance{});
  CHECK(max_abs_diff(r.x, x) < 1e-12);

  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  Vector b(2);
  b << 1.0, 1.0;
  CHECK_THROWS_AS(solve(sing, b, Tolerance{}), Error);
}

TEST_CASE("kron and flip follow the (i, j) -> i*q + j layout") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const Matrix k = kron(a, b);
  CHECK(k(0, 1) == cplx(1.0));
  CHECK(k(2, 1) == cplx(3.0));
  CHECK(k(3, 0) == cplx(3.0));
  CHECK(k(3, 2) == cplx(4.0));
  const Vector u = oracle::e(2, 0), v = oracle::e(3, 2);
  CHECK(max_abs_diff(flip(2, 3) * kron(u, v), kron(v, u)) == 0.0);
}

TEST_CASE("antilinear polar decomposition of a random map") {
  std::mt19937_64 rng(5);
  const std::size_t n = 4;
  Matrix t(n, n), g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    t.col(j) = oracle::random_vector(rng, n);
    g.col(j) = oracle::random_vector(rng, n);
  }
  const Matrix gram = g * g.adjoint() + Matrix::Identity(n, n);
  const PolarDecomposition p = antilinear_polar(AntilinearMap{t}, gram, Tolerance{});
  CHECK(p.residual < 1e-10);
  // T = J ∇^{1/2} as antilinear maps; the root is taken in an orthonormal frame.
  const Matrix frame = Eigen::LLT<Matrix>(gram).matrixU();
  const Matrix frame_inv = frame.inverse();
  const Matrix nabla_o = frame * p.nabla * frame_inv;
  const Matrix root = frame_inv * matrix_power((nabla_o + nabla_o.adjoint()) / 2.0, 0.5, Tolerance{}) * frame;
  CHECK(max_abs_diff(p.j.matrix * root.conjugate(), t) < 1e-9);
  // ∇ is self-adjoint and positive for the gram inner product.
  CHECK(max_abs_diff(gram_adjoint(p.nabla, gram), p.nabla) < 1e-9);
  // J preserves the inner product up to conjugation: <Ju, Jv> = conj<u, v>.
  const Vector u = oracle::random_vector(rng, n), v = oracle::random_vector(rng, n);
  const cplx lhs = (p.j.apply(v).adjoint() * gram * p.j.apply(u))(0);
  const cplx rhs = (v.adjoint() * gram * u)(0);
  CHECK(std::abs(lhs - std::conj(rhs)) < 1e-9);
}

TEST_CASE("matrix powers compose") {
  Matrix h(2, 2);
  h << 2.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 3.0;
  const Tolerance tol;
  CHECK(max_abs_diff(matrix_power(h, 0.3, tol) * matrix_power(h, 0.7, tol), h) < 1e-12);
  CHECK(max_abs_diff(matrix_power(h, 1.0, tol) * matrix_power(h, -1.0, tol), identity(2)) < 1e-12);
}

TEST_CASE("span membership and null space") {
  std::vector<Matrix> basis{identity(2), Matrix::Ones(2, 2)};
  const Matrix inside = 2.0 * basis[0] - basis[1];
  Matrix outside = Matrix::Zero(2, 2);
  outside(0, 1) = 1.0;
  const Tolerance tol;
  CHECK(in_span(inside, basis, tol).member);
  CHECK_FALSE(in_span(outside, basis, tol).member);

  Matrix a(2, 3);
  a << 1, 1, 0, 0, 0, 1;
  const Matrix k = null_space(a, tol);
  REQUIRE(k.cols() == 1);
  CHECK(max_abs(a * k) < 1e-12);
  CHECK(numerical_rank(a, tol) == 2);
}
