#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace aqg {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

/// Global tolerance policy threaded through every module.
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  double membership_tol = 1e-8;
};

/// Conjugate-linear map v -> matrix * conj(v).
struct AntilinearMap {
  Matrix matrix;

  Vector apply(const Vector& v) const { return matrix * v.conjugate(); }
  /// (this ∘ other) is linear when both are antilinear.
  Matrix compose_linear(const AntilinearMap& other) const {
    return matrix * other.matrix.conjugate();
  }
  /// this ∘ X ∘ this for a linear X, which is again linear.
  Matrix conjugate_linear(const Matrix& x) const {
    return matrix * x.conjugate() * matrix.conjugate();
  }
};

struct SolveResult {
  Matrix x;
  double residual = 0.0;   // max |A x - b| entry
  double condition = 0.0;  // sigma_max / sigma_min of A
};

/// Least-squares solve of A x = b. With `require_exact`, a residual above
/// abs_tol·(1 + |b|) throws SingularSystem.
SolveResult solve(const Matrix& a, const Matrix& b, const Tolerance& tol,
                  bool require_exact = true);

struct PolarDecomposition {
  AntilinearMap j;
  Matrix nabla;
  double residual = 0.0;  // |T - J nabla^{1/2}| in the orthonormal frame
};

/// T = J ∇^{1/2} with adjoints taken in the inner product <u, v> = v^H gram u.
/// J and ∇ are returned in the same coordinates as T.
PolarDecomposition antilinear_polar(const AntilinearMap& t, const Matrix& gram,
                                    const Tolerance& tol);

struct SpanMembership {
  bool member = false;
  double residual = 0.0;  // |x - P x| / |x|  (0 for x = 0)
};

SpanMembership in_span(const Matrix& x, std::span<const Matrix> basis, const Tolerance& tol);

/// H^z by spectral calculus for Hermitian positive definite H.
Matrix matrix_power(const Matrix& h, cplx exponent, const Tolerance& tol);

// --- small helpers used throughout -----------------------------------------

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
RowVector kron(const RowVector& a, const RowVector& b);
Matrix identity(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
/// Permutation C^p ⊗ C^q -> C^q ⊗ C^p.
Matrix flip(std::size_t p, std::size_t q);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Matrix& a);
double condition_number(const Matrix& a);
/// Rank with the relative threshold membership_tol·sigma_max.
std::size_t numerical_rank(const Matrix& a, const Tolerance& tol);
/// Orthonormal columns spanning the (numerical) null space.
Matrix null_space(const Matrix& a, const Tolerance& tol);
/// Columns are vec(basis[k]).
Matrix stack_columns(std::span<const Matrix> mats);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_finite(const Matrix& a);
/// Adjoint of a linear map with respect to <u, v> = v^H gram u.
Matrix gram_adjoint(const Matrix& x, const Matrix& gram);

}  // namespace aqg
