#include "aqg/integrals.hpp"

#include <cmath>
#include <string>

#include "aqg/error.hpp"

namespace aqg {

namespace {

// Rows (j, i), columns k:  Σ_k Δ[(j,k), i] x_k − u_j x_i  (left invariance)
Matrix left_invariance_system(const HopfData& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Matrix sys = Matrix::Zero(n * n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) sys(j * n + i, k) += h.coproduct(j * n + k, i);
      sys(j * n + i, i) -= h.unit(j);
    }
  return sys;
}

// Rows (k, i), columns j:  Σ_j Δ[(j,k), i] x_j − u_k x_i  (right invariance)
Matrix right_invariance_system(const HopfData& h) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Matrix sys = Matrix::Zero(n * n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) sys(k * n + i, j) += h.coproduct(j * n + k, i);
      sys(k * n + i, i) -= h.unit(k);
    }
  return sys;
}

RowVector unique_ray(const Matrix& sys, const Tolerance& tol, const char* which) {
  const Matrix ns = null_space(sys, tol);
  if (ns.cols() == 0) throw Error(ErrorCode::NoIntegral, std::string(which) + ": no invariant functional");
  if (ns.cols() > 1)
    throw Error(ErrorCode::NonUniqueIntegral,
                std::string(which) + ": solution space of dimension " + std::to_string(ns.cols()));
  return canonical_normalization(ns.col(0).transpose(), tol);
}

// Proportionality y = c x; returns c and the residual max|y − c x|.
std::pair<cplx, double> proportionality(const Matrix& x, const Matrix& y) {
  const cplx denom = x.reshaped().squaredNorm();
  if (std::abs(denom) == 0.0) return {cplx{0.0, 0.0}, max_abs(y)};
  const cplx c = x.reshaped().dot(y.reshaped()) / denom;
  return {c, max_abs(y - c * x)};
}

}  // namespace

RowVector canonical_normalization(const RowVector& functional, const Tolerance& tol) {
  const double top = functional.cwiseAbs().maxCoeff();
  if (top == 0.0) throw Error(ErrorCode::NoIntegral, "zero functional");
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < functional.size(); ++i)
    if (std::abs(functional(i)) >= top * (1.0 - tol.membership_tol)) {
      pick = i;
      break;
    }
  RowVector out = functional / functional(pick);
  // Exact zeros and ones where round-off left dust.
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::abs(out(i).imag()) < tol.abs_tol * 1e-3) out(i).imag(0.0);
    if (std::abs(out(i).real()) < tol.abs_tol * 1e-3) out(i).real(0.0);
  }
  return out;
}

std::size_t left_invariant_dimension(const HopfData& h, const Tolerance& tol) {
  return static_cast<std::size_t>(null_space(left_invariance_system(h), tol).cols());
}

std::size_t right_invariant_dimension(const HopfData& h, const Tolerance& tol) {
  return static_cast<std::size_t>(null_space(right_invariance_system(h), tol).cols());
}

RowVector solve_left_integral(const HopfData& h, const Tolerance& tol) {
  return unique_ray(left_invariance_system(h), tol, "left integral");
}

RowVector solve_right_integral(const HopfData& h, const Tolerance& tol) {
  return unique_ray(right_invariance_system(h), tol, "right integral");
}

std::pair<AlgebraElement, AlgebraElement> derive_modular_element(const HopfData& h,
                                                                 const RowVector& phi,
                                                                 const Tolerance& tol) {
  const std::size_t n = h.dim();
  // Column i of (φ⊗ι)Δ equals φ(e_i) δ.
  const Matrix lhs = kron(Matrix(phi), identity(n)) * h.coproduct;
  Eigen::Index best = 0;
  phi.cwiseAbs().maxCoeff(&best);
  const AlgebraElement delta = lhs.col(best) / phi(best);
  const double res = max_abs_diff(lhs, Matrix(delta) * phi);
  if (res > tol.abs_tol)
    throw Error(ErrorCode::InconsistentDelta, "(φ⊗ι)Δ(a) = φ(a)δ fails, residual " + std::to_string(res));
  const Matrix ld = h.algebra.left_mult(delta);
  Eigen::FullPivLU<Matrix> lu(ld);
  if (!lu.isInvertible()) throw Error(ErrorCode::NotInvertible, "δ is not invertible");
  const AlgebraElement delta_inv = lu.solve(Matrix(h.unit)).col(0);
  return {delta, delta_inv};
}

Matrix modular_automorphism(const FiniteDimAlgebra& a, const RowVector& omega, const Tolerance& tol) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  // form(i, j) = ω(e_i e_j); ω(e_i e_j) = ω(e_j σ(e_i)) gives form^T = form σ.
  const RowVector values = omega * a.product;
  Matrix form(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) form(i, j) = values(i * n + j);
  if (numerical_rank(form, tol) != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NotFaithful, "(a, b) -> ω(ab) is degenerate");
  const Matrix sigma = form.fullPivLu().solve(Matrix(form.transpose()));
  const double hom = max_abs_diff(sigma * a.product, a.product * kron(sigma, sigma));
  if (hom > tol.abs_tol * (1.0 + max_abs(sigma) * max_abs(sigma)))
    throw Error(ErrorCode::NotAutomorphism, "σ(ab) ≠ σ(a)σ(b), residual " + std::to_string(hom));
  return sigma;
}

cplx derive_nu(const HopfData& h, const RowVector& phi, const Tolerance& tol) {
  const RowVector lhs = phi * h.antipode * h.antipode;
  auto [nu, res] = proportionality(Matrix(phi), Matrix(lhs));
  if (res > tol.abs_tol)
    throw Error(ErrorCode::InconsistentNu, "φ∘S² is not a multiple of φ, residual " + std::to_string(res));
  return nu;
}

std::optional<PositivityResult> check_positivity(const FiniteDimAlgebra& a, const RowVector& omega,
                                                 const Tolerance& tol) {
  if (!a.star) return std::nullopt;
  const auto n = static_cast<Eigen::Index>(a.dim());
  PositivityResult r;
  r.gram = Matrix(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const AlgebraElement ej_star = a.star->col(j);
    for (Eigen::Index i = 0; i < n; ++i)
      r.gram(j, i) = (omega * a.multiply(ej_star, a.basis(static_cast<std::size_t>(i))))(0);
  }
  const double herm = max_abs_diff(r.gram, r.gram.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (r.gram + r.gram.adjoint()));
  r.min_eigenvalue = es.eigenvalues()(0);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  r.positive = herm <= tol.abs_tol * scale && r.min_eigenvalue >= -tol.abs_tol * scale;
  r.faithful = r.positive && r.min_eigenvalue > tol.membership_tol * scale;
  return r;
}

IntegralData derive_integrals_with_left(const HopfData& h, const RowVector& phi,
                                        const Tolerance& tol) {
  IntegralData d;
  d.phi = phi;
  d.left_solution_dim = left_invariant_dimension(h, tol);
  d.right_solution_dim = right_invariant_dimension(h, tol);
  d.psi = solve_right_integral(h, tol);
  std::tie(d.delta, d.delta_inv) = derive_modular_element(h, d.phi, tol);
  d.sigma = modular_automorphism(h.algebra, d.phi, tol);
  d.sigma_prime = modular_automorphism(h.algebra, d.psi, tol);
  d.nu = derive_nu(h, d.phi, tol);
  d.phi_positivity = check_positivity(h.algebra, d.phi, tol);
  d.psi_positivity = check_positivity(h.algebra, d.psi, tol);
  d.psi_over_phi_s = proportionality(Matrix(d.phi * h.antipode), Matrix(d.psi)).first;
  return d;
}

IntegralData derive_integrals(const HopfData& h, const Tolerance& tol) {
  return derive_integrals_with_left(h, solve_left_integral(h, tol), tol);
}

CheckList verify_integrals(const HopfData& h, const IntegralData& d, const Tolerance& tol,
                           const std::string& p) {
  CheckList out;
  const std::size_t n = h.dim();
  const Matrix id = identity(n);
  const Matrix u = h.unit;
  const FiniteDimAlgebra& a = h.algebra;

  out.push_back(make_check(p + ".left_invariant", "(id⊗phi)Delta(a) = phi(a)1",
                           max_abs_diff(kron(id, Matrix(d.phi)) * h.coproduct, u * d.phi),
                           tol.abs_tol, ErrorCode::InvarianceFailed));
  out.push_back(make_check(p + ".right_invariant", "(psi⊗id)Delta(a) = psi(a)1",
                           max_abs_diff(kron(Matrix(d.psi), id) * h.coproduct, u * d.psi),
                           tol.abs_tol, ErrorCode::InvarianceFailed));
  out.push_back(make_verdict(p + ".left_unique", "left integral unique up to a scalar",
                             d.left_solution_dim == 1, ErrorCode::NonUniqueIntegral,
                             "solution dimension " + std::to_string(d.left_solution_dim)));
  out.push_back(make_verdict(p + ".right_unique", "right integral unique up to a scalar",
                             d.right_solution_dim == 1, ErrorCode::NonUniqueIntegral,
                             "solution dimension " + std::to_string(d.right_solution_dim)));
  out.push_back(make_check(p + ".modular_element_left", "(phi⊗id)Delta(a) = phi(a)delta",
                           max_abs_diff(kron(Matrix(d.phi), id) * h.coproduct, Matrix(d.delta) * d.phi),
                           tol.abs_tol, ErrorCode::InconsistentDelta));
  out.push_back(make_check(p + ".modular_element_right", "(id⊗psi)Delta(a) = psi(a)delta^-1",
                           max_abs_diff(kron(id, Matrix(d.psi)) * h.coproduct,
                                        Matrix(d.delta_inv) * d.psi),
                           tol.abs_tol, ErrorCode::InconsistentDelta));
  out.push_back(make_check(p + ".modular_element_inverse", "delta delta^-1 = 1",
                           max_abs_diff(a.multiply(d.delta, d.delta_inv), u), tol.abs_tol,
                           ErrorCode::NotInvertible));

  // φ(ab) = φ(bσ(a)) over all basis pairs; ab at column (i,j), bσ(a) = m(ι⊗σ)flip.
  const Matrix swap = flip(n, n);
  out.push_back(make_check(p + ".modular_automorphism", "phi(ab) = phi(b sigma(a))",
                           max_abs_diff(d.phi * a.product, d.phi * a.product * kron(id, d.sigma) * swap),
                           tol.abs_tol, ErrorCode::NotAutomorphism));
  out.push_back(make_check(p + ".modular_automorphism_prime", "psi(ab) = psi(b sigma'(a))",
                           max_abs_diff(d.psi * a.product,
                                        d.psi * a.product * kron(id, d.sigma_prime) * swap),
                           tol.abs_tol, ErrorCode::NotAutomorphism));
  out.push_back(make_check(p + ".sigma_multiplicative", "sigma(ab) = sigma(a)sigma(b)",
                           std::max(max_abs_diff(d.sigma * a.product, a.product * kron(d.sigma, d.sigma)),
                                    max_abs_diff(d.sigma_prime * a.product,
                                                 a.product * kron(d.sigma_prime, d.sigma_prime))),
                           tol.abs_tol, ErrorCode::NotAutomorphism));
  out.push_back(make_check(p + ".nu", "phi(S^2(a)) = nu phi(a)",
                           max_abs_diff(d.phi * h.antipode * h.antipode, d.nu * d.phi), tol.abs_tol,
                           ErrorCode::InconsistentNu));
  {
    const Matrix values = d.phi * a.product;  // φ(e_i e_j)
    Matrix form(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        form(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            values(0, static_cast<Eigen::Index>(i * n + j));
    const std::size_t rank = numerical_rank(form, tol);
    out.push_back(make_verdict(p + ".faithful", "a -> phi(. a) is injective", rank == n,
                               ErrorCode::NotFaithful, "rank " + std::to_string(rank)));
  }
  {
    const RowVector phi_s = d.phi * h.antipode;
    out.push_back(make_check(p + ".psi_vs_phi_s", "psi proportional to phi∘S",
                             max_abs_diff(Matrix(d.psi), d.psi_over_phi_s * Matrix(phi_s)),
                             tol.abs_tol, ErrorCode::InvarianceFailed));
  }
  if (d.phi_positivity) {
    out.push_back(make_verdict(p + ".phi_positive", "phi(a*a) >= 0", d.phi_positivity->positive,
                               ErrorCode::NotPositive,
                               "min Gram eigenvalue " + std::to_string(d.phi_positivity->min_eigenvalue)));
    out.push_back(make_verdict(p + ".psi_positive", "psi(a*a) >= 0", d.psi_positivity->positive,
                               ErrorCode::NotPositive,
                               "min Gram eigenvalue " + std::to_string(d.psi_positivity->min_eigenvalue)));
    if (d.phi_positivity->positive)
      out.push_back(make_check(p + ".nu_modulus", "|nu| = 1", std::abs(std::abs(d.nu) - 1.0),
                               tol.abs_tol, ErrorCode::InconsistentNu));
  } else {
    out.push_back(make_skipped(p + ".phi_positive", "phi(a*a) >= 0", ErrorCode::NoStar,
                               "no star: positivity not applicable"));
  }
  return out;
}

}  // namespace aqg
