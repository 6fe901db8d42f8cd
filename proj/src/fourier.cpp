#include "aqg/fourier.hpp"

#include <functional>
#include <random>

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// c with y ≈ c x (least squares) and the largest deviation from it.
std::pair<cplx, double> ratio(const Matrix& x, const Matrix& y) {
  const cplx den = x.cwiseAbs2().sum();
  const cplx c = den == cplx{0.0, 0.0} ? cplx{0.0, 0.0} : (x.conjugate().cwiseProduct(y)).sum() / den;
  return {c, max_abs(y - c * x)};
}

std::string complex_text(cplx c) {
  return "(" + std::to_string(c.real()) + ", " + std::to_string(c.imag()) + ")";
}

double homomorphism_residual(std::size_t n, const FiniteDimAlgebra& alg,
                             const std::function<Matrix(const AlgebraElement&)>& rep) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, max_abs_diff(rep(alg.multiply(alg.basis(i), alg.basis(j))),
                                           rep(alg.basis(i)) * rep(alg.basis(j))));
  return worst;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vector v(idx(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = nd(rng);
    const double im = nd(rng);
    v(i) = {re, im};
  }
  return v;
}

}  // namespace

Matrix pi_a(const DualPair& pair, const AlgebraElement& a) { return pair.a.algebra.left_mult(a); }

Matrix lambda_a(const DualPair& pair, const AlgebraElement& b) {
  const Vector w = pair.a.antipode_inv.transpose() * pair.pairing * b;  // w_p = ⟨S⁻¹(e_p), b⟩
  return kron(Matrix(w.transpose()), identity(pair.dim())) * pair.a.coproduct;
}

Matrix lambda_b(const DualPair& pair, const AlgebraElement& a) {
  const RowVector w = a.transpose() * pair.pairing;  // w_r = ⟨a, f_r⟩
  return kron(Matrix(w), identity(pair.dim())) * pair.b.coproduct;
}

Matrix pi_b(const DualPair& pair, const AlgebraElement& b) { return pair.b.algebra.left_mult(b); }

FourierMaps build_fourier(const DualPair& pr, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  const Matrix& p = pr.pairing;
  const FiniteDimAlgebra& a = pr.a.algebra;
  const FiniteDimAlgebra& b = pr.b.algebra;
  FourierMaps f;

  // φ(e_i e_j) = Σ_l P(i,l) F1(l,j)
  Matrix values(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      values(idx(i), idx(j)) = (pr.a_integrals.phi * a.multiply(a.basis(i), a.basis(j)))(0);
  f.f1 = solve(p, values, tol).x;
  f.f1_inv = solve(f.f1, identity(n), tol).x;

  const Vector w = canonical_element(pr);
  const Matrix prod_ab = tensor_product_map(a.product, n, b.product, n);
  const Matrix phi_leg = kron(Matrix(pr.a_integrals.phi), identity(n));
  f.f1_w_form = Matrix(idx(n), idx(n));
  for (std::size_t j = 0; j < n; ++j)
    f.f1_w_form.col(idx(j)) = phi_leg * prod_ab * kron(w, kron(a.basis(j), pr.b.unit));

  // ψ(S(e_i) e_j) = Σ_l P(i,l) F2(l,j)
  Matrix values2(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      values2(idx(i), idx(j)) =
          (pr.a_integrals.psi * a.multiply(pr.a.antipode.col(idx(i)), a.basis(j)))(0);
  f.f2 = solve(p, values2, tol).x;
  f.f2_inv = solve(f.f2, identity(n), tol).x;
  std::tie(f.f2_scalar, f.f2_scalar_residual) =
      ratio(f.f1 * pr.a_integrals.sigma * pr.a.antipode_inv, f.f2);

  // Closed inverse formulas, read back into A through ⟨a, f_l⟩ = g_l.
  Matrix closed(idx(n), idx(n)), closed2(idx(n), idx(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector g(idx(n)), g2(idx(n));
    for (std::size_t l = 0; l < n; ++l) {
      g(idx(l)) = (pr.b_integrals.phi * b.multiply(pr.b.antipode_inv.col(idx(l)), b.basis(j)))(0);
      g2(idx(l)) = (pr.b_integrals.psi * b.multiply(b.basis(l), b.basis(j)))(0);
    }
    closed.col(idx(j)) = solve(p.transpose(), g, tol).x;
    closed2.col(idx(j)) = solve(p.transpose(), g2, tol).x;
  }
  std::tie(f.inverse_constant, f.inverse_constant_spread) = ratio(f.f1_inv, closed);
  std::tie(f.f2_inverse_constant, f.f2_inverse_constant_spread) = ratio(f.f2_inv, closed2);
  return f;
}

double plancherel_residual(const DualPair& pr, const FourierMaps& f, const AlgebraElement& x) {
  const FiniteDimAlgebra& a = pr.a.algebra;
  const FiniteDimAlgebra& b = pr.b.algebra;
  const Vector y = f.f1 * x;
  const cplx lhs = (pr.b_integrals.phi * b.multiply(b.apply_star(y), y))(0);
  const cplx rhs = (pr.a_integrals.phi * a.multiply(a.apply_star(x), x))(0);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

CheckList verify_fourier(const DualPair& pr, const FourierMaps& f, const Tolerance& tol, std::uint64_t seed,
                         int samples) {
  const std::size_t n = pr.dim();
  const FiniteDimAlgebra& a = pr.a.algebra;
  const FiniteDimAlgebra& b = pr.b.algebra;
  CheckList out;

  out.push_back(make_check("fourier.inverse", "F^-1 F = id", max_abs_diff(f.f1_inv * f.f1, identity(n)),
                           tol.abs_tol, ErrorCode::NormalizationInconsistent,
                           "condition " + std::to_string(condition_number(f.f1))));
  out.push_back(make_check("fourier.w_form", "F(a) = phi(.a) = (phi⊗id)(W(a⊗1))",
                           max_abs_diff(f.f1, f.f1_w_form), tol.abs_tol, ErrorCode::TransformMismatch));
  out.push_back(make_check("fourier.inverse_formula", "phi_B(S_B^-1(.)b) = c F^-1(b)", f.inverse_constant_spread,
                           tol.abs_tol * (1.0 + std::abs(f.inverse_constant)),
                           ErrorCode::NormalizationInconsistent, "c = " + complex_text(f.inverse_constant)));
  out.push_back(make_check("fourier.f2_relation", "F2 = c F1 sigma S^-1", f.f2_scalar_residual,
                           tol.abs_tol * (1.0 + std::abs(f.f2_scalar)), ErrorCode::NormalizationInconsistent,
                           "c = " + complex_text(f.f2_scalar)));
  out.push_back(make_check("fourier.f2_inverse_formula", "psi_B(.b) = c F2^-1(b)",
                           f.f2_inverse_constant_spread, tol.abs_tol * (1.0 + std::abs(f.f2_inverse_constant)),
                           ErrorCode::NormalizationInconsistent, "c = " + complex_text(f.f2_inverse_constant)));

  auto pa = [&](const AlgebraElement& x) { return pi_a(pr, x); };
  auto la = [&](const AlgebraElement& y) { return lambda_a(pr, y); };
  auto lb = [&](const AlgebraElement& x) { return lambda_b(pr, x); };
  auto pb = [&](const AlgebraElement& y) { return pi_b(pr, y); };
  out.push_back(make_check("fourier.pi_a_representation", "pi(aa') = pi(a)pi(a')",
                           homomorphism_residual(n, a, pa), tol.abs_tol, ErrorCode::NotRepresentation));
  out.push_back(make_check("fourier.lambda_a_representation", "lambda(bb') = lambda(b)lambda(b')",
                           homomorphism_residual(n, b, la), tol.abs_tol, ErrorCode::NotRepresentation));
  out.push_back(make_check("fourier.lambda_b_representation", "lambda(aa') = lambda(a)lambda(a') on B",
                           homomorphism_residual(n, a, lb), tol.abs_tol, ErrorCode::NotRepresentation));
  out.push_back(make_check("fourier.pi_b_representation", "pi(bb') = pi(b)pi(b') on B",
                           homomorphism_residual(n, b, pb), tol.abs_tol, ErrorCode::NotRepresentation));
  out.push_back(make_check("fourier.lambda_unit", "lambda(1_B) = id",
                           max_abs_diff(la(pr.b.unit), identity(n)), tol.abs_tol, ErrorCode::NotRepresentation));

  double inter_pi = 0.0, inter_lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    inter_pi = std::max(inter_pi, max_abs_diff(f.f1 * pa(a.basis(i)), lb(a.basis(i)) * f.f1));
    inter_lambda = std::max(inter_lambda, max_abs_diff(f.f1 * la(b.basis(i)), pb(b.basis(i)) * f.f1));
  }
  out.push_back(make_check("fourier.intertwining_pi", "F(pi(a)x) = lambda(a)F(x)", inter_pi, tol.abs_tol,
                           ErrorCode::IntertwiningFailed));
  out.push_back(make_check("fourier.intertwining_lambda", "F(lambda(b)x) = pi(b)F(x)", inter_lambda,
                           tol.abs_tol, ErrorCode::IntertwiningFailed));

  if (a.star && b.star) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, plancherel_residual(pr, f, a.basis(i)));
    for (int s = 0; s < samples; ++s) worst = std::max(worst, plancherel_residual(pr, f, random_vector(rng, n)));
    out.push_back(make_check("fourier.plancherel", "phi_B(F(a)*F(a)) = phi(a*a)", worst, tol.rel_tol,
                             ErrorCode::PlancherelFailed,
                             std::to_string(samples) + " random vectors and the basis"));
  } else {
    out.push_back(make_skipped("fourier.plancherel", "phi_B(F(a)*F(a)) = phi(a*a)", ErrorCode::NoStar,
                               "no star: Plancherel not applicable"));
  }
  return out;
}

}  // namespace aqg
