#include "aqg/gns.hpp"

#include <array>

#include "aqg/error.hpp"

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

double unitarity(const Matrix& x) {
  return max_abs_diff(x.adjoint() * x, identity(static_cast<std::size_t>(x.cols())));
}

Matrix legs(const Vector& v, std::size_t n) {
  Matrix m(idx(n), idx(n));
  for (Eigen::Index p = 0; p < m.rows(); ++p)
    for (Eigen::Index q = 0; q < m.cols(); ++q) m(p, q) = v(p * m.cols() + q);
  return m;
}

/// Basis of the commutant of span(gens), from vec(XM − MX) = 0.
std::vector<Matrix> commutant(const std::vector<Matrix>& gens, const Tolerance& tol) {
  const std::size_t n = static_cast<std::size_t>(gens.front().rows());
  const Matrix id = identity(n);
  Matrix sys(idx(n * n * gens.size()), idx(n * n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    sys.middleRows(idx(k * n * n), idx(n * n)) = kron(Matrix(gens[k].transpose()), id) - kron(id, gens[k]);
  const Matrix ns = null_space(sys, tol);
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) out.push_back(ns.col(c).reshaped(idx(n), idx(n)));
  return out;
}

double worst_membership(const std::vector<Matrix>& xs, const std::vector<Matrix>& span, const Tolerance& tol) {
  double worst = 0.0;
  for (const auto& x : xs) worst = std::max(worst, in_span(x, span, tol).residual);
  return worst;
}

constexpr std::array<double, 3> kSampleTimes{0.3, 0.7, 1.0};

}  // namespace

GnsSpace build_gns(const FiniteDimAlgebra& a, const RowVector& phi, const Tolerance& tol) {
  const auto pos = check_positivity(a, phi, tol);
  if (!pos) throw Error(ErrorCode::NoStar, a.name + " has no involution");
  if (!pos->positive) throw Error(ErrorCode::NotPositive, "min Gram eigenvalue " + std::to_string(pos->min_eigenvalue));
  if (!pos->faithful) throw Error(ErrorCode::NotFaithful, "Gram matrix is singular");
  GnsSpace g;
  g.gram = pos->gram;
  Eigen::LLT<Matrix> llt(0.5 * (g.gram + g.gram.adjoint()));
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::NotPositive, "Cholesky factorization failed");
  g.frame = Matrix(llt.matrixL()).adjoint();
  g.frame_inv = solve(g.frame, identity(a.dim()), tol).x;
  return g;
}

TomitaData tomita(const FiniteDimAlgebra& a, const GnsSpace& g, const Tolerance& tol) {
  if (!a.star) throw Error(ErrorCode::NoStar, a.name + " has no involution");
  const AntilinearMap t{g.frame * *a.star * g.frame_inv.conjugate()};
  const PolarDecomposition p = antilinear_polar(t, identity(g.dim()), tol);
  return {p.j, p.nabla, p.residual};
}

Matrix gns_pi(const DualPair& pr, const GnsData& g, const AlgebraElement& a) { return g.h.op(pi_a(pr, a)); }
Matrix gns_lambda(const DualPair& pr, const GnsData& g, const AlgebraElement& b) {
  return g.h.op(lambda_a(pr, b));
}
Matrix gns_hat_pi(const DualPair& pr, const GnsData& g, const AlgebraElement& b) {
  return g.h_hat.op(pi_b(pr, b));
}
Matrix gns_hat_lambda(const DualPair& pr, const GnsData& g, const AlgebraElement& a) {
  return g.h_hat.op(lambda_b(pr, a));
}

GnsData build_gns_data(const DualPair& pr, const FourierMaps& f, const RegularRep& r, const Tolerance& tol) {
  GnsData g;
  g.h = build_gns(pr.a.algebra, pr.a_integrals.phi, tol);
  g.h_hat = build_gns(pr.b.algebra, pr.b_integrals.phi, tol);
  g.t = tomita(pr.a.algebra, g.h, tol);
  g.t_hat = tomita(pr.b.algebra, g.h_hat, tol);
  g.fourier = g.h_hat.frame * f.f1 * g.h.frame_inv;
  const Matrix fa = kron(g.h.frame, g.h.frame);
  const Matrix fa_inv = kron(g.h.frame_inv, g.h.frame_inv);
  g.w = fa * r.w * fa_inv;
  g.v = fa * r.v * fa_inv;
  g.w_hat = kron(g.h_hat.frame, g.h_hat.frame) * left_regular_w(pr.b) * kron(g.h_hat.frame_inv, g.h_hat.frame_inv);
  const Matrix id = identity(pr.dim());
  g.u = kron(g.fourier, id) * g.w * kron(Matrix(g.fourier.adjoint()), id);
  return g;
}

FGnsData build_f_gns(const DualPair& pr, const HeisenbergRep& rep, const GnsData& g, const Tolerance& tol) {
  FGnsData out;
  const std::size_t m = rep.generators.size();
  out.gram_raw = f_gram(pr, rep, tol);
  out.frame = kron(g.h_hat.frame, g.h.frame);
  const Matrix frame_inv = kron(g.h_hat.frame_inv, g.h.frame_inv);
  Matrix raw(idx(m), idx(m));
  for (std::size_t k = 0; k < m; ++k)
    raw.col(idx(k)) = c_coordinates(rep, c_star(pr, rep, rep.generators[k], tol), tol);
  out.t = AntilinearMap{out.frame * raw * frame_inv.conjugate()};
  const PolarDecomposition p = antilinear_polar(out.t, identity(m), tol);
  out.polar = {p.j, p.nabla, p.residual};
  return out;
}

CheckList verify_gns(const DualPair& pr, const FourierMaps& f, const RegularRep& r, const HeisenbergRep& rep,
                     const Tolerance& tol) {
  CheckList out;
  if (!pr.a.algebra.star || !pr.b.algebra.star) {
    out.push_back(make_skipped("gns", "GNS construction for a positive integral", ErrorCode::NoStar,
                               "skipped: no star"));
    return out;
  }
  const std::size_t n = pr.dim();
  const FiniteDimAlgebra& a = pr.a.algebra;
  const FiniteDimAlgebra& b = pr.b.algebra;
  const Matrix id = identity(n);
  const GnsData g = build_gns_data(pr, f, r, tol);
  // Orthonormal-frame tolerances are tighter than the algebraic ones.
  const double unit_tol = tol.abs_tol * 0.1;
  const double op_tol = tol.membership_tol;

  std::vector<Matrix> pis, lambdas, hat_pis, hat_lambdas;
  for (std::size_t i = 0; i < n; ++i) {
    pis.push_back(gns_pi(pr, g, a.basis(i)));
    lambdas.push_back(gns_lambda(pr, g, b.basis(i)));
    hat_pis.push_back(gns_hat_pi(pr, g, b.basis(i)));
    hat_lambdas.push_back(gns_hat_lambda(pr, g, a.basis(i)));
  }

  // Adjoints: π(a*) = π(a)*, λ(b*) = λ(b)*, on H and on Ĥ.
  double adj = 0.0, adj_hat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    adj = std::max({adj, max_abs_diff(gns_pi(pr, g, a.apply_star(a.basis(i))), pis[i].adjoint()),
                    max_abs_diff(gns_lambda(pr, g, b.apply_star(b.basis(i))), lambdas[i].adjoint())});
    adj_hat = std::max({adj_hat, max_abs_diff(gns_hat_pi(pr, g, b.apply_star(b.basis(i))), hat_pis[i].adjoint()),
                        max_abs_diff(gns_hat_lambda(pr, g, a.apply_star(a.basis(i))), hat_lambdas[i].adjoint())});
  }
  out.push_back(make_check("gns.adjoints", "pi(a*) = pi(a)*, lambda(b*) = lambda(b)* on H", adj, tol.abs_tol,
                           ErrorCode::NotRepresentation));
  out.push_back(make_check("gns.hat_adjoints", "pi(b*) = pi(b)*, lambda(a*) = lambda(a)* on H^", adj_hat,
                           tol.abs_tol, ErrorCode::NotRepresentation));

  // Fourier unitary and the operators it carries.
  out.push_back(make_check("gns.fourier_unitary", "F: H -> H^ is unitary", unitarity(g.fourier), unit_tol,
                           ErrorCode::NotIsometry));
  double carry = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    carry = std::max({carry, max_abs_diff(g.fourier * pis[i] * g.fourier.adjoint(), hat_lambdas[i]),
                      max_abs_diff(g.fourier * lambdas[i] * g.fourier.adjoint(), hat_pis[i])});
  out.push_back(make_check("gns.fourier_carries", "F pi(a) F* = lambda(a), F lambda(b) F* = pi(b)", carry,
                           tol.abs_tol, ErrorCode::IntertwiningFailed));

  // W, Ŵ, U.
  out.push_back(make_check("gns.w_unitary", "W unitary on H⊗H", unitarity(g.w), unit_tol, ErrorCode::NotUnitary));
  out.push_back(make_check("gns.w_adjoint", "W*(eta(x)⊗eta(x')) = eta(x'(1)x)⊗eta(x'(2))",
                           max_abs_diff(g.w.adjoint(), g.v), tol.abs_tol, ErrorCode::FormulaMismatch));
  out.push_back(make_check("gns.w_hat_unitary", "W^ unitary on H^⊗H^", unitarity(g.w_hat), unit_tol,
                           ErrorCode::NotUnitary));
  out.push_back(make_check("gns.u_unitary", "U unitary on H^⊗H", unitarity(g.u), unit_tol, ErrorCode::NotUnitary));
  const Matrix sigma = flip(n, n);
  const Matrix ff = kron(g.fourier, g.fourier);
  out.push_back(make_check("gns.w_to_w_hat", "(F⊗F)W(F*⊗F*) = Sigma W^* Sigma",
                           max_abs_diff(ff * g.w * ff.adjoint(), sigma * g.w_hat.adjoint() * sigma), tol.abs_tol,
                           ErrorCode::FormulaMismatch));

  const Matrix fu = kron(g.h_hat.frame, g.h.frame);
  const Matrix fu_inv = kron(g.h_hat.frame_inv, g.h.frame_inv);
  const Matrix u_paired = fu * transformed_w(pr) * fu_inv;
  const auto d = idx(n);
  Matrix u_lambda(d * d, d * d), u_hat_lambda(d * d, d * d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      // η̂(y₍₂₎) ⊗ λ(y₍₁₎)η(x)
      const Matrix dy = legs(pr.b.coproduct.col(idx(j)), n);
      Vector c1 = Vector::Zero(d * d);
      for (Eigen::Index rr = 0; rr < d; ++rr)
        for (Eigen::Index s = 0; s < d; ++s)
          if (dy(rr, s) != cplx{0.0, 0.0})
            c1 += dy(rr, s) * kron(Vector(b.basis(static_cast<std::size_t>(s))),
                                   Vector(lambda_a(pr, b.basis(static_cast<std::size_t>(rr))) * a.basis(i)));
      // λ(S⁻¹(x₍₁₎))η̂(y) ⊗ η(x₍₂₎)
      const Matrix dx = legs(pr.a.coproduct.col(idx(i)), n);
      Vector c2 = Vector::Zero(d * d);
      for (Eigen::Index p = 0; p < d; ++p)
        for (Eigen::Index q = 0; q < d; ++q)
          if (dx(p, q) != cplx{0.0, 0.0})
            c2 += dx(p, q) * kron(Vector(lambda_b(pr, pr.a.antipode_inv.col(p)) * b.basis(j)),
                                  Vector(a.basis(static_cast<std::size_t>(q))));
      u_lambda.col(idx(j) * d + idx(i)) = c1;
      u_hat_lambda.col(idx(j) * d + idx(i)) = c2;
    }
  u_lambda = fu * u_lambda * fu_inv;
  u_hat_lambda = fu * u_hat_lambda * fu_inv;
  out.push_back(make_check("gns.u_formula", "U(eta^(y)⊗eta(x)) = <S^-1(x(1)),y(1)> eta^(y(2))⊗eta(x(2))",
                           max_abs_diff(g.u, u_paired), tol.abs_tol, ErrorCode::FormulaMismatch));
  out.push_back(make_check("gns.u_forms", "U = eta^(y(2))⊗lambda(y(1))eta(x) = lambda(S^-1(x(1)))eta^(y)⊗eta(x(2))",
                           std::max({max_abs_diff(u_paired, u_lambda), max_abs_diff(u_lambda, u_hat_lambda),
                                     max_abs_diff(u_paired, u_hat_lambda)}),
                           tol.abs_tol, ErrorCode::FormulaMismatch));

  // Tomita data on H and Ĥ.
  auto tomita_checks = [&](const std::string& side, const TomitaData& t, const std::vector<Matrix>& m_gens,
                           const Matrix* sigma_map, const FiniteDimAlgebra& alg, const GnsSpace& space) {
    out.push_back(make_check("gns." + side + "polar", "eta(x*) = J nabla^1/2 eta(x)", t.residual, tol.abs_tol,
                             ErrorCode::ModularMismatch));
    out.push_back(make_check("gns." + side + "j_involution", "J^2 = 1, J antiunitary",
                             std::max(max_abs_diff(t.j.compose_linear(t.j), identity(alg.dim())), unitarity(t.j.matrix)),
                             unit_tol, ErrorCode::ModularMismatch));
    out.push_back(make_check("gns." + side + "nabla_identity", "nabla = 1 (tracial integral)",
                             max_abs_diff(t.nabla, identity(alg.dim())), op_tol, ErrorCode::ModularMismatch,
                             "observed on the shipped presets"));
    std::vector<Matrix> jmj;
    for (const auto& x : m_gens) jmj.push_back(t.j.conjugate_linear(x));
    out.push_back(make_check("gns." + side + "commutant", "JMJ in M'", worst_membership(jmj, commutant(m_gens, tol), tol),
                             tol.membership_tol, ErrorCode::CommutantFailed));
    std::vector<Matrix> moved;
    for (double s : kSampleTimes) {
      const Matrix up = matrix_power(t.nabla, cplx(0.0, s), tol);
      const Matrix down = matrix_power(t.nabla, cplx(0.0, -s), tol);
      for (const auto& x : m_gens) moved.push_back(up * x * down);
    }
    out.push_back(make_check("gns." + side + "modular_invariance", "nabla^it M nabla^-it = M",
                             worst_membership(moved, m_gens, tol), tol.membership_tol, ErrorCode::ModularMismatch,
                             "t in {0.3, 0.7, 1.0}"));
    if (sigma_map) {
      const Matrix nabla_inv = solve(t.nabla, identity(alg.dim()), tol).x;
      double worst = 0.0;
      for (std::size_t i = 0; i < alg.dim(); ++i)
        worst = std::max(worst, max_abs_diff(t.nabla * m_gens[i] * nabla_inv,
                                             space.op(alg.left_mult(sigma_map->col(idx(i))))));
      out.push_back(make_check("gns." + side + "sigma", "nabla pi(a) nabla^-1 = pi(sigma(a))", worst, op_tol,
                               ErrorCode::ModularMismatch));
    }
  };
  tomita_checks("", g.t, pis, &pr.a_integrals.sigma, a, g.h);
  tomita_checks("hat_", g.t_hat, hat_pis, &pr.b_integrals.sigma, b, g.h_hat);

  // The f-GNS space.
  const FGnsData fg = build_f_gns(pr, rep, g, tol);
  out.push_back(make_check("gns.f_isometry", "f((yx)*(yx)) = phi(y*y)phi(x*x): eta_f(yx) = eta^(y)⊗eta(x)",
                           max_abs_diff(fg.gram_raw, kron(g.h_hat.gram, g.h.gram)), tol.membership_tol,
                           ErrorCode::RepresentationMismatch));
  out.push_back(make_check("gns.f_polar", "T_f = J_f nabla_f^1/2", fg.polar.residual, tol.abs_tol,
                           ErrorCode::ModularProductFailed));
  const Matrix jj = kron(g.t_hat.j.matrix, g.t.j.matrix);
  out.push_back(make_check("gns.j_f_left", "J_f = (J^⊗J)U", max_abs_diff(fg.polar.j.matrix, jj * g.u.conjugate()),
                           op_tol, ErrorCode::ModularProductFailed));
  out.push_back(make_check("gns.j_f_right", "J_f = U*(J^⊗J)", max_abs_diff(fg.polar.j.matrix, g.u.adjoint() * jj),
                           op_tol, ErrorCode::ModularProductFailed));
  out.push_back(make_check("gns.nabla_f", "nabla_f = nabla^⊗nabla",
                           max_abs_diff(fg.polar.nabla, kron(g.t_hat.nabla, g.t.nabla)), op_tol,
                           ErrorCode::ModularProductFailed));
  out.push_back(make_check("gns.u_commutes_nabla_f", "U nabla_f = nabla_f U",
                           max_abs_diff(g.u * fg.polar.nabla, fg.polar.nabla * g.u), op_tol,
                           ErrorCode::ModularProductFailed));

  // π_f in three forms.
  double pif = 0.0, pif_b = 0.0;
  const Matrix frame_inv_f = kron(g.h_hat.frame_inv, g.h.frame_inv);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix legs_form = Matrix::Zero(d * d, d * d);
    const Matrix da = legs(pr.a.coproduct.col(idx(i)), n);
    for (Eigen::Index p = 0; p < d; ++p)
      for (Eigen::Index q = 0; q < d; ++q)
        if (da(p, q) != cplx{0.0, 0.0}) legs_form += da(p, q) * kron(hat_lambdas[idx(p)], pis[idx(q)]);
    const Matrix via_u = g.u.adjoint() * kron(id, pis[i]) * g.u;
    Matrix via_c(d * d, d * d), via_c_b(d * d, d * d);
    const Matrix pa = pi_a(pr, a.basis(i));
    const Matrix lb = lambda_a(pr, b.basis(i));
    for (std::size_t k = 0; k < rep.generators.size(); ++k) {
      via_c.col(idx(k)) = c_coordinates(rep, pa * rep.generators[k], tol);
      via_c_b.col(idx(k)) = c_coordinates(rep, lb * rep.generators[k], tol);
    }
    via_c = fg.frame * via_c * frame_inv_f;
    via_c_b = fg.frame * via_c_b * frame_inv_f;
    pif = std::max({pif, max_abs_diff(legs_form, via_u), max_abs_diff(legs_form, via_c)});
    pif_b = std::max(pif_b, max_abs_diff(via_c_b, kron(hat_pis[i], id)));
  }
  out.push_back(make_check("gns.pi_f_a", "pi_f(a) = lambda(a(1))⊗pi(a(2)) = U*(1⊗pi(a))U", pif, op_tol,
                           ErrorCode::RepresentationMismatch));
  out.push_back(make_check("gns.pi_f_b", "pi_f(b) = pi(b)⊗1", pif_b, op_tol, ErrorCode::RepresentationMismatch));

  // Invariance of N = λ(A) on Ĥ and N̂ = λ(B) on H.
  std::vector<Matrix> moved_n, moved_n_hat, refl_n, refl_n_hat;
  for (double s : kSampleTimes) {
    const Matrix up_hat = matrix_power(g.t_hat.nabla, cplx(0.0, s), tol);
    const Matrix down_hat = matrix_power(g.t_hat.nabla, cplx(0.0, -s), tol);
    const Matrix up = matrix_power(g.t.nabla, cplx(0.0, s), tol);
    const Matrix down = matrix_power(g.t.nabla, cplx(0.0, -s), tol);
    for (std::size_t i = 0; i < n; ++i) {
      moved_n.push_back(up_hat * hat_lambdas[i] * down_hat);
      moved_n_hat.push_back(up * lambdas[i] * down);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    refl_n.push_back(g.t_hat.j.conjugate_linear(hat_lambdas[i].adjoint()));
    refl_n_hat.push_back(g.t.j.conjugate_linear(lambdas[i].adjoint()));
  }
  out.push_back(make_check("gns.n_modular_invariance", "nabla^^it N nabla^^-it = N",
                           worst_membership(moved_n, hat_lambdas, tol), tol.membership_tol, ErrorCode::MembershipFailed,
                           "t in {0.3, 0.7, 1.0}"));
  out.push_back(make_check("gns.n_hat_modular_invariance", "nabla^it N^ nabla^-it = N^",
                           worst_membership(moved_n_hat, lambdas, tol), tol.membership_tol,
                           ErrorCode::MembershipFailed, "t in {0.3, 0.7, 1.0}"));
  out.push_back(make_check("gns.n_reflection", "J^ lambda(a)* J^ in N", worst_membership(refl_n, hat_lambdas, tol),
                           tol.membership_tol, ErrorCode::MembershipFailed));
  out.push_back(make_check("gns.n_hat_reflection", "J lambda(b)* J in N^", worst_membership(refl_n_hat, lambdas, tol),
                           tol.membership_tol, ErrorCode::MembershipFailed));

  // λ(S(a)) = R τ_{-i/2}(λ(a)) with R(x) = Ĵx*Ĵ, and the mirror statement on H.
  const Matrix nh_half = matrix_power(g.t_hat.nabla, 0.5, tol);
  const Matrix nh_neg_half = matrix_power(g.t_hat.nabla, -0.5, tol);
  const Matrix n_half = matrix_power(g.t.nabla, 0.5, tol);
  const Matrix n_neg_half = matrix_power(g.t.nabla, -0.5, tol);
  double anti = 0.0, anti_hat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix rhs = g.t_hat.j.conjugate_linear((nh_half * hat_lambdas[i] * nh_neg_half).adjoint());
    anti = std::max(anti, max_abs_diff(gns_hat_lambda(pr, g, pr.a.antipode.col(idx(i))), rhs));
    const Matrix rhs_hat = g.t.j.conjugate_linear((n_half * lambdas[i] * n_neg_half).adjoint());
    anti_hat = std::max(anti_hat, max_abs_diff(gns_lambda(pr, g, pr.b.antipode.col(idx(i))), rhs_hat));
  }
  out.push_back(make_check("gns.antipode_modular", "lambda(S(a)) = J^ (nabla^^1/2 lambda(a) nabla^^-1/2)* J^", anti,
                           op_tol, ErrorCode::AntipodeModularFailed));
  out.push_back(make_check("gns.antipode_modular_hat", "lambda(S(b)) = J (nabla^1/2 lambda(b) nabla^-1/2)* J",
                           anti_hat, op_tol, ErrorCode::AntipodeModularFailed));
  return out;
}

}  // namespace aqg
