#include "aqg/duality.hpp"

#include "aqg/error.hpp"

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Matrix inverse_of(const Matrix& m, const Tolerance& tol) {
  return solve(m, identity(static_cast<std::size_t>(m.rows())), tol).x;
}

}  // namespace

DualPair build_dual(const HopfData& a, const IntegralData& ai, const Tolerance& tol, bool modified) {
  const std::size_t n = a.dim();
  const auto d = idx(n);
  const Matrix& m = a.algebra.product;

  Matrix p(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      p(i, j) = (ai.phi * a.algebra.multiply(a.algebra.basis(static_cast<std::size_t>(i)),
                                             a.algebra.basis(static_cast<std::size_t>(j))))(0);
  if (numerical_rank(p, tol) < n)
    throw Error(ErrorCode::PairingFailed, "pairing matrix φ(e_i e_j) is singular");
  const Matrix p_inv = inverse_of(p, tol);

  FiniteDimAlgebra b;
  b.name = a.algebra.name + "^";
  for (const auto& l : a.algebra.labels) b.labels.push_back("F(" + l + ")");

  // (f_j f_k)(e_i) = (f_j⊗f_k)(Δ(e_i))
  b.product = p_inv * a.coproduct.transpose() * kron(p, p);

  // Δ_B(f_j) = Σ C_j(r,s) f_r⊗f_s with P C_j Pᵀ = [f_j(e_i e_k)]_{ik}, or its transpose when flipped.
  Matrix db(d * d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Matrix x(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index col = modified ? k * d + i : i * d + k;
        x(i, k) = (m.col(col).transpose() * p.col(j))(0, 0);
      }
    const Matrix c = p_inv * x * p_inv.transpose();
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s) db(r * d + s, j) = c(r, s);
  }

  // 1_B = ε
  b.unit = p_inv * a.counit.transpose();

  if (a.algebra.star) {
    // f*(x) = conj(f(S(x)*))
    const Matrix s_star = *a.algebra.star * a.antipode.conjugate();  // column i: S(e_i)*
    const Matrix values = (s_star.transpose() * p).conjugate();       // (i, j): f_j*(e_i)
    b.star = p_inv * values;
  }

  DualPair pair;
  pair.a = a;
  pair.a_integrals = ai;
  pair.b = make_hopf(b, db, tol);
  pair.pairing = p;
  pair.modified = modified;
  if (modified) {
    // φ_B(φ(·a)) = ε(a)
    pair.b_integrals = derive_integrals_with_left(pair.b, a.counit, tol);
  } else {
    pair.b_integrals = derive_integrals(pair.b, tol);
  }
  return pair;
}

Matrix dual_basis(const DualPair& pair) {
  return solve(pair.pairing, identity(pair.dim()), Tolerance{}).x;
}

Vector canonical_element(const DualPair& pair) {
  const auto d = idx(pair.dim());
  const Matrix e = dual_basis(pair);
  Vector w(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index l = 0; l < d; ++l) w(i * d + l) = e(l, i);
  return w;
}

CheckList verify_dual_pair(const DualPair& pr, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  const Matrix& p = pr.pairing;
  const HopfData& a = pr.a;
  const HopfData& b = pr.b;
  CheckList out;

  out.push_back(make_verdict("dual.nondegenerate", "<.,.> non-degenerate", numerical_rank(p, tol) == n,
                             ErrorCode::PairingFailed,
                             "condition " + std::to_string(condition_number(p))));
  out.push_back(make_check("dual.product", "<a, bb'> = <Delta(a), b⊗b'>",
                           max_abs_diff(p * b.algebra.product, a.coproduct.transpose() * kron(p, p)),
                           tol.abs_tol, ErrorCode::PairingFailed));
  const Matrix coproduct_side = kron(p, p) * b.coproduct;
  out.push_back(make_check(
      "dual.coproduct", pr.modified ? "<aa', b> = <a'⊗a, Delta_B(b)>" : "<aa', b> = <a⊗a', Delta_B(b)>",
      max_abs_diff(a.algebra.product.transpose() * p, pr.modified ? Matrix(flip(n, n) * coproduct_side)
                                                                  : coproduct_side),
      tol.abs_tol, ErrorCode::PairingFailed));
  out.push_back(make_check("dual.unit", "<1, b> = eps_B(b)",
                           max_abs_diff(a.unit.transpose() * p, b.counit), tol.abs_tol,
                           ErrorCode::PairingFailed));
  out.push_back(make_check("dual.counit", "<a, 1> = eps(a)",
                           max_abs_diff(p * b.unit, a.counit.transpose()), tol.abs_tol,
                           ErrorCode::PairingFailed));
  out.push_back(make_check("dual.antipode",
                           pr.modified ? "<S(a), b> = <a, S_B^-1(b)>" : "<S(a), b> = <a, S_B(b)>",
                           max_abs_diff(a.antipode.transpose() * p,
                                        p * (pr.modified ? b.antipode_inv : b.antipode)),
                           tol.abs_tol, ErrorCode::PairingFailed));
  if (a.algebra.star && b.algebra.star) {
    const Matrix s_star = *a.algebra.star * a.antipode.conjugate();
    out.push_back(make_check("dual.star", "<a, b*> = conj(<S(a)*, b>)",
                             max_abs_diff(p * *b.algebra.star, (s_star.transpose() * p).conjugate()),
                             tol.abs_tol, ErrorCode::PairingFailed));
  } else {
    out.push_back(make_skipped("dual.star", "<a, b*> = conj(<S(a)*, b>)", ErrorCode::NoStar,
                               "no star: involution not applicable"));
  }
  if (pr.modified) {
    out.push_back(make_check("dual.integral", "phi_B(phi(.a)) = eps(a)",
                             max_abs_diff(pr.b_integrals.phi, a.counit), tol.abs_tol,
                             ErrorCode::InvarianceFailed));
  }
  return out;
}

BidualityResult verify_biduality(const DualPair& pr, const Tolerance& tol) {
  BidualityResult r;
  const std::size_t n = pr.dim();
  const HopfData& a = pr.a;

  // Undo the flip so that dualizing (B, Δ̂) with its left integral returns A itself.
  HopfData b_plain = pr.modified ? make_hopf(pr.b.algebra, opposite_coproduct(pr.b.coproduct, n), tol) : pr.b;
  const RowVector left = pr.modified ? pr.b_integrals.psi : pr.b_integrals.phi;
  const IntegralData bi = derive_integrals_with_left(b_plain, left, tol);
  const DualPair bidual = build_dual(b_plain, bi, tol, /*modified=*/false);

  // e_i ↦ ⟨e_i, ·⟩ = Σ_k Q(k, i) g_k with g_k(f_j) = P_B(j, k).
  const Matrix q = solve(bidual.pairing, pr.pairing.transpose(), tol).x;
  const Matrix q_inv = solve(q, identity(n), tol).x;
  r.iso = q;
  const HopfData& c = bidual.b;
  r.product_residual = max_abs_diff(q_inv * c.algebra.product * kron(q, q), a.algebra.product);
  r.coproduct_residual = max_abs_diff(kron(q_inv, q_inv) * c.coproduct * q, a.coproduct);
  r.unit_residual = max_abs_diff(q_inv * c.unit, a.unit);
  r.checks.push_back(make_check("dual.bidual_product", "A^^ = A: products", r.product_residual, tol.abs_tol,
                                ErrorCode::BidualMismatch));
  r.checks.push_back(make_check("dual.bidual_coproduct", "A^^ = A: coproducts", r.coproduct_residual,
                                tol.abs_tol, ErrorCode::BidualMismatch));
  r.checks.push_back(make_check("dual.bidual_unit", "A^^ = A: units", r.unit_residual, tol.abs_tol,
                                ErrorCode::BidualMismatch));
  if (a.algebra.star && c.algebra.star) {
    r.star_residual = max_abs_diff(q_inv * *c.algebra.star * q.conjugate(), *a.algebra.star);
    r.checks.push_back(make_check("dual.bidual_star", "A^^ = A: involutions", r.star_residual, tol.abs_tol,
                                  ErrorCode::BidualMismatch));
  }
  return r;
}

}  // namespace aqg
