#include "aqg/regular.hpp"

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Matrix legs(const Vector& v, std::size_t n) {
  Matrix m(idx(n), idx(n));
  for (Eigen::Index p = 0; p < m.rows(); ++p)
    for (Eigen::Index q = 0; q < m.cols(); ++q) m(p, q) = v(p * m.cols() + q);
  return m;
}

/// Column (i, j) = Σ Δ(e_j)_{pq} (first(e_p) e_i) ⊗ e_q.
Matrix regular_map(const HopfData& h, const Matrix& first) {
  const std::size_t n = h.dim();
  const auto d = idx(n);
  const FiniteDimAlgebra& a = h.algebra;
  Matrix out = Matrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector col = Vector::Zero(d * d);
      for (Eigen::Index p = 0; p < d; ++p)
        for (Eigen::Index q = 0; q < d; ++q) {
          const cplx c = h.coproduct(p * d + q, idx(j));
          if (c == cplx{0.0, 0.0}) continue;
          col += c * kron(Vector(a.multiply(first.col(p), a.basis(i))), Vector(a.basis(static_cast<std::size_t>(q))));
        }
      out.col(idx(i) * d + idx(j)) = col;
    }
  return out;
}

/// y⊗x ↦ ⟨first(x₍₁₎), y₍₁₎⟩ y₍₂₎⊗x₍₂₎ where ⟨first(e_p), f_r⟩ = x(p, r).
Matrix paired_map(const DualPair& pr, const Matrix& x) {
  const std::size_t n = pr.dim();
  const auto d = idx(n);
  Matrix out(d * d, d * d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix k = legs(pr.a.coproduct.col(idx(i)), n).transpose() * x * legs(pr.b.coproduct.col(idx(j)), n);
      Vector col(d * d);
      for (Eigen::Index s = 0; s < d; ++s)
        for (Eigen::Index q = 0; q < d; ++q) col(s * d + q) = k(q, s);
      out.col(idx(j) * d + idx(i)) = col;
    }
  return out;
}

double relative_frobenius(const Matrix& x, const Matrix& y) {
  return (x - y).norm() / std::max(1.0, y.norm());
}

}  // namespace

Matrix left_regular_v(const HopfData& h) { return regular_map(h, identity(h.dim())); }
Matrix left_regular_w(const HopfData& h) { return regular_map(h, h.antipode_inv); }

RegularRep build_regular(const DualPair& pr, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  RegularRep r;
  r.v = left_regular_v(pr.a);
  r.w = left_regular_w(pr.a);
  r.w_elem = canonical_element(pr);
  const Matrix prod = tensor_product_map(pr.a.algebra.product, n, pr.b.algebra.product, n);
  const Matrix left = prod * kron(Matrix(r.w_elem), identity(n * n));
  r.w_inv_elem = solve(left, kron(pr.a.unit, pr.b.unit), tol).x;
  return r;
}

std::pair<Matrix, Matrix> pentagon_sides(const Matrix& w, std::size_t n) {
  const Matrix id = identity(n);
  const Matrix swap23 = kron(id, flip(n, n));
  const Matrix w12 = kron(w, id);
  const Matrix w23 = kron(id, w);
  const Matrix w13 = swap23 * w12 * swap23;
  return {w12 * w13 * w23, w23 * w12};
}

Matrix transformed_w(const DualPair& pr) {
  return paired_map(pr, pr.a.antipode_inv.transpose() * pr.pairing);
}

Matrix transformed_w_inverse(const DualPair& pr) { return paired_map(pr, pr.pairing); }

TraceFormula trace_formula(const DualPair& pr, const Tolerance& tol) {
  TraceFormula t;
  const HopfData& h = pr.a;
  const std::size_t n = h.dim();
  t.applicable = max_abs_diff(h.antipode * h.antipode, identity(n)) <= tol.abs_tol;
  if (!t.applicable) return t;
  Vector traces(idx(n));
  for (std::size_t i = 0; i < n; ++i) traces(idx(i)) = h.algebra.left_mult(h.algebra.basis(i)).trace();
  Eigen::Index best = 0;
  traces.cwiseAbs().maxCoeff(&best);
  t.k = pr.a_integrals.phi(best) / traces(best);
  t.residual = max_abs(Matrix(pr.a_integrals.phi.transpose() - t.k * traces));
  return t;
}

CheckList verify_regular(const DualPair& pr, const RegularRep& r, const FourierMaps& f, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  const auto d = idx(n);
  const Matrix& p = pr.pairing;
  CheckList out;

  out.push_back(make_check("regular.w_inverse_of_v", "W = V^-1",
                           std::max(max_abs_diff(r.v * r.w, identity(n * n)), max_abs_diff(r.w * r.v, identity(n * n))),
                           tol.abs_tol, ErrorCode::InverseMismatch));
  out.push_back(make_check("regular.w_closed_form", "V^-1(x⊗x') = S^-1(x'(1))x ⊗ x'(2)",
                           max_abs_diff(solve(r.v, identity(n * n), tol).x, r.w), tol.abs_tol,
                           ErrorCode::InverseMismatch));
  const auto [lhs, rhs] = pentagon_sides(r.w, n);
  out.push_back(make_check("regular.pentagon", "W12 W13 W23 = W23 W12", relative_frobenius(lhs, rhs), tol.abs_tol,
                           ErrorCode::PentagonFailed, "relative Frobenius norm"));

  Matrix action = Matrix::Zero(d * d, d * d);
  Matrix w_t(d, d), w_inv_t(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index l = 0; l < d; ++l) {
      w_t(i, l) = r.w_elem(i * d + l);
      w_inv_t(i, l) = r.w_inv_elem(i * d + l);
      if (w_t(i, l) != cplx{0.0, 0.0})
        action += w_t(i, l) * kron(pi_a(pr, pr.a.algebra.basis(static_cast<std::size_t>(i))),
                                   lambda_a(pr, pr.b.algebra.basis(static_cast<std::size_t>(l))));
    }
  out.push_back(make_check("regular.w_element_action", "(pi⊗lambda)(sum e_i⊗e^i) = W", max_abs_diff(action, r.w),
                           tol.abs_tol, ErrorCode::ActionMismatch));
  out.push_back(make_check("regular.w_pairing", "<W, b⊗a> = <a, b>",
                           max_abs_diff(p.transpose() * w_t * p.transpose(), p.transpose()), tol.abs_tol,
                           ErrorCode::ActionMismatch));
  out.push_back(make_check("regular.w_inverse_pairing", "<W^-1, b⊗a> = <S(a), b>",
                           max_abs_diff(p.transpose() * w_inv_t * p.transpose(), p.transpose() * pr.a.antipode),
                           tol.abs_tol, ErrorCode::ActionMismatch));

  // (Δ⊗ι)W against W13 W23 = Σ w_il w_km e_i⊗e_k⊗f_l f_m
  const Vector coproduct_side = kron(pr.a.coproduct, identity(n)) * r.w_elem;
  Vector product_side = Vector::Zero(d * d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index k = 0; k < d; ++k) {
      Vector leg3 = Vector::Zero(d);
      for (Eigen::Index l = 0; l < d; ++l)
        for (Eigen::Index m = 0; m < d; ++m) leg3 += w_t(i, l) * w_t(k, m) * pr.b.algebra.product.col(l * d + m);
      product_side.segment((i * d + k) * d, d) = leg3;
    }
  out.push_back(make_check("regular.coproduct_of_w", "(Delta⊗id)W = W13 W23",
                           max_abs_diff(coproduct_side, product_side), tol.abs_tol, ErrorCode::IdentityFailed));

  double conj = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    Matrix delta_op = Matrix::Zero(d * d, d * d);
    const Vector da = pr.a.coproduct.col(idx(a));
    for (Eigen::Index s = 0; s < d; ++s)
      for (Eigen::Index t = 0; t < d; ++t)
        if (da(s * d + t) != cplx{0.0, 0.0})
          delta_op += da(s * d + t) * kron(pi_a(pr, pr.a.algebra.basis(static_cast<std::size_t>(s))),
                                           pi_a(pr, pr.a.algebra.basis(static_cast<std::size_t>(t))));
    conj = std::max(conj, max_abs_diff(r.v * kron(identity(n), pi_a(pr, pr.a.algebra.basis(a))) * r.w, delta_op));
  }
  out.push_back(make_check("regular.coproduct_by_w", "Delta(a) = W^-1(1⊗a)W", conj, tol.abs_tol,
                           ErrorCode::IdentityFailed));
  out.push_back(make_check("regular.w_inverse_left_antipode", "W^-1 = (S⊗id)W",
                           max_abs_diff(kron(pr.a.antipode, identity(n)) * r.w_elem, r.w_inv_elem), tol.abs_tol,
                           ErrorCode::IdentityFailed));
  out.push_back(make_check("regular.w_inverse_right_antipode", "W^-1 = (id⊗S^-1)W",
                           max_abs_diff(kron(identity(n), pr.b.antipode_inv) * r.w_elem, r.w_inv_elem),
                           tol.abs_tol, ErrorCode::IdentityFailed));

  const Matrix t = transformed_w(pr);
  const Matrix t_inv = transformed_w_inverse(pr);
  out.push_back(make_check("regular.transformed_w", "(F⊗id)W(F^-1⊗id)(y⊗x) = <S^-1(x(1)),y(1)> y(2)⊗x(2)",
                           max_abs_diff(kron(f.f1, identity(n)) * r.w * kron(f.f1_inv, identity(n)), t),
                           tol.abs_tol, ErrorCode::TransformMismatch));
  out.push_back(make_check("regular.transformed_w_inverse", "inverse: y⊗x -> <x(1),y(1)> y(2)⊗x(2)",
                           std::max(max_abs_diff(t * t_inv, identity(n * n)), max_abs_diff(t_inv * t, identity(n * n))),
                           tol.abs_tol, ErrorCode::TransformMismatch));

  const TraceFormula tr = trace_formula(pr, tol);
  if (tr.applicable) {
    out.push_back(make_check("regular.trace_formula", "phi(a) = k tr(pi(a))", tr.residual, tol.abs_tol,
                             ErrorCode::TraceFormulaFailed,
                             "k = " + std::to_string(tr.k.real()) +
                                 (tr.k.imag() != 0.0 ? " + " + std::to_string(tr.k.imag()) + "i" : "")));
  } else {
    out.push_back(make_skipped("regular.trace_formula", "phi(a) = k tr(pi(a))", ErrorCode::SkippedS2,
                               "S^2 is not the identity"));
  }
  return out;
}

}  // namespace aqg
