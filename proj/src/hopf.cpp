#include "aqg/hopf.hpp"

#include <string>

#include "aqg/error.hpp"

namespace aqg {

namespace {

std::string cond_note(double cond, std::size_t rank, std::size_t full) {
  return "rank " + std::to_string(rank) + "/" + std::to_string(full) + ", condition " +
         std::to_string(cond);
}

}  // namespace

Matrix tensor_square_product(const FiniteDimAlgebra& a) {
  return tensor_product_map(a.product, a.dim(), a.product, a.dim());
}

Matrix opposite_coproduct(const Matrix& coproduct, std::size_t n) { return flip(n, n) * coproduct; }

TMaps build_t_maps(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol) {
  const std::size_t n = a.dim();
  if (coproduct.rows() != static_cast<Eigen::Index>(n * n) ||
      coproduct.cols() != static_cast<Eigen::Index>(n))
    throw Error(ErrorCode::DimensionMismatch, "coproduct must be n² × n");
  const Matrix id = identity(n);
  TMaps t;
  // Δ(a)(1⊗a') = (ι⊗m)(Δ(a)⊗a');  (a⊗1)Δ(a') = (m⊗ι)(a⊗Δ(a')).
  t.t1 = kron(id, a.product) * kron(coproduct, id);
  t.t2 = kron(a.product, id) * kron(id, coproduct);
  t.cond_t1 = condition_number(t.t1);
  t.cond_t2 = condition_number(t.t2);
  t.rank_t1 = numerical_rank(t.t1, tol);
  t.rank_t2 = numerical_rank(t.t2, tol);
  t.t1_bijective = t.rank_t1 == n * n;
  t.t2_bijective = t.rank_t2 == n * n;
  if (!t.t1_bijective)
    throw Error(ErrorCode::NotBijectiveT, "T1 " + cond_note(t.cond_t1, t.rank_t1, n * n));
  if (!t.t2_bijective)
    throw Error(ErrorCode::NotBijectiveT, "T2 " + cond_note(t.cond_t2, t.rank_t2, n * n));
  return t;
}

RowVector derive_counit(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  // Σ_j ε_j Δ[(j,k), i] = δ_{ki}: unknowns ε_j, one equation per (k, i).
  Matrix sys(n * n, n);
  Vector rhs(n * n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) sys(k * n + i, j) = coproduct(j * n + k, i);
      rhs(k * n + i) = (k == i) ? 1.0 : 0.0;
    }
  const std::size_t rank = numerical_rank(sys, tol);
  if (rank != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NoCounit, "solution space not unique (rank " + std::to_string(rank) + ")");
  SolveResult sol = solve(sys, rhs, tol, false);
  if (!(sol.residual <= tol.abs_tol))
    throw Error(ErrorCode::NoCounit, "(ε⊗ι)Δ = ι inconsistent, residual " + std::to_string(sol.residual));
  RowVector eps = sol.x.col(0).transpose();
  const double hom = max_abs_diff(eps * a.product, kron(eps, eps));
  if (hom > tol.abs_tol)
    throw Error(ErrorCode::NotHomomorphism, "ε(ab) ≠ ε(a)ε(b), residual " + std::to_string(hom));
  return eps;
}

Matrix derive_antipode(const FiniteDimAlgebra& a, const Matrix& coproduct, const RowVector& counit,
                       const Tolerance& tol) {
  const std::size_t n = a.dim();
  const Matrix id = identity(n);
  const AlgebraElement u = a.unit_element(tol);
  const TMaps t = build_t_maps(a, coproduct, tol);
  // S(a) = (ε⊗ι) T1⁻¹ (a⊗1)
  const Matrix rhs = kron(id, Matrix(u));
  const Matrix t1_inv_on_a1 = t.t1.fullPivLu().solve(rhs);
  const Matrix s = kron(Matrix(counit), id) * t1_inv_on_a1;

  const Matrix unit_counit = Matrix(u) * counit;
  const double left = max_abs_diff(a.product * kron(s, id) * coproduct, unit_counit);
  const double right = max_abs_diff(a.product * kron(id, s) * coproduct, unit_counit);
  if (left > tol.abs_tol || right > tol.abs_tol)
    throw Error(ErrorCode::AntipodeLawFailed, "m(S⊗ι)Δ residual " + std::to_string(left) +
                                                  ", m(ι⊗S)Δ residual " + std::to_string(right));
  return s;
}

HopfData make_hopf(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol) {
  HopfData h;
  h.algebra = a;
  h.coproduct = coproduct;
  h.unit = a.unit_element(tol);
  h.t_maps = build_t_maps(a, coproduct, tol);
  h.counit = derive_counit(a, coproduct, tol);
  h.antipode = derive_antipode(a, coproduct, h.counit, tol);
  Eigen::FullPivLU<Matrix> lu(h.antipode);
  if (!lu.isInvertible()) throw Error(ErrorCode::NotInvertible, "antipode is not bijective");
  h.antipode_inv = lu.inverse();
  if (!h.algebra.unit) h.algebra.unit = h.unit;
  return h;
}

namespace {

CheckList coproduct_checks(const FiniteDimAlgebra& a, const Matrix& d, const AlgebraElement* unit,
                           const Tolerance& tol, const std::string& p) {
  CheckList out;
  const std::size_t n = a.dim();
  const Matrix id = identity(n);
  out.push_back(make_check(p + ".coproduct_homomorphism", "Delta(ab) = Delta(a)Delta(b)",
                           max_abs_diff(d * a.product, tensor_square_product(a) * kron(d, d)),
                           tol.abs_tol, ErrorCode::CoproductFailed));
  if (a.star) {
    const Matrix& s = *a.star;
    out.push_back(make_check(p + ".coproduct_star", "Delta(a*) = Delta(a)*",
                             max_abs_diff(d * s, kron(s, s) * d.conjugate()), tol.abs_tol,
                             ErrorCode::CoproductFailed));
  }
  out.push_back(make_check(p + ".coassociative", "(Delta⊗id)Delta = (id⊗Delta)Delta",
                           max_abs_diff(kron(d, id) * d, kron(id, d) * d), tol.abs_tol,
                           ErrorCode::CoproductFailed));
  if (unit)
    out.push_back(make_check(p + ".coproduct_unital", "Delta(1) = 1⊗1",
                             max_abs_diff(d * *unit, kron(*unit, *unit)), tol.abs_tol,
                             ErrorCode::CoproductFailed));
  return out;
}

}  // namespace

CheckList verify_hopf_data(const HopfData& h, const Tolerance& tol, const std::string& p) {
  const FiniteDimAlgebra& a = h.algebra;
  const Matrix& d = h.coproduct;
  const Matrix& s = h.antipode;
  const RowVector& eps = h.counit;
  const std::size_t n = a.dim();
  const Matrix id = identity(n);
  const Matrix u = h.unit;

  CheckList out = coproduct_checks(a, d, &h.unit, tol, p);
  out.push_back(make_verdict(p + ".t1_bijective", "T1(a⊗a') = Delta(a)(1⊗a') is bijective",
                             h.t_maps.t1_bijective, ErrorCode::NotBijectiveT,
                             cond_note(h.t_maps.cond_t1, h.t_maps.rank_t1, n * n)));
  out.push_back(make_verdict(p + ".t2_bijective", "T2(a⊗a') = (a⊗1)Delta(a') is bijective",
                             h.t_maps.t2_bijective, ErrorCode::NotBijectiveT,
                             cond_note(h.t_maps.cond_t2, h.t_maps.rank_t2, n * n)));
  out.push_back(make_check(p + ".counit_left", "(eps⊗id)Delta(a) = a",
                           max_abs_diff(kron(Matrix(eps), id) * d, id), tol.abs_tol,
                           ErrorCode::NoCounit));
  out.push_back(make_check(p + ".counit_right", "(id⊗eps)Delta(a) = a",
                           max_abs_diff(kron(id, Matrix(eps)) * d, id), tol.abs_tol,
                           ErrorCode::NoCounit));
  out.push_back(make_check(p + ".counit_homomorphism", "eps(ab) = eps(a)eps(b)",
                           max_abs_diff(eps * a.product, kron(eps, eps)), tol.abs_tol,
                           ErrorCode::NotHomomorphism));
  if (a.star)
    out.push_back(make_check(p + ".counit_star", "eps(a*) = conj(eps(a))",
                             max_abs_diff(eps * *a.star, eps.conjugate()), tol.abs_tol,
                             ErrorCode::NotHomomorphism));
  const Matrix unit_counit = u * eps;
  out.push_back(make_check(p + ".antipode_left", "m(S⊗id)Delta(a) = eps(a)1",
                           max_abs_diff(a.product * kron(s, id) * d, unit_counit), tol.abs_tol,
                           ErrorCode::AntipodeLawFailed));
  out.push_back(make_check(p + ".antipode_right", "m(id⊗S)Delta(a) = eps(a)1",
                           max_abs_diff(a.product * kron(id, s) * d, unit_counit), tol.abs_tol,
                           ErrorCode::AntipodeLawFailed));
  out.push_back(make_check(p + ".antipode_antihomomorphism", "S(ab) = S(b)S(a)",
                           max_abs_diff(s * a.product, a.product * kron(s, s) * flip(n, n)),
                           tol.abs_tol, ErrorCode::AntipodeLawFailed));
  out.push_back(make_check(p + ".counit_antipode", "eps(S(a)) = eps(a)",
                           max_abs_diff(eps * s, eps), tol.abs_tol, ErrorCode::AntipodeLawFailed));
  if (a.star) {
    const Matrix& st = *a.star;
    out.push_back(make_check(p + ".antipode_star", "S(S(a)*)* = a",
                             max_abs_diff(st * s.conjugate() * st.conjugate() * s, id),
                             tol.abs_tol, ErrorCode::AntipodeLawFailed));
  }
  const Matrix t1_inv = kron(id, a.product) * kron(kron(id, s) * d, id);
  const Matrix t2_inv = kron(a.product, id) * kron(id, kron(s, id) * d);
  out.push_back(make_check(p + ".t1_inverse_formula", "T1^-1(a⊗a') = (id⊗S)(Delta(a))(1⊗a')",
                           max_abs_diff(h.t_maps.t1 * t1_inv, identity(n * n)), tol.abs_tol,
                           ErrorCode::AntipodeLawFailed));
  out.push_back(make_check(p + ".t2_inverse_formula", "T2^-1(a⊗a') = (a⊗1)(S⊗id)(Delta(a'))",
                           max_abs_diff(h.t_maps.t2 * t2_inv, identity(n * n)), tol.abs_tol,
                           ErrorCode::AntipodeLawFailed));
  return out;
}

CheckList verify_hopf(const FiniteDimAlgebra& a, const Matrix& coproduct, const Tolerance& tol,
                      const DeclaredHopfData& declared) {
  CheckList out;
  HopfData h;
  try {
    h = make_hopf(a, coproduct, tol);
  } catch (const Error& e) {
    // Report what can still be evaluated, plus the construction failure.
    std::optional<AlgebraElement> u = a.unit ? a.unit : find_unit(a, tol);
    try {
      out = coproduct_checks(a, coproduct, u ? &*u : nullptr, tol, "hopf");
    } catch (const Error&) {
    }
    out.push_back(make_verdict("hopf.construction", "counit and antipode from T1^-1", false,
                               e.code(), e.what()));
    return out;
  }
  out = verify_hopf_data(h, tol, "hopf");
  if (declared.antipode)
    out.push_back(make_check("hopf.declared_antipode", "declared S equals derived S",
                             max_abs_diff(*declared.antipode, h.antipode), tol.abs_tol,
                             ErrorCode::AntipodeLawFailed));
  if (declared.counit)
    out.push_back(make_check("hopf.declared_counit", "declared eps equals derived eps",
                             max_abs_diff(*declared.counit, h.counit), tol.abs_tol,
                             ErrorCode::NoCounit));
  return out;
}

}  // namespace aqg
