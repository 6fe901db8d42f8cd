#include "aqg/algebra.hpp"

#include <array>
#include <string>

#include "aqg/error.hpp"

namespace aqg {

namespace {

void check_dim(const FiniteDimAlgebra& a, const AlgebraElement& x) {
  if (static_cast<std::size_t>(x.size()) != a.dim())
    throw Error(ErrorCode::DimensionMismatch, a.name + ": element of length " +
                                                  std::to_string(x.size()) + ", dimension " +
                                                  std::to_string(a.dim()));
}

std::string label(const FiniteDimAlgebra& a, Eigen::Index i) {
  return a.labels.at(static_cast<std::size_t>(i));
}

}  // namespace

AlgebraElement FiniteDimAlgebra::multiply(const AlgebraElement& a,
                                          const AlgebraElement& b) const {
  check_dim(*this, a);
  check_dim(*this, b);
  return product * kron(a, b);
}

Matrix FiniteDimAlgebra::left_mult(const AlgebraElement& a) const {
  check_dim(*this, a);
  return product * kron(Matrix(a), identity(dim()));
}

Matrix FiniteDimAlgebra::right_mult(const AlgebraElement& a) const {
  check_dim(*this, a);
  return product * kron(identity(dim()), Matrix(a));
}

AlgebraElement FiniteDimAlgebra::apply_star(const AlgebraElement& a) const {
  if (!star) throw Error(ErrorCode::NoStar, name + " has no involution");
  check_dim(*this, a);
  return *star * a.conjugate();
}

AlgebraElement FiniteDimAlgebra::unit_element(const Tolerance& tol) const {
  if (unit) return *unit;
  auto u = find_unit(*this, tol);
  if (!u) throw Error(ErrorCode::NoUnit, name + " has no unit");
  return *u;
}

std::optional<AlgebraElement> find_unit(const FiniteDimAlgebra& a, const Tolerance& tol) {
  const std::size_t n = a.dim();
  // Σ u_i L(e_i) = I and Σ u_i R(e_i) = I, stacked.
  std::vector<Matrix> lefts, rights;
  for (std::size_t i = 0; i < n; ++i) {
    lefts.push_back(a.left_mult(a.basis(i)));
    rights.push_back(a.right_mult(a.basis(i)));
  }
  const Matrix l = stack_columns(lefts);
  const Matrix r = stack_columns(rights);
  Matrix sys(l.rows() + r.rows(), l.cols());
  sys << l, r;
  Vector rhs(sys.rows());
  const Matrix id = identity(n);
  rhs << id.reshaped(), id.reshaped();
  auto sol = solve(sys, rhs, tol, false);
  if (!(sol.residual <= tol.abs_tol)) return std::nullopt;
  return AlgebraElement(sol.x.col(0));
}

AlgebraReport validate(const FiniteDimAlgebra& a, const Tolerance& tol) {
  AlgebraReport rep;
  const std::size_t n = a.dim();
  const Matrix id = identity(n);
  if (a.product.rows() != static_cast<Eigen::Index>(n) ||
      a.product.cols() != static_cast<Eigen::Index>(n * n))
    throw Error(ErrorCode::DimensionMismatch, a.name + ": product tensor has wrong shape");

  // (e_i e_j) e_k vs e_i (e_j e_k)
  const Matrix lhs = a.product * kron(a.product, id);
  const Matrix rhs = a.product * kron(id, a.product);
  rep.associativity_residual = max_abs_diff(lhs, rhs);
  {
    std::string where;
    if (rep.associativity_residual > tol.abs_tol) {
      Eigen::Index r, c;
      (lhs - rhs).cwiseAbs().maxCoeff(&r, &c);
      const auto nn = static_cast<Eigen::Index>(n);
      where = "worst triple (" + label(a, c / (nn * nn)) + ", " + label(a, (c / nn) % nn) + ", " +
              label(a, c % nn) + ")";
    }
    rep.checks.push_back(make_check("algebra.associative", "(ab)c = a(bc)",
                                    rep.associativity_residual, tol.abs_tol,
                                    ErrorCode::NonAssociative, where));
  }

  std::vector<Matrix> lefts, rights;
  for (std::size_t i = 0; i < n; ++i) {
    lefts.push_back(a.left_mult(a.basis(i)));
    rights.push_back(a.right_mult(a.basis(i)));
  }
  const std::size_t lrank = numerical_rank(stack_columns(lefts), tol);
  const std::size_t rrank = numerical_rank(stack_columns(rights), tol);
  rep.left_nondegenerate = lrank == n;
  rep.right_nondegenerate = rrank == n;
  rep.checks.push_back(make_verdict(
      "algebra.nondegenerate", "ab = 0 for all b implies a = 0 (and on the right)",
      rep.left_nondegenerate && rep.right_nondegenerate, ErrorCode::DegenerateProduct,
      "left rank " + std::to_string(lrank) + ", right rank " + std::to_string(rrank) + " of " +
          std::to_string(n)));

  if (a.star) {
    const Matrix& s = *a.star;
    // (e_i e_j)* = e_j* e_i*  ->  S conj(m) = m (S ⊗ S) flip
    const Matrix star_of_product = s * a.product.conjugate();
    const Matrix product_of_stars = a.product * kron(s, s) * flip(n, n);
    const double anti = max_abs_diff(star_of_product, product_of_stars);
    rep.star_antimultiplicative_residual = anti;
    std::string where;
    if (anti > tol.abs_tol) {
      Eigen::Index r, c;
      (star_of_product - product_of_stars).cwiseAbs().maxCoeff(&r, &c);
      const auto nn = static_cast<Eigen::Index>(n);
      where = "worst pair (" + label(a, c / nn) + ", " + label(a, c % nn) + ")";
    }
    rep.checks.push_back(make_check("algebra.star_antimultiplicative", "(ab)* = b* a*", anti,
                                    tol.abs_tol, ErrorCode::BadInvolution, where));
    const double inv = max_abs_diff(s * s.conjugate(), id);
    rep.star_involutive_residual = inv;
    rep.checks.push_back(make_check("algebra.star_involutive", "(a*)* = a", inv, tol.abs_tol,
                                    ErrorCode::BadInvolution));
  }

  std::optional<AlgebraElement> u = a.unit;
  if (!u) u = find_unit(a, tol);
  if (u) {
    const double res = std::max(max_abs_diff(a.left_mult(*u), id), max_abs_diff(a.right_mult(*u), id));
    rep.unit_residual = res;
    rep.checks.push_back(make_check("algebra.unit", "1 a = a 1 = a", res, tol.abs_tol,
                                    ErrorCode::NoUnit, a.unit ? "declared" : "solved"));
  } else {
    rep.checks.push_back(
        make_verdict("algebra.unit", "1 a = a 1 = a", false, ErrorCode::NoUnit, "no unit exists"));
  }
  return rep;
}

void require_valid(const FiniteDimAlgebra& a, const Tolerance& tol) { require(validate(a, tol).checks); }

Matrix tensor_product_map(const Matrix& prod_a, std::size_t dim_a, const Matrix& prod_b,
                          std::size_t dim_b) {
  // (a⊗b)(a'⊗b') = aa' ⊗ bb': reorder A B A B -> A A B B, then m_A ⊗ m_B.
  const Matrix reorder = kron(kron(identity(dim_a), flip(dim_b, dim_a)), identity(dim_b));
  return kron(prod_a, prod_b) * reorder;
}

FiniteDimAlgebra tensor_algebra(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
  FiniteDimAlgebra out;
  out.name = a.name + "⊗" + b.name;
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) out.labels.push_back(la + "⊗" + lb);
  out.product = tensor_product_map(a.product, a.dim(), b.product, b.dim());
  if (a.star && b.star) out.star = kron(*a.star, *b.star);
  if (a.unit && b.unit) out.unit = kron(*a.unit, *b.unit);
  return out;
}

}  // namespace aqg
