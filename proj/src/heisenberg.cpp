#include "aqg/heisenberg.hpp"

#include <random>

#include "aqg/error.hpp"

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// Row-major n × n view of an element of a tensor square.
Matrix legs(const Vector& v, std::size_t n) {
  Matrix m(idx(n), idx(n));
  for (Eigen::Index p = 0; p < m.rows(); ++p)
    for (Eigen::Index q = 0; q < m.cols(); ++q) m(p, q) = v(p * m.cols() + q);
  return m;
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

HeisenbergRep build_heisenberg(const DualPair& pr, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  HeisenbergRep rep;
  rep.weights = Vector(idx(n * n));
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix l = lambda_a(pr, pr.b.algebra.basis(j));
    for (std::size_t i = 0; i < n; ++i) {
      rep.generators.push_back(l * pi_a(pr, pr.a.algebra.basis(i)));
      rep.weights(idx(j * n + i)) = pr.b_integrals.phi(idx(j)) * pr.a_integrals.phi(idx(i));
    }
  }
  rep.span = stack_columns(rep.generators);
  rep.span_dim = numerical_rank(rep.span, tol);
  if (rep.span_dim < n * n)
    throw Error(ErrorCode::SpanDeficient, "span of λ(b)π(a) has dimension " + std::to_string(rep.span_dim) +
                                              ", expected " + std::to_string(n * n));
  rep.f_row = solve(rep.span.transpose(), rep.weights, tol).x.transpose();
  return rep;
}

Matrix heisenberg_expansion(const DualPair& pr, const AlgebraElement& a, const AlgebraElement& b) {
  const std::size_t n = pr.dim();
  const Matrix k = legs(pr.a.coproduct * a, n).transpose() * pr.pairing * legs(pr.b.coproduct * b, n);
  Matrix out = Matrix::Zero(idx(n), idx(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s)
      if (k(idx(q), idx(s)) != cplx{0.0, 0.0})
        out += k(idx(q), idx(s)) * lambda_a(pr, pr.b.algebra.basis(s)) * pi_a(pr, pr.a.algebra.basis(q));
  return out;
}

Vector c_coordinates(const HeisenbergRep& rep, const Matrix& x, const Tolerance& tol) {
  return solve(rep.span, Vector(x.reshaped()), tol).x;
}

Matrix c_star(const DualPair& pr, const HeisenbergRep& rep, const Matrix& x, const Tolerance& tol) {
  const std::size_t n = pr.dim();
  const Vector c = c_coordinates(rep, x, tol);
  Matrix out = Matrix::Zero(idx(n), idx(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const cplx w = std::conj(c(idx(j * n + i)));
      if (w == cplx{0.0, 0.0}) continue;
      out += w * pi_a(pr, pr.a.algebra.apply_star(pr.a.algebra.basis(i))) *
             lambda_a(pr, pr.b.algebra.apply_star(pr.b.algebra.basis(j)));
    }
  return out;
}

Matrix f_gram(const DualPair& pr, const HeisenbergRep& rep, const Tolerance& tol) {
  const std::size_t m = rep.generators.size();
  std::vector<Matrix> stars;
  for (const auto& z : rep.generators) stars.push_back(c_star(pr, rep, z, tol));
  Matrix g(idx(m), idx(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) g(idx(k), idx(l)) = rep.f(stars[k] * rep.generators[l]);
  return g;
}

CheckList verify_heisenberg(const DualPair& pr, const HeisenbergRep& rep, const Tolerance& tol,
                            std::uint64_t seed) {
  const std::size_t n = pr.dim();
  const FiniteDimAlgebra& a = pr.a.algebra;
  const FiniteDimAlgebra& b = pr.b.algebra;
  const RowVector& phi = pr.a_integrals.phi;
  const RowVector& phi_b = pr.b_integrals.phi;
  CheckList out;

  double rel = 0.0, defined = 0.0;
  std::string worst_pair;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = pi_a(pr, a.basis(i)) * lambda_a(pr, b.basis(j));
      const Matrix rhs = heisenberg_expansion(pr, a.basis(i), b.basis(j));
      const double r = max_abs_diff(lhs, rhs);
      if (r >= rel) {
        rel = r;
        worst_pair = a.labels[i] + ", " + b.labels[j];
      }
      // f on the reversed family, through the relation and through the solved functional.
      const Matrix k = legs(pr.a.coproduct * a.basis(i), n).transpose() * pr.pairing *
                       legs(pr.b.coproduct * b.basis(j), n);
      cplx via_relation{0.0, 0.0};
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < n; ++s) via_relation += k(idx(q), idx(s)) * phi_b(idx(s)) * phi(idx(q));
      defined = std::max(defined, std::abs(via_relation - rep.f(lhs)));
    }
  out.push_back(make_check("heisenberg.commutation", "pi(a)lambda(b) = <a(1),b(1)> lambda(b(2))pi(a(2))", rel,
                           tol.abs_tol, ErrorCode::RelationFailed, "worst pair (" + worst_pair + ")"));
  out.push_back(make_check("heisenberg.span_dimension", "C = span lambda(B)pi(A) is all of End(A)",
                           static_cast<double>(n * n - rep.span_dim), 0.0, ErrorCode::SpanDeficient,
                           "dimension " + std::to_string(rep.span_dim)));

  std::vector<Matrix> gens(rep.generators);
  double rank_one = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Matrix r1 = a.basis(k) * pr.pairing.col(idx(l)).transpose();  // x ↦ ⟨x, f_l⟩ e_k
      rank_one = std::max(rank_one, in_span(r1, gens, tol).residual);
    }
  out.push_back(make_check("heisenberg.rank_one", "x -> <x,b>a lies in C", rank_one, tol.membership_tol,
                           ErrorCode::SpanDeficient));

  out.push_back(make_check("heisenberg.f_well_defined", "f(ba) = phi(b)phi(a) on both orderings", defined,
                           tol.abs_tol, ErrorCode::IllDefined));
  out.push_back(make_check("heisenberg.f_identity", "f(1) = phi_B(1)phi(1)",
                           std::abs(rep.f(identity(n)) - (phi_b * pr.b.unit)(0) * (phi * pr.a.unit)(0)),
                           tol.abs_tol, ErrorCode::IllDefined));

  if (!a.star || !b.star) {
    out.push_back(make_skipped("heisenberg.f_positive", "f(z*z) >= 0", ErrorCode::NoStar,
                               "no star: positivity not applicable"));
    return out;
  }

  const Matrix g = f_gram(pr, rep, tol);
  const double herm = max_abs_diff(g, g.adjoint());
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (g + g.adjoint()));
  const double min_eig = eig.eigenvalues().minCoeff();
  out.push_back(make_check("heisenberg.f_positive", "f(z*z) >= 0", std::max(herm, std::max(0.0, -min_eig)),
                           tol.abs_tol, ErrorCode::NotPositive, "min eigenvalue " + std::to_string(min_eig)));

  std::mt19937_64 rng(seed);
  double sandwich = 0.0, product = 0.0;
  auto record = [&](const AlgebraElement& x, const AlgebraElement& y) {
    const Matrix px = pi_a(pr, x);
    const Matrix px_star = pi_a(pr, a.apply_star(x));
    const cplx phi_xx = (phi * a.multiply(a.apply_star(x), x))(0);
    const cplx lhs = rep.f(px_star * lambda_a(pr, y) * px);
    const cplx rhs = (phi_b * y)(0) * phi_xx;
    sandwich = std::max(sandwich, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    const Matrix yx = lambda_a(pr, y) * px;
    const cplx both = rep.f(c_star(pr, rep, yx, tol) * yx);
    const cplx expected = (phi_b * b.multiply(b.apply_star(y), y))(0) * phi_xx;
    product = std::max(product, std::abs(both - expected) / std::max(1.0, std::abs(expected)));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) record(a.basis(i), b.basis(j));
  for (int s = 0; s < 20; ++s) record(random_vector(rng, n), random_vector(rng, n));
  out.push_back(make_check("heisenberg.f_sandwich", "f(a*ba) = phi(b)phi(a*a)", sandwich, tol.rel_tol,
                           ErrorCode::IllDefined));
  out.push_back(make_check("heisenberg.f_product", "f((yx)*(yx)) = phi(y*y)phi(x*x)", product,
                           tol.rel_tol, ErrorCode::IllDefined));
  return out;
}

}  // namespace aqg
