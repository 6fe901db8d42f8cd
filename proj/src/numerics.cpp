#include "aqg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqg/error.hpp"

namespace aqg {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

RowVector kron(const RowVector& a, const RowVector& b) {
  RowVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix identity(std::size_t n) {
  return Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

Matrix flip(std::size_t p, std::size_t q) {
  const auto ip = static_cast<Eigen::Index>(p);
  const auto iq = static_cast<Eigen::Index>(q);
  Matrix out = Matrix::Zero(ip * iq, ip * iq);
  for (Eigen::Index i = 0; i < ip; ++i)
    for (Eigen::Index j = 0; j < iq; ++j) out(j * ip + i, i * iq + j) = 1.0;
  return out;
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

double condition_number(const Matrix& a) {
  auto s = singular_values(a);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

std::size_t numerical_rank(const Matrix& a, const Tolerance& tol) {
  auto s = singular_values(a);
  if (s.size() == 0) return 0;
  const double cut = tol.membership_tol * std::max(s(0), 1e-300);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return s(0) == 0.0 ? 0 : r;
}

Matrix null_space(const Matrix& a, const Tolerance& tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = std::max(s.size() ? s(0) : 0.0, 1.0);
  const double cut = tol.membership_tol * scale;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

Matrix stack_columns(std::span<const Matrix> mats) {
  if (mats.empty()) return Matrix(0, 0);
  const Eigen::Index len = mats.front().size();
  Matrix out(len, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = mats[k].reshaped();
  return out;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return max_abs(a - b);
}

bool is_finite(const Matrix& a) { return a.allFinite(); }

Matrix gram_adjoint(const Matrix& x, const Matrix& gram) {
  return gram.fullPivLu().solve(x.adjoint() * gram);
}

SolveResult solve(const Matrix& a, const Matrix& b, const Tolerance& tol, bool require_exact) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve: row counts differ");
  SolveResult r;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  r.x = cod.solve(b);
  r.residual = max_abs(a * r.x - b);
  r.condition = condition_number(a);
  if (require_exact && !(r.residual <= tol.abs_tol * (1.0 + max_abs(b))))
    throw Error(ErrorCode::SingularSystem, "residual " + std::to_string(r.residual));
  return r;
}

namespace {

// Hermitian part, to suppress round-off asymmetry before eigen-solving.
Matrix hermitian_part(const Matrix& h) { return 0.5 * (h + h.adjoint()); }

}  // namespace

Matrix matrix_power(const Matrix& h, cplx exponent, const Tolerance& tol) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix_power: not square");
  if (max_abs_diff(h, h.adjoint()) > tol.abs_tol * (1.0 + max_abs(h)))
    throw Error(ErrorCode::NotPositive, "matrix_power: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(h));
  const auto& ev = es.eigenvalues();
  if (ev.size() && !(ev(0) > 0.0))
    throw Error(ErrorCode::NotPositive, "matrix_power: eigenvalue " + std::to_string(ev(0)));
  Vector d(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) d(i) = std::pow(cplx(ev(i), 0.0), exponent);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

PolarDecomposition antilinear_polar(const AntilinearMap& t, const Matrix& gram,
                                    const Tolerance& tol) {
  const Matrix& a = t.matrix;
  if (a.rows() != a.cols() || gram.rows() != a.rows() || gram.cols() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "antilinear_polar: shapes");
  if (max_abs_diff(gram, gram.adjoint()) > tol.abs_tol * (1.0 + max_abs(gram)))
    throw Error(ErrorCode::NotPositive, "antilinear_polar: gram not Hermitian");
  Eigen::LLT<Matrix> llt(hermitian_part(gram));
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::NotPositive, "antilinear_polar: gram not positive definite");

  // Orthonormal frame w = L^H v. An antilinear v -> A conj(v) becomes
  // w -> L^H A conj(L^{-H}) conj(w).
  const Matrix l = llt.matrixL();
  const Matrix lh = l.adjoint();
  const Matrix lh_inv = lh.inverse();
  const Matrix frame = lh * a * lh_inv.conjugate();

  // For T w = B conj(w): T*T w = B^T conj(B) w.
  const Matrix nabla_frame = hermitian_part(frame.transpose() * frame.conjugate());
  Eigen::SelfAdjointEigenSolver<Matrix> es(nabla_frame);
  const auto& ev = es.eigenvalues();
  if (ev.size() && !(ev(0) > tol.abs_tol * std::max(1.0, ev(ev.size() - 1))))
    throw Error(ErrorCode::NotInvertible,
                "antilinear_polar: smallest modular eigenvalue " + std::to_string(ev(0)));
  const Matrix& q = es.eigenvectors();
  Vector inv_sqrt(ev.size());
  Vector sqrt_d(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    sqrt_d(i) = std::sqrt(ev(i));
    inv_sqrt(i) = 1.0 / std::sqrt(ev(i));
  }
  const Matrix nabla_half = q * sqrt_d.asDiagonal() * q.adjoint();
  const Matrix nabla_inv_half = q * inv_sqrt.asDiagonal() * q.adjoint();
  // J = T ∇^{-1/2}: w -> B conj(∇^{-1/2} w).
  const Matrix j_frame = frame * nabla_inv_half.conjugate();

  PolarDecomposition out;
  out.residual = max_abs_diff(frame, j_frame * nabla_half.conjugate());
  out.j.matrix = lh_inv * j_frame * lh.conjugate();
  out.nabla = lh_inv * nabla_frame * lh;
  return out;
}

SpanMembership in_span(const Matrix& x, std::span<const Matrix> basis, const Tolerance& tol) {
  SpanMembership r;
  const double norm = x.norm();
  if (norm == 0.0) {
    r.member = true;
    return r;
  }
  if (basis.empty()) {
    r.residual = 1.0;
    return r;
  }
  for (const auto& b : basis)
    if (b.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "in_span: shapes");
  const Matrix cols = stack_columns(basis);
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol.membership_tol * std::max(s(0), 1e-300)) ++rank;
  const Matrix u = svd.matrixU().leftCols(rank);
  const Vector v = x.reshaped();
  const Vector proj = u * (u.adjoint() * v);
  r.residual = (v - proj).norm() / norm;
  r.member = r.residual <= tol.membership_tol;
  return r;
}

}  // namespace aqg
