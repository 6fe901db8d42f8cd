#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <Eigen/LU>

namespace oracle {

Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

std::size_t inverse_in(const Table& t, std::size_t p) {
  for (std::size_t q = 0; q < t.size(); ++q)
    if (t[p][q] == 0) return q;
  return t.size();
}

Tensors function_algebra(const Table& t) {
  const std::size_t n = t.size();
  Tensors h{Matrix::Zero(n, n * n), Matrix::Zero(n * n, n), Matrix::Identity(n, n), Vector::Ones(n),
            Matrix::Zero(n, n), RowVector::Zero(n)};
  for (std::size_t p = 0; p < n; ++p) {
    h.mult(p, p * n + p) = 1.0;
    for (std::size_t q = 0; q < n; ++q) h.comult(p * n + q, t[p][q]) = 1.0;
    h.antipode(inverse_in(t, p), p) = 1.0;
  }
  h.counit(0) = 1.0;
  return h;
}

Tensors group_algebra(const Table& t) {
  const std::size_t n = t.size();
  Tensors h{Matrix::Zero(n, n * n), Matrix::Zero(n * n, n), Matrix::Zero(n, n), Vector::Zero(n),
            Matrix::Zero(n, n), RowVector::Ones(n)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) h.mult(t[p][q], p * n + q) = 1.0;
    h.comult(p * n + p, p) = 1.0;
    h.star(inverse_in(t, p), p) = 1.0;
    h.antipode(inverse_in(t, p), p) = 1.0;
  }
  h.unit(0) = 1.0;
  return h;
}

namespace {

// g^a x^b · g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}, zero when b + d > 1.
void sweedler_mult(int i, int j, int& k, double& c) {
  const int a = i % 2, b = i / 2, cc = j % 2, d = j / 2;
  if (b + d > 1) {
    c = 0.0;
    k = 0;
    return;
  }
  c = (b * cc) % 2 ? -1.0 : 1.0;
  k = (a + cc) % 2 + 2 * (b + d);
}

}  // namespace

Tensors sweedler() {
  Tensors h{Matrix::Zero(4, 16), Matrix::Zero(16, 4), Matrix(), Vector::Zero(4), Matrix::Zero(4, 4),
            RowVector::Zero(4)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int k;
      double c;
      sweedler_mult(i, j, k, c);
      if (c != 0.0) h.mult(k, i * 4 + j) = c;
    }
  h.unit(0) = 1.0;
  // Δ(1) = 1⊗1, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, Δ(gx) = Δ(g)Δ(x) = gx⊗g + 1⊗gx.
  h.comult(0 * 4 + 0, 0) = 1.0;
  h.comult(1 * 4 + 1, 1) = 1.0;
  h.comult(2 * 4 + 0, 2) = 1.0;
  h.comult(1 * 4 + 2, 2) = 1.0;
  h.comult(3 * 4 + 1, 3) = 1.0;
  h.comult(0 * 4 + 3, 3) = 1.0;
  h.counit << 1.0, 1.0, 0.0, 0.0;
  // S(g) = g, S(x) = −gx, S(gx) = S(x)S(g) = −gxg = x.
  h.antipode(0, 0) = 1.0;
  h.antipode(1, 1) = 1.0;
  h.antipode(3, 2) = -1.0;
  h.antipode(2, 3) = 1.0;
  return h;
}

Vector product(const Tensors& h, const Vector& a, const Vector& b) {
  const Eigen::Index n = a.size();
  Vector ab(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) ab(i * n + j) = a(i) * b(j);
  return h.mult * ab;
}

Matrix left_mult(const Matrix& mult, const Vector& a) {
  const Eigen::Index n = a.size();
  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) l.col(j) += a(i) * mult.col(i * n + j);
  return l;
}

Matrix kernel(const Matrix& a) {
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(1e-10);
  return lu.kernel();
}

Matrix left_invariant_functionals(const Tensors& h) {
  const Eigen::Index n = h.mult.rows();
  // Equation (i, k): Σ_l Δ(e_i)[(k, l)] φ_l − φ_i 1_k = 0.
  Matrix sys = Matrix::Zero(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) sys(i * n + k, l) += h.comult(k * n + l, i);
      sys(i * n + k, i) -= h.unit(k);
    }
  return kernel(sys);
}

Matrix right_invariant_functionals(const Tensors& h) {
  const Eigen::Index n = h.mult.rows();
  Matrix sys = Matrix::Zero(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) sys(i * n + k, l) += h.comult(l * n + k, i);
      sys(i * n + k, i) -= h.unit(k);
    }
  return kernel(sys);
}

RowVector max_modulus_normalized(const Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best)) * (1 + 1e-12)) best = i;
  return (v / v(best)).transpose();
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  Vector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = cplx(d(rng), d(rng));
  return v;
}

Vector e(std::size_t n, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

}  // namespace oracle
