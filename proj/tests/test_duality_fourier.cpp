#include <random>

#include "aqg/duality.hpp"
#include "aqg/error.hpp"
#include "aqg/fourier.hpp"
#include "aqg/io.hpp"
#include "aqg/presets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aqg;

namespace {

const char* const kFinite[] = {"k_z2", "k_z4", "k_s3", "group_alg_z2", "group_alg_s3", "sweedler"};

DualPair dual_of(const std::string& name) {
  const Tolerance tol;
  const AlgebraFile f = preset_file(name);
  const HopfData h = make_hopf(to_algebra(f), f.comult, tol);
  return build_dual(h, derive_integrals(h, tol), tol);
}

Vector coproduct_of(const DualPair& pr, const Vector& y) { return pr.b.coproduct * y; }

}  // namespace

TEST_CASE("dual pairs, biduality and Fourier checks pass on every finite preset") {
  const Tolerance tol;
  for (const char* name : kFinite) {
    CAPTURE(name);
    const DualPair pr = dual_of(name);
    for (const Check& c : verify_dual_pair(pr, tol)) {
      CAPTURE(c.id);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(all_passed(verify_biduality(pr, tol).checks));
    const FourierMaps f = build_fourier(pr, tol);
    for (const Check& c : verify_fourier(pr, f, tol)) {
      CAPTURE(c.id);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(std::abs(f.inverse_constant - 1.0) < 1e-9);
    CHECK(std::abs(f.f2_inverse_constant - 1.0) < 1e-9);
  }
}

TEST_CASE("the dual of K(G) is the group algebra") {
  const DualPair pr = dual_of("k_s3");
  const oracle::Tensors cg = oracle::group_algebra(oracle::s3_table());
  CHECK(max_abs_diff(pr.b.algebra.product, cg.mult) < 1e-12);
  CHECK(max_abs_diff(pr.b.coproduct, cg.comult) < 1e-12);
  CHECK(max_abs_diff(pr.b.unit, cg.unit) < 1e-12);
  REQUIRE(pr.b.algebra.star);
  CHECK(max_abs_diff(*pr.b.algebra.star, cg.star) < 1e-12);
}

TEST_CASE("the dual of C[G] is a function algebra with f_j evaluating at j^-1") {
  const DualPair pr = dual_of("group_alg_s3");
  const oracle::Table t = oracle::s3_table();
  const std::size_t n = 6;
  // f_i f_j = [i = j] f_i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector expected = i == j ? oracle::e(n, i) : Vector::Zero(n);
      CHECK(max_abs_diff(pr.b.algebra.multiply(oracle::e(n, i), oracle::e(n, j)), expected) < 1e-12);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(pr.pairing(i, j) - (t[i][j] == 0 ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("Sweedler's algebra is isomorphic to its dual") {
  const Tolerance tol;
  const DualPair pr = dual_of("sweedler");
  const std::size_t n = 4;
  // Grouplike G from the character g ↦ −1, x ↦ 0; solve ⟨e_i, G⟩ = χ(e_i).
  Vector chi(4);
  chi << 1.0, -1.0, 0.0, 0.0;
  const Vector g = pr.pairing.fullPivLu().solve(chi);
  CHECK(max_abs_diff(coproduct_of(pr, g), kron(g, g)) < 1e-12);

  // Skew-primitive X with GX + XG = 0 and Δ_B(X) = X⊗1 + G⊗X or its flip.
  const Vector one = pr.b.unit;
  const Matrix lg = pr.b.algebra.left_mult(g), rg = pr.b.algebra.right_mult(g);
  Vector x;
  bool opposite = false;
  for (bool flipped : {false, true}) {
    Matrix sys(n * n + n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector ek = oracle::e(n, k);
      const Vector rhs = flipped ? Vector(kron(one, ek) + kron(ek, g)) : Vector(kron(ek, one) + kron(g, ek));
      sys.block(0, k, n * n, 1) = coproduct_of(pr, ek) - rhs;
    }
    sys.bottomRows(n) = lg + rg;
    const Matrix ker = oracle::kernel(sys);
    if (ker.cols() == 1) {
      x = ker.col(0);
      opposite = flipped;
      break;
    }
  }
  REQUIRE(x.size() == 4);
  const Vector gx = pr.b.algebra.multiply(g, x);
  Matrix iso(n, n);
  iso << one, g, x, gx;
  REQUIRE(std::abs(iso.determinant()) > 1e-8);

  const oracle::Tensors sw = oracle::sweedler();
  const Matrix iso2 = kron(iso, iso);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = iso * oracle::product(sw, oracle::e(n, i), oracle::e(n, j));
      const Vector rhs = pr.b.algebra.multiply(iso.col(i), iso.col(j));
      CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
    Vector image = iso2 * sw.comult.col(i);
    if (opposite) image = flip(n, n) * image;
    CHECK(max_abs_diff(coproduct_of(pr, iso.col(i)), image) < 1e-10);
  }
  (void)tol;
}

TEST_CASE("a vanishing left integral cannot define a pairing") {
  const Tolerance tol;
  const AlgebraFile f = preset_file("k_z2");
  const HopfData h = make_hopf(to_algebra(f), f.comult, tol);
  IntegralData d = derive_integrals(h, tol);
  d.phi.setZero();
  CHECK_THROWS_AS(build_dual(h, d, tol), Error);
}

TEST_CASE("the Fourier transform on K(G) sends delta functions to the basis of B") {
  const DualPair pr = dual_of("k_z4");
  const FourierMaps f = build_fourier(pr, Tolerance{});
  CHECK(max_abs_diff(f.f1, identity(4)) < 1e-12);
  CHECK(max_abs_diff(f.f1 * f.f1_inv, identity(4)) < 1e-12);
}

TEST_CASE("Plancherel detects a rescaled dual integral") {
  const Tolerance tol;
  DualPair pr = dual_of("k_s3");
  const FourierMaps f = build_fourier(pr, tol);
  std::mt19937_64 rng(11);
  const Vector a = oracle::random_vector(rng, 6);
  CHECK(plancherel_residual(pr, f, a) < 1e-12);
  pr.b_integrals.phi *= 2.0;
  CHECK(plancherel_residual(pr, f, a) > 0.5);
  const CheckList checks = verify_fourier(pr, f, tol);
  bool plancherel_failed = false;
  for (const auto& c : checks)
    if (c.id == "fourier.plancherel") plancherel_failed = c.failed();
  CHECK(plancherel_failed);
}

TEST_CASE("lambda on A and on B are representations compatible with the pairing") {
  const DualPair pr = dual_of("sweedler");
  std::mt19937_64 rng(2);
  const Vector b1 = oracle::random_vector(rng, 4), b2 = oracle::random_vector(rng, 4);
  const Matrix lhs = lambda_a(pr, pr.b.algebra.multiply(b1, b2));
  CHECK(max_abs_diff(lhs, lambda_a(pr, b1) * lambda_a(pr, b2)) < 1e-10);
  const Vector a1 = oracle::random_vector(rng, 4), a2 = oracle::random_vector(rng, 4);
  CHECK(max_abs_diff(lambda_b(pr, pr.a.algebra.multiply(a1, a2)), lambda_b(pr, a1) * lambda_b(pr, a2)) < 1e-10);
}
