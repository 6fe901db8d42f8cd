#include "aqg/error.hpp"
#include "aqg/integrals.hpp"
#include "aqg/io.hpp"
#include "aqg/presets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aqg;

namespace {

HopfData hopf(const std::string& name) {
  const AlgebraFile f = preset_file(name);
  return make_hopf(to_algebra(f), f.comult, Tolerance{});
}

}  // namespace

TEST_CASE("integrals of K(G) and C[G] match brute-force invariant functionals") {
  const Tolerance tol;
  const std::vector<std::pair<std::string, oracle::Tensors>> cases = {
      {"k_z4", oracle::function_algebra(oracle::cyclic_table(4))},
      {"k_s3", oracle::function_algebra(oracle::s3_table())},
      {"group_alg_s3", oracle::group_algebra(oracle::s3_table())}};
  for (const auto& [name, t] : cases) {
    CAPTURE(name);
    const HopfData h = hopf(name);
    const IntegralData d = derive_integrals(h, tol);
    const Matrix left = oracle::left_invariant_functionals(t);
    const Matrix right = oracle::right_invariant_functionals(t);
    REQUIRE(left.cols() == 1);
    REQUIRE(right.cols() == 1);
    CHECK(max_abs_diff(d.phi, oracle::max_modulus_normalized(left.col(0))) < 1e-12);
    CHECK(max_abs_diff(d.psi, oracle::max_modulus_normalized(right.col(0))) < 1e-12);
    // Unimodular and tracial.
    CHECK(max_abs_diff(d.delta, t.unit) < 1e-12);
    CHECK(std::abs(d.nu - 1.0) < 1e-12);
    CHECK(max_abs_diff(d.sigma, identity(h.dim())) < 1e-12);
    REQUIRE(d.phi_positivity);
    CHECK(d.phi_positivity->positive);
    CHECK(d.phi_positivity->faithful);
    CHECK(all_passed(verify_integrals(h, d, tol)));
  }
}

TEST_CASE("Sweedler: psi is a multiple of phi composed with S") {
  const Tolerance tol;
  const HopfData h = hopf("sweedler");
  const IntegralData d = derive_integrals(h, tol);
  const oracle::Tensors t = oracle::sweedler();
  const RowVector phi = oracle::max_modulus_normalized(oracle::left_invariant_functionals(t).col(0));
  const RowVector phi_s = phi * t.antipode;
  const RowVector psi = oracle::max_modulus_normalized(oracle::right_invariant_functionals(t).col(0));
  // φ∘S is supported on x, like ψ.
  const cplx c = psi(2) / phi_s(2);
  CHECK(max_abs_diff(psi, c * phi_s) < 1e-12);
  CHECK(std::abs(d.psi_over_phi_s - c) < 1e-12);
  CHECK_FALSE(d.phi_positivity);
  // σ' for ψ: ψ(ab) = ψ(bσ'(a)), brute force.
  Matrix p(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p(i, j) = (psi * oracle::product(t, oracle::e(4, i), oracle::e(4, j)))(0);
  CHECK(max_abs_diff(d.sigma_prime, p.fullPivLu().solve(p.transpose())) < 1e-12);
  CHECK(all_passed(verify_integrals(h, d, tol)));
}

TEST_CASE("a functional with a degenerate form has no modular automorphism") {
  const HopfData h = hopf("k_z2");
  RowVector omega(2);
  omega << 1.0, 0.0;
  CHECK_THROWS_AS(modular_automorphism(h.algebra, omega, Tolerance{}), Error);
  const auto pos = check_positivity(h.algebra, omega, Tolerance{});
  REQUIRE(pos);
  CHECK(pos->positive);
  CHECK_FALSE(pos->faithful);
}

TEST_CASE("a non-positive functional is detected") {
  const HopfData h = hopf("k_z2");
  RowVector omega(2);
  omega << 1.0, -1.0;
  const auto pos = check_positivity(h.algebra, omega, Tolerance{});
  REQUIRE(pos);
  CHECK_FALSE(pos->positive);
  CHECK(pos->min_eigenvalue < -0.5);
}

TEST_CASE("canonical normalization picks the first largest coordinate") {
  RowVector v(3);
  v << cplx(0.0, 2.0), 1.0, cplx(-2.0, 0.0);
  const RowVector n = canonical_normalization(v, Tolerance{});
  CHECK(std::abs(n(0) - 1.0) < 1e-15);
  CHECK(std::abs(n(2) - cplx(0.0, 1.0)) < 1e-15);
}
