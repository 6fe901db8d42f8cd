#include <memory>
#include <random>

#include "aqg/discrete.hpp"
#include "aqg/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aqg;

namespace {

std::vector<GroupElement> range(GroupElement lo, GroupElement hi) {
  std::vector<GroupElement> out;
  for (GroupElement p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("finite groups match the reference tables") {
  const FiniteGroup s3 = symmetric_group_3();
  const oracle::Table t = oracle::s3_table();
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q)
      CHECK(s3.multiply(static_cast<GroupElement>(p), static_cast<GroupElement>(q)) ==
            static_cast<GroupElement>(t[p][q]));
  CHECK(all_passed(verify_group_axioms(s3, s3.elements())));
  const FiniteGroup z4 = cyclic_group(4);
  CHECK(z4.invert(1) == 3);
}

TEST_CASE("the discrete suite passes over Z and over S3") {
  const Tolerance tol;
  const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
  for (const Check& c : verify_discrete(z, range(-3, 3), 1, tol)) {
    CAPTURE(c.id);
    CHECK(c.passed());
  }
  const DiscreteQuantumGroup s3(std::make_shared<FiniteGroup>(symmetric_group_3()));
  for (const Check& c : verify_discrete(s3, range(0, 5), 1, tol)) {
    CAPTURE(c.id);
    CHECK(c.passed());
  }
}

TEST_CASE("the coproduct over Z is not finitely supported") {
  const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
  CHECK_THROWS_AS(z.coproduct(delta_function(0)), Error);
  // Covered by a finitely supported leg it is.
  const FinSuppTensor2 covered = z.left_covered_coproduct(delta_function(2), delta_function(5));
  REQUIRE(covered.size() == 1);
  CHECK(covered.at({5, -3}) == cplx(1.0));
}

TEST_CASE("T-maps and their inverses on Z") {
  const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
  std::mt19937_64 rng(9);
  const auto support = range(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const FinSuppTensor2 x = simple_tensor(random_function(rng, support, 3), random_function(rng, support, 3));
    CHECK(z.t1_inverse(z.t1_apply(x)) == x);
    CHECK(z.t2_inverse(z.t2_apply(x)) == x);
    CHECK(z.v_apply(z.w_apply(x)) == x);
  }
  // T1(δ_r ⊗ δ_q) = δ_{rq⁻¹} ⊗ δ_q.
  const FinSuppTensor2 t = z.t1_apply(simple_tensor(delta_function(4), delta_function(1)));
  CHECK(t.at({3, 1}) == cplx(1.0));
}

TEST_CASE("window operators") {
  const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
  const GnsWindow w(z, range(-4, 4));
  CHECK_THROWS_AS(w.index_of(10), Error);
  const Matrix l = w.lambda_matrix(group_element(1), range(-2, 2));
  CHECK(l(w.index_of(1), 2) == cplx(1.0));  // δ_0 ↦ δ_1
  const Matrix m = w.w_matrix(range(-2, 2));
  CHECK(max_abs_diff(m.adjoint() * m, identity(25)) < 1e-15);
  CHECK_THROWS_AS(w.lambda_matrix(group_element(3), range(-2, 2)), Error);
}

TEST_CASE("the pentagon equation is exact on finitely supported triples over Z") {
  const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
  std::mt19937_64 rng(4);
  const auto support = range(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const FinSuppTensor3 x = simple_tensor(random_function(rng, support, 4), random_function(rng, support, 4),
                                           random_function(rng, support, 4));
    CHECK(z.pentagon_lhs(x) == z.pentagon_rhs(x));
  }
}
