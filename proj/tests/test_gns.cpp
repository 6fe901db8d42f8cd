#include "aqg/error.hpp"
#include "aqg/fourier.hpp"
#include "aqg/gns.hpp"
#include "aqg/heisenberg.hpp"
#include "aqg/io.hpp"
#include "aqg/presets.hpp"
#include "aqg/regular.hpp"
#include "doctest.h"

using namespace aqg;

namespace {

struct Stack {
  DualPair pr;
  FourierMaps f;
  RegularRep r;
  HeisenbergRep heis;
};

Stack stack(const std::string& name) {
  const Tolerance tol;
  const AlgebraFile file = preset_file(name);
  const HopfData h = make_hopf(to_algebra(file), file.comult, tol);
  Stack s;
  s.pr = build_dual(h, derive_integrals(h, tol), tol);
  s.f = build_fourier(s.pr, tol);
  s.r = build_regular(s.pr, tol);
  s.heis = build_heisenberg(s.pr, tol);
  return s;
}

const Check* find(const CheckList& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("GNS and modular checks pass on the *-presets") {
  const Tolerance tol;
  for (const char* name : {"k_z2", "k_z4", "k_s3", "group_alg_z2", "group_alg_s3"}) {
    CAPTURE(name);
    const Stack s = stack(name);
    const CheckList checks = verify_gns(s.pr, s.f, s.r, s.heis, tol);
    CHECK(checks.size() > 30);
    for (const Check& c : checks) {
      CAPTURE(c.id);
      CHECK(c.passed());
    }
  }
}

TEST_CASE("without an involution the Hilbert space layer is skipped") {
  const Stack s = stack("sweedler");
  const CheckList checks = verify_gns(s.pr, s.f, s.r, s.heis, Tolerance{});
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].status == CheckStatus::Skipped);
  CHECK(checks[0].code == ErrorCode::NoStar);
  CHECK(checks[0].detail == "skipped: no star");
}

TEST_CASE("a non-positive functional has no GNS space") {
  const Stack s = stack("k_z2");
  RowVector omega(2);
  omega << 1.0, -1.0;
  CHECK_THROWS_AS(build_gns(s.pr.a.algebra, omega, Tolerance{}), Error);
}

TEST_CASE("the modular conjugation of f needs U on a non-commutative dual") {
  const Tolerance tol;
  const Stack s = stack("k_s3");
  const GnsData g = build_gns_data(s.pr, s.f, s.r, tol);
  const FGnsData fg = build_f_gns(s.pr, s.heis, g, tol);
  const Matrix jj = kron(g.t_hat.j.matrix, g.t.j.matrix);
  CHECK(max_abs_diff(fg.polar.j.matrix, jj * g.u.conjugate()) < 1e-8);
  CHECK(max_abs_diff(fg.polar.j.matrix, jj) > 1e-3);
}

TEST_CASE("a perturbed W is caught as non-unitary") {
  const Tolerance tol;
  Stack s = stack("k_z2");
  s.r.w(0, 0) += 1e-3;
  const Check* c = find(verify_gns(s.pr, s.f, s.r, s.heis, tol), "gns.w_unitary");
  REQUIRE(c != nullptr);
  CHECK(c->failed());
}

TEST_CASE("modular operators on the group presets are trivial") {
  const Tolerance tol;
  for (const char* name : {"k_s3", "group_alg_s3"}) {
    CAPTURE(name);
    const Stack s = stack(name);
    const GnsData g = build_gns_data(s.pr, s.f, s.r, tol);
    CHECK(max_abs_diff(g.t.nabla, identity(6)) < 1e-10);
    CHECK(max_abs_diff(g.t_hat.nabla, identity(6)) < 1e-10);
  }
}
