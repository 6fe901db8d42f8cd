// One line per acceptance criterion; exit status 0 iff every criterion holds.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "aqg/discrete.hpp"
#include "aqg/duality.hpp"
#include "aqg/fourier.hpp"
#include "aqg/gns.hpp"
#include "aqg/heisenberg.hpp"
#include "aqg/io.hpp"
#include "aqg/pipeline.hpp"
#include "aqg/presets.hpp"
#include "aqg/regular.hpp"
#include "oracles.hpp"

using namespace aqg;

namespace {

const Tolerance kTol;

struct Built {
  std::string name;
  AlgebraFile file;
  HopfData h;
  IntegralData ints;
  DualPair pr;
  FourierMaps f;
  RegularRep r;
  HeisenbergRep heis;
};

std::map<std::string, Built>& cache() {
  static std::map<std::string, Built> c;
  return c;
}

const Built& built(const std::string& name) {
  auto it = cache().find(name);
  if (it != cache().end()) return it->second;
  Built b;
  b.name = name;
  b.file = preset_file(name);
  b.h = make_hopf(to_algebra(b.file), b.file.comult, kTol);
  b.ints = derive_integrals(b.h, kTol);
  b.pr = build_dual(b.h, b.ints, kTol);
  b.f = build_fourier(b.pr, kTol);
  b.r = build_regular(b.pr, kTol);
  b.heis = build_heisenberg(b.pr, kTol);
  return cache().emplace(name, std::move(b)).first->second;
}

const std::vector<std::string> kFinite = {"k_z2", "k_z4", "k_s3", "group_alg_z2", "group_alg_s3", "sweedler"};
const std::vector<std::string> kStarPresets = {"k_z2", "k_z4", "k_s3", "group_alg_z2", "group_alg_s3"};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct Outcome {
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void need(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
  void residual(double r, double tol, const std::string& what) {
    if (std::isfinite(r)) worst = std::max(worst, r);
    need(std::isfinite(r) && r <= tol, what + " residual " + sci(r) + " > " + sci(tol));
  }
  void check(const CheckList& checks, const std::string& id, double tol, const std::string& where) {
    const Check* c = nullptr;
    for (const auto& x : checks)
      if (x.id == id) c = &x;
    need(c != nullptr, where + ": no check " + id);
    if (!c) return;
    need(c->passed(), where + ": " + id + " did not pass (" + c->detail + ")");
    residual(c->residual, tol, where + ": " + id);
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.need(false, std::string("exception: ") + e.what());
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "  (worst residual " << sci(o.worst)
            << ")";
  if (!o.ok) std::cout << "  " << o.note;
  std::cout << std::endl;
}

std::mt19937_64& rng() {
  static std::mt19937_64 r(20261018);
  return r;
}

Vector random_vec(std::size_t n) { return oracle::random_vector(rng(), n); }

Vector to_vec(const Sparse<GroupElement>& f, std::size_t n) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& [p, c] : f.terms()) v(p) = c;
  return v;
}

Vector to_vec3(const FinSuppTensor3& t, std::size_t n) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n * n * n));
  for (const auto& [k, c] : t.terms()) v((k[0] * n + k[1]) * n + k[2]) = c;
  return v;
}

FinSuppFunction random_function_on(std::size_t n) {
  FinSuppFunction f;
  const Vector v = random_vec(n);
  for (std::size_t p = 0; p < n; ++p) f.add(static_cast<GroupElement>(p), v(p));
  return f;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(AQG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

/// k_s3 with Δ(δ_1) doubled, so Δ is no longer multiplicative.
AlgebraFile broken_file() {
  AlgebraFile f = preset_file("k_s3");
  f.name = "k_s3 with a mutated coproduct";
  f.comult.col(1) *= 2.0;
  return f;
}

}  // namespace

int main() {
  criterion(1, "axiom suite on all presets, mutated coproduct rejected", [](Outcome& o) {
    PipelineOptions opt;
    opt.stages = {Stage::Validate, Stage::Hopf};
    for (const auto& name : kFinite) {
      const Report rep = run_preset(name, opt);
      for (const auto& sec : rep.sections)
        for (const auto& c : sec.checks) {
          o.need(c.passed(), name + ": " + c.id + " did not pass");
          o.residual(c.residual, 1e-9, name + ": " + c.id);
        }
    }
    const Report z = run_preset("z_discrete", opt);
    o.need(z.passed() && z.count(CheckStatus::Pass) > 0, "z_discrete: discrete suite failed");
    for (const auto& sec : z.sections)
      for (const auto& c : sec.checks) o.residual(c.residual, 1e-9, "z_discrete: " + c.id);

    const Report bad = run_pipeline(broken_file(), opt);
    const Check* first = nullptr;
    for (const auto& sec : bad.sections)
      if (!first) first = first_failure(sec.checks);
    o.need(!bad.passed(), "mutated coproduct passed");
    o.need(first && first->id == "hopf.coproduct_homomorphism",
           "mutated coproduct failed at " + (first ? first->id : std::string("nothing")));
  });

  criterion(2, "integral data on Sweedler's algebra", [](Outcome& o) {
    const oracle::Tensors t = oracle::sweedler();
    const Built& b = built("sweedler");
    o.residual(max_abs_diff(b.h.algebra.product, t.mult), 1e-10, "preset product vs relations");
    o.residual(max_abs_diff(b.h.coproduct, t.comult), 1e-10, "preset coproduct vs relations");

    const Matrix left = oracle::left_invariant_functionals(t);
    const Matrix right = oracle::right_invariant_functionals(t);
    o.need(left.cols() == 1 && right.cols() == 1, "invariant functionals not unique");
    const RowVector phi = oracle::max_modulus_normalized(left.col(0));
    const RowVector psi = oracle::max_modulus_normalized(right.col(0));
    o.need(phi.head(3).isZero(1e-12), "phi not supported on gx");
    o.need(psi.head(2).isZero(1e-12) && std::abs(psi(3)) < 1e-12, "psi not supported on x");
    o.residual(max_abs_diff(b.ints.phi, phi), 1e-10, "phi");
    o.residual(max_abs_diff(b.ints.psi, psi), 1e-10, "psi");

    // (φ⊗ι)Δ(gx) = φ(gx) δ.
    Vector delta = Vector::Zero(4);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) delta(k) += phi(j) * t.comult(j * 4 + k, 3);
    delta /= phi(3);
    o.residual(max_abs_diff(delta, oracle::e(4, 1)), 1e-10, "delta = g (oracle)");
    o.residual(max_abs_diff(b.ints.delta, delta), 1e-10, "delta");

    const Matrix s2 = t.antipode * t.antipode;
    const cplx nu = (phi * s2.col(3))(0) / phi(3);
    o.residual(std::abs(nu + 1.0), 1e-10, "nu = -1 (oracle)");
    o.residual(std::abs(b.ints.nu - nu), 1e-10, "nu");

    // φ(e_i e_j) = φ(e_j σ(e_i)) gives σ = P⁻¹Pᵀ.
    Matrix p(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p(i, j) = (phi * oracle::product(t, oracle::e(4, i), oracle::e(4, j)))(0);
    const Matrix sigma = p.fullPivLu().solve(p.transpose());
    o.residual(max_abs_diff(sigma.col(1), -oracle::e(4, 1)), 1e-10, "sigma(g) = -g (oracle)");
    o.residual(max_abs_diff(sigma.col(2), -oracle::e(4, 2)), 1e-10, "sigma(x) = -x (oracle)");
    o.residual(max_abs_diff(b.ints.sigma, sigma), 1e-10, "sigma");
  });

  criterion(3, "biduality and antipode pairing", [](Outcome& o) {
    for (const std::string name : {"k_z2", "k_s3", "group_alg_s3", "sweedler"}) {
      const Built& b = built(name);
      const BidualityResult bi = verify_biduality(b.pr, kTol);
      for (const auto& c : bi.checks) {
        o.need(c.passed() || c.status == CheckStatus::Skipped, name + ": " + c.id);
        o.residual(c.residual, 1e-9, name + ": " + c.id);
      }
      for (int trial = 0; trial < 20; ++trial) {
        const Vector a = random_vec(b.pr.dim()), y = random_vec(b.pr.dim());
        const cplx lhs = b.pr.pair(b.h.antipode * a, y);
        const cplx rhs = b.pr.pair(a, b.pr.b.antipode_inv * y);
        o.residual(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 1e-9, name + ": <S(a),b> = <a,S_B^-1(b)>");
      }
    }
  });

  criterion(4, "Plancherel on 100 random vectors per *-preset", [](Outcome& o) {
    for (const auto& name : kStarPresets) {
      const Built& b = built(name);
      for (int trial = 0; trial < 100; ++trial) {
        const Vector a = random_vec(b.pr.dim());
        const Vector fa = b.f.f1 * a;
        const FiniteDimAlgebra& bb = b.pr.b.algebra;
        const cplx lhs = (b.pr.b_integrals.phi * bb.multiply(bb.apply_star(fa), fa))(0);
        const FiniteDimAlgebra& aa = b.h.algebra;
        const cplx rhs = (b.ints.phi * aa.multiply(aa.apply_star(a), a))(0);
        o.residual(std::abs(lhs - rhs) / std::abs(rhs), 1e-9, name + ": Plancherel");
      }
    }
  });

  criterion(5, "Fourier map on K(Z4) is the 4-point DFT", [](Outcome& o) {
    const Built& b = built("k_z4");
    const double w = 2.0 * std::numbers::pi / 4.0;
    Matrix dft(4, 4), chars(4, 4);
    for (int k = 0; k < 4; ++k)
      for (int p = 0; p < 4; ++p) dft(k, p) = chars(k, p) = std::polar(1.0, -w * k * p);
    // Each row must be a character of B before it is used as a coordinate.
    const FiniteDimAlgebra& bb = b.pr.b.algebra;
    for (int k = 0; k < 4; ++k) {
      const RowVector h = chars.row(k);
      o.residual(std::abs((h * b.pr.b.unit)(0) - 1.0), 1e-9, "character unital");
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const cplx lhs = (h * bb.multiply(oracle::e(4, i), oracle::e(4, j)))(0);
          o.residual(std::abs(lhs - h(i) * h(j)), 1e-9, "character multiplicative");
        }
    }
    const Matrix m = chars * b.f.f1;
    const cplx scale = m(0, 0) / dft(0, 0);
    o.residual(max_abs_diff(m, scale * dft), 1e-9, "F against DFT");
  });

  criterion(6, "pentagon equation", [](Outcome& o) {
    for (const auto& name : kFinite) {
      const Built& b = built(name);
      const auto [lhs, rhs] = pentagon_sides(b.r.w, b.pr.dim());
      o.residual((lhs - rhs).norm(), 1e-9, name + ": Frobenius");
    }
    const DiscreteQuantumGroup z(std::make_shared<IntegerGroup>());
    std::vector<GroupElement> support;
    for (GroupElement p = -5; p <= 5; ++p) support.push_back(p);
    for (int trial = 0; trial < 50; ++trial) {
      const FinSuppTensor3 x = simple_tensor(random_function(rng(), support, 3), random_function(rng(), support, 3),
                                             random_function(rng(), support, 3));
      o.need(z.pentagon_lhs(x) == z.pentagon_rhs(x), "Z: pentagon sides differ on a finitely supported triple");
    }
  });

  criterion(7, "multiplier identities for W", [](Outcome& o) {
    for (const auto& name : kFinite) {
      const Built& b = built(name);
      const CheckList checks = verify_regular(b.pr, b.r, b.f, kTol);
      for (const std::string id : {"regular.coproduct_of_w", "regular.coproduct_by_w",
                                   "regular.w_inverse_left_antipode", "regular.w_inverse_right_antipode"})
        o.check(checks, id, 1e-9, name);
      // Δ(a) = W⁻¹(1⊗a)W, with Δ(a) acting by left multiplication on A⊗A.
      const std::size_t n = b.pr.dim();
      const Matrix& mult = b.h.algebra.product;
      for (int trial = 0; trial < 5; ++trial) {
        const Vector a = random_vec(n);
        const Matrix lhs = b.r.v * kron(identity(n), oracle::left_mult(mult, a)) * b.r.w;
        const Vector da = b.h.coproduct * a;
        Matrix rhs = Matrix::Zero(n * n, n * n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            rhs += da(j * n + k) * kron(oracle::left_mult(mult, oracle::e(n, j)),
                                        oracle::left_mult(mult, oracle::e(n, k)));
        o.residual(max_abs_diff(lhs, rhs), 1e-9, name + ": Delta(a) = W^-1(1⊗a)W");
      }
    }
  });

  criterion(8, "trace formula constants", [](Outcome& o) {
    const std::map<std::string, double> expected = {{"k_z2", 1.0}, {"k_s3", 1.0}, {"group_alg_s3", 1.0 / 6.0}};
    const std::map<std::string, oracle::Tensors> tensors = {
        {"k_z2", oracle::function_algebra(oracle::cyclic_table(2))},
        {"k_s3", oracle::function_algebra(oracle::s3_table())},
        {"group_alg_s3", oracle::group_algebra(oracle::s3_table())}};
    for (const auto& [name, k_expected] : expected) {
      const oracle::Tensors& t = tensors.at(name);
      const std::size_t n = t.mult.rows();
      const RowVector phi = oracle::max_modulus_normalized(oracle::left_invariant_functionals(t).col(0));
      std::size_t a0 = 0;
      std::vector<cplx> tr(n);
      for (std::size_t i = 0; i < n; ++i) {
        tr[i] = oracle::left_mult(t.mult, oracle::e(n, i)).trace();
        if (std::abs(tr[i]) > std::abs(tr[a0])) a0 = i;
      }
      const cplx k = phi(a0) / tr[a0];
      for (std::size_t i = 0; i < n; ++i) o.residual(std::abs(phi(i) - k * tr[i]), 1e-9, name + ": phi = k tr (oracle)");
      o.residual(std::abs(k - k_expected), 1e-9, name + ": oracle k");
      const TraceFormula tf = trace_formula(built(name).pr, kTol);
      o.need(tf.applicable, name + ": trace formula not applicable");
      o.residual(std::abs(tf.k - k), 1e-9, name + ": k");
    }
    const oracle::Tensors sw = oracle::sweedler();
    o.need(!(sw.antipode * sw.antipode).isIdentity(1e-12), "oracle: S^2 = 1 on Sweedler");
    const Built& b = built("sweedler");
    o.need(!trace_formula(b.pr, kTol).applicable, "sweedler: trace formula applied");
    const CheckList checks = verify_regular(b.pr, b.r, b.f, kTol);
    bool skipped = false;
    for (const auto& c : checks)
      if (c.id == "regular.trace_formula") skipped = c.status == CheckStatus::Skipped && c.code == ErrorCode::SkippedS2;
    o.need(skipped, "sweedler: trace formula not reported as SkippedS2");
  });

  criterion(9, "Heisenberg relations, span and the functional f", [](Outcome& o) {
    for (const auto& name : kFinite) {
      const Built& b = built(name);
      const std::size_t n = b.pr.dim();
      const CheckList checks = verify_heisenberg(b.pr, b.heis, kTol);
      o.check(checks, "heisenberg.commutation", 1e-9, name);
      o.need(b.heis.span_dim == n * n, name + ": span dimension " + std::to_string(b.heis.span_dim));
      if (!b.h.algebra.star) continue;
      o.check(checks, "heisenberg.f_sandwich", 1e-9, name);
      const Matrix g = f_gram(b.pr, b.heis, kTol);
      const Eigen::SelfAdjointEigenSolver<Matrix> es((g + g.adjoint()) / 2.0);
      o.need(es.eigenvalues().minCoeff() >= -1e-9, name + ": f Gram min eigenvalue " + sci(es.eigenvalues().minCoeff()));
      o.residual(max_abs_diff(g, g.adjoint()), 1e-9, name + ": f Gram Hermitian");
    }
  });

  criterion(10, "GNS spaces and modular theory", [](Outcome& o) {
    const std::vector<std::pair<std::string, double>> pinned = {
        {"gns.w_unitary", 1e-10},         {"gns.w_hat_unitary", 1e-10},       {"gns.u_unitary", 1e-10},
        {"gns.fourier_unitary", 1e-10},   {"gns.j_f_left", 1e-8},             {"gns.j_f_right", 1e-8},
        {"gns.nabla_f", 1e-8},            {"gns.u_commutes_nabla_f", 1e-8},   {"gns.n_modular_invariance", 1e-8},
        {"gns.n_hat_modular_invariance", 1e-8}, {"gns.antipode_modular", 1e-8}, {"gns.antipode_modular_hat", 1e-8},
        {"gns.sigma", 1e-8},              {"gns.hat_sigma", 1e-8}};
    for (const auto& name : kStarPresets) {
      const Built& b = built(name);
      const CheckList checks = verify_gns(b.pr, b.f, b.r, b.heis, kTol);
      for (const auto& [id, tol] : pinned) o.check(checks, id, tol, name);
      o.need(all_passed(checks), name + ": " + (first_failure(checks) ? first_failure(checks)->id : ""));
    }
  });

  criterion(11, "discrete backend agrees with structure constants", [](Outcome& o) {
    for (const std::string name : {"k_z2", "k_s3"}) {
      const Built& b = built(name);
      const DiscreteQuantumGroup qg(preset_group(name));
      const std::size_t n = b.pr.dim();
      const auto [pent_l, pent_r] = pentagon_sides(b.r.w, n);
      for (int trial = 0; trial < 50; ++trial) {
        const FinSuppFunction a = random_function_on(n), x = random_function_on(n);
        GroupAlgElement y;
        const Vector yv = random_vec(n);
        for (std::size_t p = 0; p < n; ++p) y.add(static_cast<GroupElement>(p), yv(p));
        const Vector av = to_vec(a, n), xv = to_vec(x, n);
        o.residual(max_abs_diff(b.f.f1 * av, to_vec(qg.fourier(a), n)), 1e-10, name + ": F");
        o.residual(max_abs_diff(lambda_a(b.pr, yv) * xv, to_vec(qg.lambda(y, x), n)), 1e-10, name + ": lambda");
        o.residual(max_abs_diff(pi_a(b.pr, av) * xv, to_vec(qg.pi(a, x), n)), 1e-10, name + ": pi");
        o.residual(std::abs((b.ints.phi * av)(0) - qg.integral(a)), 1e-10, name + ": phi");
        const FinSuppTensor3 t = simple_tensor(a, x, random_function_on(n));
        const Vector tv = to_vec3(t, n);
        o.residual(max_abs_diff(pent_l * tv, to_vec3(qg.pentagon_lhs(t), n)), 1e-10, name + ": W12 W13 W23");
        o.residual(max_abs_diff(pent_r * tv, to_vec3(qg.pentagon_rhs(t), n)), 1e-10, name + ": W23 W12");
      }
    }
  });

  criterion(12, "command line contract", [](Outcome& o) {
    int s1 = -1, s2 = -1;
    const std::string r1 = run_cli("verify --preset k_s3 --stages all", s1);
    const std::string r2 = run_cli("verify --preset k_s3 --stages all", s2);
    o.need(s1 == 0 && s2 == 0, "k_s3 exit status " + std::to_string(s1));
    o.need(!r1.empty() && r1 == r2, "k_s3 report differs between runs");

    const auto path = std::filesystem::temp_directory_path() / "aqg_acceptance_broken.json";
    save_algebra_file(broken_file(), path);
    const Report rep = run_pipeline(broken_file(), PipelineOptions{});
    std::string anchor;
    for (const auto& sec : rep.sections)
      if (anchor.empty())
        if (const Check* c = first_failure(sec.checks)) anchor = c->anchor;
    int s3 = -1;
    const std::string out = run_cli("verify --file " + path.string(), s3);
    o.need(s3 != 0, "broken file exit status 0");
    o.need(!anchor.empty() && out.find(anchor) != std::string::npos, "broken file report lacks '" + anchor + "'");
    std::filesystem::remove(path);
  });

  return failures == 0 ? 0 : 1;
}
