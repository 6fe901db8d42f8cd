#include "aqg/discrete.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "aqg/error.hpp"

namespace aqg {

// --- groups -----------------------------------------------------------------

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (labels_.size() != n) throw Error(ErrorCode::DimensionMismatch, "group labels");
  inverse_.assign(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (table_[p].size() != n) throw Error(ErrorCode::DimensionMismatch, "group table row");
    for (std::size_t q = 0; q < n; ++q) {
      if (table_[p][q] >= n) throw Error(ErrorCode::RangeError, "group table entry");
      if (table_[p][q] == 0) inverse_[p] = q;
    }
    if (inverse_[p] == n) throw Error(ErrorCode::SchemaError, "element without inverse in " + name_);
  }
}

std::size_t FiniteGroup::index(GroupElement p) const {
  if (p < 0 || static_cast<std::size_t>(p) >= table_.size())
    throw Error(ErrorCode::RangeError, name_ + ": element " + std::to_string(p));
  return static_cast<std::size_t>(p);
}

GroupElement FiniteGroup::multiply(GroupElement p, GroupElement q) const {
  return static_cast<GroupElement>(table_[index(p)][index(q)]);
}

GroupElement FiniteGroup::invert(GroupElement p) const {
  return static_cast<GroupElement>(inverse_[index(p)]);
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out(table_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<GroupElement>(i);
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p) {
    labels.push_back(std::to_string(p));
    for (std::size_t q = 0; q < n; ++q) table[p][q] = (p + q) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(table), std::move(labels));
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                     std::to_string(perms[a][2]));
    for (std::size_t b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup("S3", std::move(table), std::move(labels));
}

CheckList verify_group_axioms(const GroupOracle& g, const std::vector<GroupElement>& sample) {
  bool assoc = true, ident = true, inv = true;
  const GroupElement e = g.identity();
  for (auto p : sample) {
    ident = ident && g.multiply(e, p) == p && g.multiply(p, e) == p;
    inv = inv && g.multiply(p, g.invert(p)) == e && g.multiply(g.invert(p), p) == e;
    for (auto q : sample)
      for (auto r : sample)
        assoc = assoc && g.multiply(g.multiply(p, q), r) == g.multiply(p, g.multiply(q, r));
  }
  return {make_verdict("discrete.group_associative", "(pq)r = p(qr)", assoc, ErrorCode::SchemaError),
          make_verdict("discrete.group_identity", "ep = pe = p", ident, ErrorCode::SchemaError),
          make_verdict("discrete.group_inverse", "p p^-1 = p^-1 p = e", inv, ErrorCode::SchemaError)};
}

// --- finitely supported objects ---------------------------------------------

FinSuppFunction delta_function(GroupElement p, cplx c) {
  FinSuppFunction f;
  f.add(p, c);
  return f;
}

GroupAlgElement group_element(GroupElement p, cplx c) {
  GroupAlgElement b;
  b.add(p, c);
  return b;
}

FinSuppTensor2 simple_tensor(const FinSuppFunction& f, const FinSuppFunction& g) {
  FinSuppTensor2 out;
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) out.add({p, q}, a * b);
  return out;
}

FinSuppTensor3 simple_tensor(const FinSuppFunction& f, const FinSuppFunction& g,
                             const FinSuppFunction& h) {
  FinSuppTensor3 out;
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms())
      for (const auto& [r, c] : h.terms()) out.add({p, q, r}, a * b * c);
  return out;
}

DiscreteQuantumGroup::DiscreteQuantumGroup(std::shared_ptr<const GroupOracle> group)
    : group_(std::move(group)) {}

FinSuppTensor2 DiscreteQuantumGroup::t1_apply(const FinSuppTensor2& x) const {
  // T1(X)(p,q) = X(pq, q): the term at (r,q) lands on (r q⁻¹, q).
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) out.add({group_->multiply(k[0], group_->invert(k[1])), k[1]}, v);
  return out;
}

FinSuppTensor2 DiscreteQuantumGroup::t2_apply(const FinSuppTensor2& x) const {
  // T2(X)(p,q) = X(p, pq): the term at (p,s) lands on (p, p⁻¹ s).
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) out.add({k[0], group_->multiply(group_->invert(k[0]), k[1])}, v);
  return out;
}

FinSuppTensor2 DiscreteQuantumGroup::t1_inverse(const FinSuppTensor2& x) const {
  // (ι⊗S)Δ(δ_r)(1⊗δ_q) = Σ_{uv=r} δ_u ⊗ δ_{v⁻¹}δ_q, covered by δ_q: v = q⁻¹, u = rq.
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) {
    const GroupElement second = group_->invert(k[1]);
    out.add({group_->multiply(k[0], group_->invert(second)), k[1]}, v);
  }
  return out;
}

FinSuppTensor2 DiscreteQuantumGroup::t2_inverse(const FinSuppTensor2& x) const {
  // (δ_p⊗1)(S⊗ι)Δ(δ_s) = Σ_{uv=s} δ_pδ_{u⁻¹} ⊗ δ_v, covered by δ_p: u = p⁻¹, v = ps.
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) {
    const GroupElement first = group_->invert(k[0]);
    out.add({k[0], group_->multiply(group_->invert(first), k[1])}, v);
  }
  return out;
}

FinSuppTensor2 DiscreteQuantumGroup::coproduct(const FinSuppFunction& f) const {
  FinSuppTensor2 out;
  if (f.empty()) return out;
  if (!group_->is_finite())
    throw Error(ErrorCode::InfiniteSupport,
                "Delta(f)(p,q) = f(pq) is supported on infinitely many pairs over " + group_->name());
  for (const auto& [r, v] : f.terms())
    for (auto p : group_->elements()) out.add({p, group_->multiply(group_->invert(p), r)}, v);
  return out;
}

FinSuppFunction DiscreteQuantumGroup::antipode(const FinSuppFunction& f) const {
  FinSuppFunction out;
  for (const auto& [p, v] : f.terms()) out.add(group_->invert(p), v);
  return out;
}

cplx DiscreteQuantumGroup::counit(const FinSuppFunction& f) const { return f.at(group_->identity()); }

FinSuppFunction DiscreteQuantumGroup::multiply(const FinSuppFunction& f, const FinSuppFunction& g) const {
  FinSuppFunction out;
  for (const auto& [p, v] : f.terms()) {
    const cplx w = g.at(p);
    if (w != cplx{0.0, 0.0}) out.add(p, v * w);
  }
  return out;
}

FinSuppFunction DiscreteQuantumGroup::star(const FinSuppFunction& f) const {
  FinSuppFunction out;
  for (const auto& [p, v] : f.terms()) out.add(p, std::conj(v));
  return out;
}

cplx DiscreteQuantumGroup::integral(const FinSuppFunction& f) const {
  cplx s{0.0, 0.0};
  for (const auto& [p, v] : f.terms()) s += v;
  return s;
}

FinSuppTensor2 DiscreteQuantumGroup::left_covered_coproduct(const FinSuppFunction& a,
                                                            const FinSuppFunction& a_prime) const {
  // ((a'⊗1)Δ(a))(p,q) = a'(p) a(pq)
  FinSuppTensor2 out;
  for (const auto& [p, x] : a_prime.terms())
    for (const auto& [r, y] : a.terms()) out.add({p, group_->multiply(group_->invert(p), r)}, x * y);
  return out;
}

double DiscreteQuantumGroup::left_invariance_residual(const FinSuppFunction& a,
                                                      const FinSuppFunction& a_prime) const {
  FinSuppFunction lhs;  // (ι⊗φ)
  const FinSuppTensor2 covered = left_covered_coproduct(a, a_prime);
  for (const auto& [k, v] : covered.terms()) lhs.add(k[0], v);
  FinSuppFunction rhs;
  const cplx phi_a = integral(a);
  for (const auto& [p, v] : a_prime.terms()) rhs.add(p, phi_a * v);
  return max_abs_diff(lhs, rhs);
}

double DiscreteQuantumGroup::right_invariance_residual(const FinSuppFunction& a,
                                                       const FinSuppFunction& a_prime) const {
  FinSuppFunction lhs;  // (φ⊗ι)(Δ(a)(1⊗a')) = (φ⊗ι)T1(a⊗a')
  const FinSuppTensor2 t1 = t1_apply(simple_tensor(a, a_prime));
  for (const auto& [k, v] : t1.terms()) lhs.add(k[1], v);
  FinSuppFunction rhs;
  const cplx psi_a = integral(a);
  for (const auto& [p, v] : a_prime.terms()) rhs.add(p, psi_a * v);
  return max_abs_diff(lhs, rhs);
}

GroupAlgElement DiscreteQuantumGroup::dual_multiply(const GroupAlgElement& a,
                                                    const GroupAlgElement& b) const {
  GroupAlgElement out;
  for (const auto& [p, x] : a.terms())
    for (const auto& [q, y] : b.terms()) out.add(group_->multiply(p, q), x * y);
  return out;
}

GroupAlgElement DiscreteQuantumGroup::dual_star(const GroupAlgElement& b) const {
  GroupAlgElement out;
  for (const auto& [p, v] : b.terms()) out.add(group_->invert(p), std::conj(v));
  return out;
}

cplx DiscreteQuantumGroup::dual_integral(const GroupAlgElement& b) const {
  return b.at(group_->identity());
}

cplx DiscreteQuantumGroup::pairing(const FinSuppFunction& f, const GroupAlgElement& b) const {
  cplx s{0.0, 0.0};
  for (const auto& [p, v] : b.terms()) s += v * f.at(p);
  return s;
}

GroupAlgElement DiscreteQuantumGroup::fourier(const FinSuppFunction& f) const {
  GroupAlgElement out;
  for (const auto& [p, v] : f.terms()) out.add(p, v);
  return out;
}

FinSuppFunction DiscreteQuantumGroup::inverse_fourier(const GroupAlgElement& b) const {
  FinSuppFunction out;
  for (const auto& [p, v] : b.terms()) out.add(p, v);
  return out;
}

FinSuppFunction DiscreteQuantumGroup::pi(const FinSuppFunction& a, const FinSuppFunction& x) const {
  return multiply(a, x);
}

FinSuppFunction DiscreteQuantumGroup::lambda(const GroupAlgElement& b, const FinSuppFunction& x) const {
  // x = δ_r: Δ(δ_r) = Σ_{uv=r} δ_u⊗δ_v, ⟨S⁻¹(δ_u), b_p⟩ = [u⁻¹ = p], so v = p r.
  FinSuppFunction out;
  for (const auto& [p, beta] : b.terms())
    for (const auto& [r, v] : x.terms()) out.add(group_->multiply(p, r), beta * v);
  return out;
}

GroupAlgElement DiscreteQuantumGroup::dual_lambda(const FinSuppFunction& a, const GroupAlgElement& y) const {
  // Δ(b_p) = b_p⊗b_p, so λ(a)b_p = a(p) b_p.
  GroupAlgElement out;
  for (const auto& [p, v] : y.terms()) out.add(p, a.at(p) * v);
  return out;
}

GroupAlgElement DiscreteQuantumGroup::dual_pi(const GroupAlgElement& b, const GroupAlgElement& y) const {
  return dual_multiply(b, y);
}

FinSuppTensor2 DiscreteQuantumGroup::w_apply(const FinSuppTensor2& x) const {
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) out.add({k[0], group_->multiply(k[0], k[1])}, v);
  return out;
}

FinSuppTensor2 DiscreteQuantumGroup::v_apply(const FinSuppTensor2& x) const {
  FinSuppTensor2 out;
  for (const auto& [k, v] : x.terms()) out.add({k[0], group_->multiply(group_->invert(k[0]), k[1])}, v);
  return out;
}

FinSuppTensor3 DiscreteQuantumGroup::w_apply_legs(const FinSuppTensor3& x, int first, int second) const {
  FinSuppTensor3 out;
  for (const auto& [k, v] : x.terms()) {
    auto t = k;
    t[static_cast<std::size_t>(second)] = group_->multiply(k[static_cast<std::size_t>(first)],
                                                           k[static_cast<std::size_t>(second)]);
    out.add(t, v);
  }
  return out;
}

FinSuppTensor3 DiscreteQuantumGroup::pentagon_lhs(const FinSuppTensor3& x) const {
  return w_apply_legs(w_apply_legs(w_apply_legs(x, 1, 2), 0, 2), 0, 1);
}

FinSuppTensor3 DiscreteQuantumGroup::pentagon_rhs(const FinSuppTensor3& x) const {
  return w_apply_legs(w_apply_legs(x, 0, 1), 1, 2);
}

double DiscreteQuantumGroup::heisenberg_residual(const FinSuppFunction& a, GroupElement p,
                                                 const FinSuppFunction& x) const {
  const GroupAlgElement bp = group_element(p);
  const FinSuppFunction lhs = pi(a, lambda(bp, x));
  // ⟨a₍₁₎, b_p⟩ a₍₂₎ = a(p ·), read off (δ_{p}⊗1)Δ(a).
  FinSuppFunction shifted;
  const FinSuppTensor2 covered = left_covered_coproduct(a, delta_function(p));
  for (const auto& [k, v] : covered.terms()) shifted.add(k[1], v);
  const FinSuppFunction rhs = lambda(bp, pi(shifted, x));
  return max_abs_diff(lhs, rhs);
}

// --- window ------------------------------------------------------------------

GnsWindow::GnsWindow(const DiscreteQuantumGroup& qg, std::vector<GroupElement> window)
    : qg_(qg), window_(std::move(window)) {
  for (std::size_t i = 0; i < window_.size(); ++i) index_[window_[i]] = i;
}

std::size_t GnsWindow::index_of(GroupElement p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(ErrorCode::WindowTooSmall, "element " + qg_.group().label(p) + " outside the window");
  return it->second;
}

Vector GnsWindow::embed(const FinSuppFunction& f) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(size()));
  for (const auto& [p, c] : f.terms()) v(static_cast<Eigen::Index>(index_of(p))) = c;
  return v;
}

Matrix GnsWindow::pi_matrix(const FinSuppFunction& a, const std::vector<GroupElement>& domain) const {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = embed(qg_.pi(a, delta_function(domain[j])));
  return m;
}

Matrix GnsWindow::lambda_matrix(const GroupAlgElement& b, const std::vector<GroupElement>& domain) const {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = embed(qg_.lambda(b, delta_function(domain[j])));
  return m;
}

Matrix GnsWindow::w_matrix(const std::vector<GroupElement>& domain) const {
  const auto w = static_cast<Eigen::Index>(size());
  const auto d = static_cast<Eigen::Index>(domain.size());
  Matrix m = Matrix::Zero(w * w, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      FinSuppTensor2 x;
      x.add({domain[static_cast<std::size_t>(i)], domain[static_cast<std::size_t>(j)]}, 1.0);
      const FinSuppTensor2 image = qg_.w_apply(x);
      for (const auto& [k, v] : image.terms())
        m(static_cast<Eigen::Index>(index_of(k[0])) * w + static_cast<Eigen::Index>(index_of(k[1])),
          i * d + j) = v;
    }
  return m;
}

// --- random inputs -------------------------------------------------------------

namespace {

cplx random_coefficient(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

template <typename Out>
Out random_sparse(std::mt19937_64& rng, const std::vector<GroupElement>& support, std::size_t terms) {
  Out out;
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  for (std::size_t t = 0; t < terms; ++t) out.add(support[pick(rng)], random_coefficient(rng));
  return out;
}

}  // namespace

FinSuppFunction random_function(std::mt19937_64& rng, const std::vector<GroupElement>& support,
                                std::size_t terms) {
  return random_sparse<FinSuppFunction>(rng, support, terms);
}

GroupAlgElement random_group_alg_element(std::mt19937_64& rng,
                                         const std::vector<GroupElement>& support, std::size_t terms) {
  return random_sparse<GroupAlgElement>(rng, support, terms);
}

// --- aggregate verification ----------------------------------------------------

CheckList verify_discrete(const DiscreteQuantumGroup& qg, const std::vector<GroupElement>& sample,
                          std::uint64_t seed, const Tolerance& tol) {
  CheckList out = verify_group_axioms(qg.group(), sample);
  const GroupOracle& g = qg.group();
  std::mt19937_64 rng(seed);
  constexpr int trials = 20;

  double t_inv = 0.0, inv_sup = 0.0;
  bool support_ok = true;
  double left_inv = 0.0, right_inv = 0.0, heis = 0.0, fourier_rt = 0.0, planch = 0.0;
  double inter_pi = 0.0, inter_lambda = 0.0;
  bool pentagon_exact = true;
  bool positive = true;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_function(rng, sample, 3);
    const auto h = random_function(rng, sample, 3);
    const auto x = simple_tensor(f, h);
    t_inv = std::max({t_inv, max_abs_diff(qg.t1_inverse(qg.t1_apply(x)), x),
                      max_abs_diff(qg.t1_apply(qg.t1_inverse(x)), x),
                      max_abs_diff(qg.t2_inverse(qg.t2_apply(x)), x),
                      max_abs_diff(qg.t2_apply(qg.t2_inverse(x)), x)});
    inv_sup = std::max(inv_sup, max_abs_diff(qg.v_apply(qg.w_apply(x)), x));

    // supp T1(f⊗h) ⊆ (supp f)(supp h)⁻¹ × supp h
    std::set<std::array<GroupElement, 2>> allowed;
    for (const auto& [p, a] : f.terms())
      for (const auto& [q, b] : h.terms()) allowed.insert({g.multiply(p, g.invert(q)), q});
    const FinSuppTensor2 t1 = qg.t1_apply(x);
    for (const auto& [k, v] : t1.terms()) support_ok = support_ok && allowed.count(k);

    left_inv = std::max(left_inv, qg.left_invariance_residual(f, h));
    right_inv = std::max(right_inv, qg.right_invariance_residual(f, h));
    const cplx pos = qg.integral(qg.multiply(qg.star(f), f));
    positive = positive && pos.real() >= 0.0 && std::abs(pos.imag()) <= tol.abs_tol;

    const GroupElement p = sample[static_cast<std::size_t>(t) % sample.size()];
    heis = std::max(heis, qg.heisenberg_residual(f, p, h));

    const auto b = qg.fourier(f);
    FinSuppFunction back = qg.inverse_fourier(b);
    fourier_rt = std::max(fourier_rt, max_abs_diff(back, f));
    const cplx lhs = qg.dual_integral(qg.dual_multiply(qg.dual_star(b), b));
    const cplx rhs = qg.integral(qg.multiply(qg.star(f), f));
    planch = std::max(planch, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));

    inter_pi = std::max(inter_pi, max_abs_diff(qg.fourier(qg.pi(f, h)), qg.dual_lambda(f, qg.fourier(h))));
    const auto bb = random_group_alg_element(rng, sample, 2);
    inter_lambda = std::max(inter_lambda,
                            max_abs_diff(qg.fourier(qg.lambda(bb, h)), qg.dual_pi(bb, qg.fourier(h))));

    const auto k = random_function(rng, sample, 2);
    const auto triple = simple_tensor(f, h, k);
    pentagon_exact = pentagon_exact && qg.pentagon_lhs(triple) == qg.pentagon_rhs(triple);
  }
  out.push_back(make_check("discrete.t_inverses", "T1^-1, T2^-1 from the antipode formulas", t_inv,
                           tol.rel_tol, ErrorCode::InverseMismatch));
  out.push_back(make_check("discrete.vw_inverse", "W = V^-1", inv_sup, tol.rel_tol,
                           ErrorCode::InverseMismatch));
  out.push_back(make_verdict("discrete.t1_support", "supp T1(f⊗g) in (supp f)(supp g)^-1 × supp g",
                             support_ok, ErrorCode::InverseMismatch));
  out.push_back(make_check("discrete.left_invariant", "(id⊗phi)((a'⊗1)Delta(a)) = phi(a)a'", left_inv,
                           tol.rel_tol, ErrorCode::InvarianceFailed));
  out.push_back(make_check("discrete.right_invariant", "(psi⊗id)(Delta(a)(1⊗a')) = psi(a)a'", right_inv,
                           tol.rel_tol, ErrorCode::InvarianceFailed));
  out.push_back(make_verdict("discrete.phi_positive", "phi(f*f) >= 0", positive, ErrorCode::NotPositive));
  out.push_back(make_check("discrete.heisenberg", "pi(a)lambda(b) = <a(1),b(1)> lambda(b(2))pi(a(2))",
                           heis, tol.rel_tol, ErrorCode::RelationFailed));
  out.push_back(make_check("discrete.fourier_inverse", "F^-1(F(a)) = a", fourier_rt, tol.rel_tol,
                           ErrorCode::NormalizationInconsistent));
  out.push_back(make_check("discrete.plancherel", "phi(F(a)*F(a)) = phi(a*a)", planch, tol.rel_tol,
                           ErrorCode::PlancherelFailed));
  out.push_back(make_check("discrete.intertwining_pi", "F(pi(a)x) = lambda(a)F(x)", inter_pi, tol.rel_tol,
                           ErrorCode::IntertwiningFailed));
  out.push_back(make_check("discrete.intertwining_lambda", "F(lambda(b)x) = pi(b)F(x)", inter_lambda,
                           tol.rel_tol, ErrorCode::IntertwiningFailed));
  out.push_back(make_verdict("discrete.pentagon", "W12 W13 W23 = W23 W12", pentagon_exact,
                             ErrorCode::PentagonFailed, "exact on finitely supported triples"));

  if (!g.is_finite()) {
    bool threw = false;
    try {
      (void)qg.coproduct(delta_function(g.identity()));
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::InfiniteSupport;
    }
    out.push_back(make_verdict("discrete.coproduct_not_finitely_supported",
                               "Delta(f) lies only in the multiplier algebra", threw,
                               ErrorCode::InfiniteSupport));
  }

  // Window: all products of two sample elements must fit.
  std::set<GroupElement> win(sample.begin(), sample.end());
  for (auto p : sample)
    for (auto q : sample) win.insert(g.multiply(p, q));
  GnsWindow window(qg, std::vector<GroupElement>(win.begin(), win.end()));
  const Matrix w = window.w_matrix(sample);
  out.push_back(make_check("discrete.window_w_isometry", "W is unitary (isometric on the sample window)",
                           max_abs_diff(w.adjoint() * w, identity(sample.size() * sample.size())),
                           tol.abs_tol, ErrorCode::NotUnitary));
  const AntilinearMap j = window.modular_conjugation();
  out.push_back(make_check("discrete.window_j_involution", "J^2 = id",
                           max_abs_diff(j.compose_linear(j), identity(window.size())), tol.abs_tol,
                           ErrorCode::NotUnitary));
  return out;
}

}  // namespace aqg
