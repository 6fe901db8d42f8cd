#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aqg/numerics.hpp"
#include "aqg/report.hpp"

namespace aqg {

using GroupElement = std::int64_t;

/// A group given by its operations. Implementations must be pure.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(GroupElement p, GroupElement q) const = 0;
  virtual GroupElement invert(GroupElement p) const = 0;
  virtual bool is_finite() const = 0;
  /// All elements for finite groups; empty otherwise.
  virtual std::vector<GroupElement> elements() const = 0;
  virtual std::string label(GroupElement p) const { return std::to_string(p); }
};

/// The integers under addition.
class IntegerGroup final : public GroupOracle {
 public:
  std::string name() const override { return "Z"; }
  GroupElement identity() const override { return 0; }
  GroupElement multiply(GroupElement p, GroupElement q) const override { return p + q; }
  GroupElement invert(GroupElement p) const override { return -p; }
  bool is_finite() const override { return false; }
  std::vector<GroupElement> elements() const override { return {}; }
};

/// A finite group from its multiplication table; element 0 is the identity.
class FiniteGroup final : public GroupOracle {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table,
              std::vector<std::string> labels);

  std::string name() const override { return name_; }
  GroupElement identity() const override { return 0; }
  GroupElement multiply(GroupElement p, GroupElement q) const override;
  GroupElement invert(GroupElement p) const override;
  bool is_finite() const override { return true; }
  std::vector<GroupElement> elements() const override;
  std::string label(GroupElement p) const override { return labels_.at(index(p)); }

  std::size_t order() const { return table_.size(); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::size_t index(GroupElement p) const;

  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic_group(std::size_t n);
/// Permutations of {0,1,2} in lexicographic order; (pq)(i) = p(q(i)).
FiniteGroup symmetric_group_3();

/// Group axioms on every triple of the given sample.
CheckList verify_group_axioms(const GroupOracle& g, const std::vector<GroupElement>& sample);

// --- finitely supported objects ---------------------------------------------

/// Finitely supported complex coefficients indexed by Key; zeros are not stored.
template <typename Key>
class Sparse {
 public:
  using map_type = std::map<Key, cplx>;

  Sparse() = default;

  void add(const Key& k, cplx v) {
    auto [it, inserted] = data_.try_emplace(k, v);
    if (!inserted) it->second += v;
    if (it->second == cplx{0.0, 0.0}) data_.erase(it);
  }
  cplx at(const Key& k) const {
    auto it = data_.find(k);
    return it == data_.end() ? cplx{0.0, 0.0} : it->second;
  }
  const map_type& terms() const { return data_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  friend bool operator==(const Sparse& a, const Sparse& b) { return a.data_ == b.data_; }

  /// max |a − b| over the union of supports.
  friend double max_abs_diff(const Sparse& a, const Sparse& b) {
    double m = 0.0;
    for (const auto& [k, v] : a.data_) m = std::max(m, std::abs(v - b.at(k)));
    for (const auto& [k, v] : b.data_) m = std::max(m, std::abs(v - a.at(k)));
    return m;
  }

 private:
  map_type data_;
};

/// f ∈ K(G): a function with finite support.
struct FinSuppFunction : Sparse<GroupElement> {};
/// b = Σ b_p p in the group algebra C[G], the dual side.
struct GroupAlgElement : Sparse<GroupElement> {};
/// Finitely supported function on G×G, i.e. an element of K(G)⊗K(G).
using FinSuppTensor2 = Sparse<std::array<GroupElement, 2>>;
using FinSuppTensor3 = Sparse<std::array<GroupElement, 3>>;

FinSuppFunction delta_function(GroupElement p, cplx c = 1.0);
GroupAlgElement group_element(GroupElement p, cplx c = 1.0);
FinSuppTensor2 simple_tensor(const FinSuppFunction& f, const FinSuppFunction& g);
FinSuppTensor3 simple_tensor(const FinSuppFunction& f, const FinSuppFunction& g,
                             const FinSuppFunction& h);

/// Operations of the multiplier Hopf algebra K(G) and its dual C[G].
class DiscreteQuantumGroup {
 public:
  explicit DiscreteQuantumGroup(std::shared_ptr<const GroupOracle> group);

  const GroupOracle& group() const { return *group_; }

  // T1(X)(p,q) = X(pq, q);  T2(X)(p,q) = X(p, pq).
  FinSuppTensor2 t1_apply(const FinSuppTensor2& x) const;
  FinSuppTensor2 t2_apply(const FinSuppTensor2& x) const;
  /// (ι⊗S)(Δ(a))(1⊗a') and (a⊗1)(S⊗ι)(Δ(a')), evaluated through S(f)(p) = f(p⁻¹).
  FinSuppTensor2 t1_inverse(const FinSuppTensor2& x) const;
  FinSuppTensor2 t2_inverse(const FinSuppTensor2& x) const;

  /// Δ(f)(p,q) = f(pq). Throws InfiniteSupport over an infinite group.
  FinSuppTensor2 coproduct(const FinSuppFunction& f) const;
  FinSuppFunction antipode(const FinSuppFunction& f) const;
  cplx counit(const FinSuppFunction& f) const;
  FinSuppFunction multiply(const FinSuppFunction& f, const FinSuppFunction& g) const;
  FinSuppFunction star(const FinSuppFunction& f) const;

  /// φ(f) = Σ_p f(p).
  cplx integral(const FinSuppFunction& f) const;
  /// (a'⊗1)Δ(a), finitely supported.
  FinSuppTensor2 left_covered_coproduct(const FinSuppFunction& a, const FinSuppFunction& a_prime) const;
  /// max |(ι⊗φ)((a'⊗1)Δ(a)) − φ(a)a'|.
  double left_invariance_residual(const FinSuppFunction& a, const FinSuppFunction& a_prime) const;
  /// max |(φ⊗ι)(Δ(a)(1⊗a')) − φ(a)a'|.
  double right_invariance_residual(const FinSuppFunction& a, const FinSuppFunction& a_prime) const;

  // Dual side: b_p b_q = b_{pq}, b_p* = b_{p⁻¹}, φ_B(b) = coefficient at e.
  GroupAlgElement dual_multiply(const GroupAlgElement& a, const GroupAlgElement& b) const;
  GroupAlgElement dual_star(const GroupAlgElement& b) const;
  cplx dual_integral(const GroupAlgElement& b) const;
  cplx pairing(const FinSuppFunction& f, const GroupAlgElement& b) const;

  /// F(f) = φ(·f) = Σ_p f(p) b_p.
  GroupAlgElement fourier(const FinSuppFunction& f) const;
  FinSuppFunction inverse_fourier(const GroupAlgElement& b) const;

  /// π(a)x = ax.
  FinSuppFunction pi(const FinSuppFunction& a, const FinSuppFunction& x) const;
  /// λ(b)x = ⟨S⁻¹(x₍₁₎), b⟩ x₍₂₎;  λ(b_p)δ_r = δ_{pr}.
  FinSuppFunction lambda(const GroupAlgElement& b, const FinSuppFunction& x) const;
  /// λ(a)y = ⟨a, y₍₁₎⟩ y₍₂₎ on C[G].
  GroupAlgElement dual_lambda(const FinSuppFunction& a, const GroupAlgElement& y) const;
  /// π(b)y = by on C[G].
  GroupAlgElement dual_pi(const GroupAlgElement& b, const GroupAlgElement& y) const;

  /// W(δ_r⊗δ_s) = δ_r⊗δ_{rs};  V = W⁻¹.
  FinSuppTensor2 w_apply(const FinSuppTensor2& x) const;
  FinSuppTensor2 v_apply(const FinSuppTensor2& x) const;
  /// W acting on legs (i, j) of a triple tensor, i ≠ j ∈ {0,1,2}.
  FinSuppTensor3 w_apply_legs(const FinSuppTensor3& x, int first, int second) const;
  FinSuppTensor3 pentagon_lhs(const FinSuppTensor3& x) const;  // W12 W13 W23 x
  FinSuppTensor3 pentagon_rhs(const FinSuppTensor3& x) const;  // W23 W12 x

  /// π(a)λ(b_p)x against λ(b_p)π(a(p·))x: the commutation relation for a group-like b_p.
  double heisenberg_residual(const FinSuppFunction& a, GroupElement p, const FinSuppFunction& x) const;

 private:
  std::shared_ptr<const GroupOracle> group_;
};

/// A finite window of G with operators restricted to it. Any image leaving
/// the window raises WindowTooSmall.
class GnsWindow {
 public:
  GnsWindow(const DiscreteQuantumGroup& qg, std::vector<GroupElement> window);

  std::size_t size() const { return window_.size(); }
  const std::vector<GroupElement>& elements() const { return window_; }
  bool contains(GroupElement p) const { return index_.count(p) != 0; }
  std::size_t index_of(GroupElement p) const;

  /// Coordinates of f in the window basis η(δ_p); the Gram matrix is the identity.
  Vector embed(const FinSuppFunction& f) const;
  Matrix gram() const { return identity(size()); }

  /// Column j is the image of δ_{domain[j]}.
  Matrix pi_matrix(const FinSuppFunction& a, const std::vector<GroupElement>& domain) const;
  Matrix lambda_matrix(const GroupAlgElement& b, const std::vector<GroupElement>& domain) const;
  /// W on window⊗window restricted to domain⊗domain.
  Matrix w_matrix(const std::vector<GroupElement>& domain) const;
  /// The modular conjugation: pointwise complex conjugation (matrix part).
  AntilinearMap modular_conjugation() const { return {identity(size())}; }

 private:
  DiscreteQuantumGroup qg_;
  std::vector<GroupElement> window_;
  std::map<GroupElement, std::size_t> index_;
};

/// Random finitely supported function with support inside `support`.
FinSuppFunction random_function(std::mt19937_64& rng, const std::vector<GroupElement>& support,
                                std::size_t terms);
GroupAlgElement random_group_alg_element(std::mt19937_64& rng,
                                         const std::vector<GroupElement>& support, std::size_t terms);

/// Full discrete-backend verification over the given sample window.
CheckList verify_discrete(const DiscreteQuantumGroup& qg, const std::vector<GroupElement>& sample,
                          std::uint64_t seed, const Tolerance& tol);

}  // namespace aqg
