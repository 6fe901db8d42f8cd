#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqg/numerics.hpp"
#include "aqg/report.hpp"

namespace aqg {

/// Coefficient vector of an element in the fixed basis of its algebra.
using AlgebraElement = Vector;

/// Finite-dimensional associative algebra over C given by structure constants.
///
/// `product` is the multiplication as a linear map A⊗A -> A: an n × n² matrix
/// with product(k, i*n + j) the coefficient of e_k in e_i e_j. The optional
/// involution is stored as the matrix whose column i holds the coordinates of
/// e_i*; it acts on a general element as a -> star * conj(a).
struct FiniteDimAlgebra {
  std::string name;
  std::vector<std::string> labels;
  Matrix product;
  std::optional<Matrix> star;
  std::optional<AlgebraElement> unit;

  std::size_t dim() const { return labels.size(); }
  AlgebraElement basis(std::size_t i) const { return basis_vector(dim(), i); }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const AlgebraElement& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const AlgebraElement& a) const;
  AlgebraElement apply_star(const AlgebraElement& a) const;
  /// The declared unit, or the one solved from the structure constants.
  AlgebraElement unit_element(const Tolerance& tol) const;
};

struct AlgebraReport {
  double associativity_residual = 0.0;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  std::optional<double> star_antimultiplicative_residual;
  std::optional<double> star_involutive_residual;
  std::optional<double> unit_residual;
  CheckList checks;
};

/// Checks associativity, non-degeneracy of the product, involution laws and
/// the unit. Never throws for mathematical failures; see `require_valid`.
AlgebraReport validate(const FiniteDimAlgebra& a, const Tolerance& tol);
/// Throws NonAssociative / DegenerateProduct / BadInvolution / NoUnit.
void require_valid(const FiniteDimAlgebra& a, const Tolerance& tol);

/// Solves u e_j = e_j = e_j u; nullopt when no unit exists.
std::optional<AlgebraElement> find_unit(const FiniteDimAlgebra& a, const Tolerance& tol);

/// A ⊗ B with componentwise product and involution. Basis order (i, j) -> i*n_B + j.
FiniteDimAlgebra tensor_algebra(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);

/// Product map of A⊗B written in terms of the factors' product maps.
Matrix tensor_product_map(const Matrix& prod_a, std::size_t dim_a, const Matrix& prod_b,
                          std::size_t dim_b);

}  // namespace aqg
