#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqg/algebra.hpp"
#include "aqg/hopf.hpp"

namespace aqg {

/// On-disk presentation of a finite-dimensional Hopf (*-)algebra.
///
/// JSON fields: schema_version (= 1), name, dimension, basis, mult
/// [[i,j,k,re,im]] (e_i e_j ∋ c e_k), comult [[i,j,k,re,im]] (Δ(e_i) ∋ c e_j⊗e_k),
/// optional star [[i,j,re,im]] (e_i* ∋ c e_j), unit [[re,im]...],
/// antipode [[i,j,re,im]] (S(e_i) ∋ c e_j) and counit [[re,im]...].
/// Repeated entries are summed.
struct AlgebraFile {
  static constexpr int kSchemaVersion = 1;

  std::string name;
  std::vector<std::string> basis;
  Matrix mult;    // n × n², same layout as FiniteDimAlgebra::product
  Matrix comult;  // n² × n, same layout as HopfData::coproduct
  std::optional<Matrix> star;
  std::optional<Vector> unit;
  std::optional<Matrix> antipode;
  std::optional<RowVector> counit;

  std::size_t dimension() const { return basis.size(); }

  friend bool operator==(const AlgebraFile& a, const AlgebraFile& b);
};

/// Throws SyntaxError (with line and column), SchemaError (naming the field)
/// or RangeError (naming the entry).
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile load_algebra_file(const std::filesystem::path& path);

std::string serialize(const AlgebraFile& file);
void save_algebra_file(const AlgebraFile& file, const std::filesystem::path& path);

FiniteDimAlgebra to_algebra(const AlgebraFile& file);
DeclaredHopfData declared_data(const AlgebraFile& file);

/// The file for an already-derived structure; counit and antipode are written
/// as declarations so they are cross-checked when the file is loaded again.
AlgebraFile to_file(const HopfData& h, std::string name);

}  // namespace aqg
