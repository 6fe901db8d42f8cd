#include "aqg/presets.hpp"

#include <algorithm>

#include "aqg/error.hpp"

namespace aqg {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

AlgebraFile empty_file(std::string name, std::vector<std::string> basis) {
  AlgebraFile f;
  const auto n = idx(basis.size());
  f.name = std::move(name);
  f.basis = std::move(basis);
  f.mult = Matrix::Zero(n, n * n);
  f.comult = Matrix::Zero(n * n, n);
  return f;
}

}  // namespace

AlgebraFile function_algebra(const FiniteGroup& g, std::string name) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (auto p : g.elements()) labels.push_back("d" + g.label(p));
  AlgebraFile f = empty_file(std::move(name), std::move(labels));
  const auto d = idx(n);
  for (std::size_t p = 0; p < n; ++p) {
    f.mult(idx(p), idx(p) * d + idx(p)) = 1.0;
    for (std::size_t q = 0; q < n; ++q) f.comult(idx(p) * d + idx(q), idx(g.table()[p][q])) += 1.0;
  }
  f.star = identity(n);
  f.unit = Vector::Ones(d);
  return f;
}

AlgebraFile group_algebra(const FiniteGroup& g, std::string name) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (auto p : g.elements()) labels.push_back("g" + g.label(p));
  AlgebraFile f = empty_file(std::move(name), std::move(labels));
  const auto d = idx(n);
  Matrix star = Matrix::Zero(d, d);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) f.mult(idx(g.table()[p][q]), idx(p) * d + idx(q)) = 1.0;
    f.comult(idx(p) * d + idx(p), idx(p)) = 1.0;
    star(idx(static_cast<std::size_t>(g.invert(static_cast<GroupElement>(p)))), idx(p)) = 1.0;
  }
  f.star = star;
  f.unit = basis_vector(n, 0);
  return f;
}

AlgebraFile sweedler_algebra() {
  // e_{a + 2b} = g^a x^b
  AlgebraFile f = empty_file("sweedler", {"1", "g", "x", "gx"});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          const double sign = (b * c) % 2 == 0 ? 1.0 : -1.0;
          f.mult((a + c) % 2 + 2 * (b + d), (a + 2 * b) * 4 + (c + 2 * d)) = sign;
        }
  f.comult(0 * 4 + 0, 0) = 1.0;  // Δ1 = 1⊗1
  f.comult(1 * 4 + 1, 1) = 1.0;  // Δg = g⊗g
  f.comult(2 * 4 + 0, 2) = 1.0;  // Δx = x⊗1 + g⊗x
  f.comult(1 * 4 + 2, 2) = 1.0;
  f.comult(3 * 4 + 1, 3) = 1.0;  // Δ(gx) = gx⊗g + 1⊗gx
  f.comult(0 * 4 + 3, 3) = 1.0;
  f.unit = basis_vector(4, 0);
  return f;
}

std::vector<PresetInfo> preset_list() {
  return {
      {"k_z2", "functions on Z2", PresetKind::Finite},
      {"k_z4", "functions on Z4", PresetKind::Finite},
      {"k_s3", "functions on S3", PresetKind::Finite},
      {"group_alg_z2", "group algebra of Z2", PresetKind::Finite},
      {"group_alg_s3", "group algebra of S3", PresetKind::Finite},
      {"sweedler", "Sweedler's 4-dimensional Hopf algebra (no involution)", PresetKind::Finite},
      {"z_discrete", "finitely supported functions on Z (multiplier Hopf algebra)", PresetKind::Discrete},
  };
}

const PresetInfo& preset_info(std::string_view name) {
  static const std::vector<PresetInfo> list = preset_list();
  auto it = std::find_if(list.begin(), list.end(), [&](const PresetInfo& p) { return p.name == name; });
  if (it == list.end()) throw Error(ErrorCode::UnknownPreset, std::string(name));
  return *it;
}

std::shared_ptr<const GroupOracle> preset_group(std::string_view name) {
  preset_info(name);
  if (name == "k_z2" || name == "group_alg_z2") return std::make_shared<FiniteGroup>(cyclic_group(2));
  if (name == "k_z4") return std::make_shared<FiniteGroup>(cyclic_group(4));
  if (name == "k_s3" || name == "group_alg_s3") return std::make_shared<FiniteGroup>(symmetric_group_3());
  if (name == "z_discrete") return std::make_shared<IntegerGroup>();
  return nullptr;
}

AlgebraFile preset_file(std::string_view name) {
  const PresetInfo& info = preset_info(name);
  if (info.kind == PresetKind::Discrete)
    throw Error(ErrorCode::InfiniteSupport, info.name + " is infinite-dimensional");
  if (name == "sweedler") return sweedler_algebra();
  const auto group = std::static_pointer_cast<const FiniteGroup>(preset_group(name));
  if (name.starts_with("k_")) return function_algebra(*group, info.name);
  return group_algebra(*group, info.name);
}

}  // namespace aqg
