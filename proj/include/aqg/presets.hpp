#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aqg/discrete.hpp"
#include "aqg/io.hpp"

namespace aqg {

enum class PresetKind { Finite, Discrete };

struct PresetInfo {
  std::string name;
  std::string description;
  PresetKind kind;
};

std::vector<PresetInfo> preset_list();
const PresetInfo& preset_info(std::string_view name);  // UnknownPreset

/// Structure constants of a finite preset. Throws UnknownPreset, or
/// InfiniteSupport for a preset without finite structure constants.
AlgebraFile preset_file(std::string_view name);

/// The group behind a group preset; null for presets not built from a group.
std::shared_ptr<const GroupOracle> preset_group(std::string_view name);

/// K(G): basis δ_p, pointwise product, Δ(δ_r) = Σ_{pq=r} δ_p⊗δ_q, δ_p* = δ_p.
AlgebraFile function_algebra(const FiniteGroup& g, std::string name);
/// C[G]: basis λ_p, λ_p λ_q = λ_{pq}, Δ(λ_p) = λ_p⊗λ_p, λ_p* = λ_{p⁻¹}.
AlgebraFile group_algebra(const FiniteGroup& g, std::string name);
/// Sweedler's four-dimensional algebra on 1, g, x, gx with g² = 1, x² = 0,
/// xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x. No involution.
AlgebraFile sweedler_algebra();

}  // namespace aqg
