#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqg/io.hpp"
#include "aqg/report.hpp"
#include "json.hpp"

namespace aqg {

enum class Stage { Validate, Hopf, Integrals, Dual, Fourier, Heisenberg, Regular, Gns };

std::string_view to_string(Stage s);
/// Comma-separated stage names or "all". Throws SchemaError on an unknown name.
std::vector<Stage> parse_stages(std::string_view list);

struct PipelineOptions {
  std::vector<Stage> stages{Stage::Validate, Stage::Hopf,       Stage::Integrals, Stage::Dual,
                            Stage::Fourier,  Stage::Heisenberg, Stage::Regular,   Stage::Gns};
  Tolerance tol;
  std::uint64_t seed = 1;
};

struct Section {
  std::string stage;
  CheckList checks;
};

/// Per-stage check records plus derived values; byte-identical output for
/// identical input and options.
struct Report {
  std::string input;
  Tolerance tol;
  std::vector<Section> sections;
  nlohmann::ordered_json derived = nlohmann::ordered_json::object();

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  const Check* find(std::string_view id) const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Runs the requested stages; prerequisites are computed but only requested
/// stages are reported. Mathematical failures become failed checks.
Report run_pipeline(const AlgebraFile& file, const PipelineOptions& options);

/// Finite presets go through run_pipeline; z_discrete runs the discrete backend.
Report run_preset(std::string_view name, const PipelineOptions& options);

}  // namespace aqg
