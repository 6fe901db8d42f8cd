#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aqg/duality.hpp"
#include "aqg/integrals.hpp"
#include "aqg/io.hpp"
#include "aqg/pipeline.hpp"
#include "aqg/presets.hpp"

namespace {

constexpr int kInputError = 2;

struct Source {
  std::string preset;
  std::string file;

  void add_to(CLI::App& cmd) {
    auto* p = cmd.add_option("--preset", preset, "built-in example (see `aqg presets`)");
    auto* f = cmd.add_option("--file", file, "algebra file in the JSON schema");
    p->excludes(f);
  }

  void require() const {
    if (preset.empty() && file.empty())
      throw aqg::Error(aqg::ErrorCode::SchemaError, "one of --preset or --file is required");
  }

  aqg::AlgebraFile load() const {
    return preset.empty() ? aqg::load_algebra_file(file) : aqg::preset_file(preset);
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw aqg::Error(aqg::ErrorCode::SchemaError, "cannot write " + path);
  out << text;
}

int cmd_verify(const Source& src, const std::string& stages, double tol, const std::string& report_path,
               const std::string& format, std::uint64_t seed) {
  src.require();
  aqg::PipelineOptions opt;
  opt.stages = aqg::parse_stages(stages);
  if (tol > 0) {
    opt.tol.abs_tol = tol;
    opt.tol.rel_tol = tol;
  }
  opt.seed = seed;
  const aqg::Report report =
      src.preset.empty() ? aqg::run_pipeline(src.load(), opt) : aqg::run_preset(src.preset, opt);
  write_output(format == "json" ? report.to_json() : report.to_text(), report_path);
  if (!report.passed() && !report_path.empty() && report_path != "-") {
    for (const auto& sec : report.sections)
      for (const auto& c : sec.checks)
        if (c.failed()) std::cerr << "FAIL " << c.id << "  " << c.anchor << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_presets(const std::string& export_dir) {
  for (const auto& info : aqg::preset_list()) {
    std::cout << info.name << "  " << info.description << "\n";
    if (export_dir.empty() || info.kind != aqg::PresetKind::Finite) continue;
    std::filesystem::create_directories(export_dir);
    aqg::save_algebra_file(aqg::preset_file(info.name), std::filesystem::path(export_dir) / (info.name + ".json"));
  }
  return 0;
}

int cmd_dual(const Source& src, const std::string& out) {
  src.require();
  const aqg::AlgebraFile file = src.load();
  const aqg::Tolerance tol;
  const aqg::FiniteDimAlgebra alg = aqg::to_algebra(file);
  const aqg::HopfData h = aqg::make_hopf(alg, file.comult, tol);
  const aqg::IntegralData ints = aqg::derive_integrals(h, tol);
  const aqg::DualPair pair = aqg::build_dual(h, ints, tol);
  write_output(aqg::serialize(aqg::to_file(pair.b, "dual of " + file.name)), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic quantum group checker"};
  app.require_subcommand(1);

  Source verify_src;
  std::string stages = "all", report_path, format = "text";
  double tol = 0;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run the verification pipeline");
  verify_src.add_to(*verify);
  verify->add_option("--stages", stages, "comma-separated stages or 'all'");
  verify->add_option("--tol", tol, "absolute and relative tolerance");
  verify->add_option("--report", report_path, "write the report here instead of stdout");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for randomized checks");

  std::string export_dir;
  auto* presets = app.add_subcommand("presets", "list built-in examples");
  presets->add_option("--export", export_dir, "write each finite preset as <name>.json");

  Source dual_src;
  std::string dual_out;
  auto* dual = app.add_subcommand("dual", "write the dual (with opposite coproduct) as an algebra file");
  dual_src.add_to(*dual);
  dual->add_option("--out", dual_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*verify) return cmd_verify(verify_src, stages, tol, report_path, format, seed);
    if (*presets) return cmd_presets(export_dir);
    if (*dual) return cmd_dual(dual_src, dual_out);
  } catch (const aqg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() >= aqg::ErrorCode::SyntaxError || *verify ? kInputError : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
