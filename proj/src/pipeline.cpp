#include "aqg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "aqg/discrete.hpp"
#include "aqg/duality.hpp"
#include "aqg/fourier.hpp"
#include "aqg/gns.hpp"
#include "aqg/heisenberg.hpp"
#include "aqg/presets.hpp"
#include "aqg/regular.hpp"

namespace aqg {

using json = nlohmann::ordered_json;

namespace {

constexpr Stage kAllStages[] = {Stage::Validate, Stage::Hopf, Stage::Integrals, Stage::Dual, Stage::Fourier, Stage::Heisenberg,
                                Stage::Regular, Stage::Gns};

double clean(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

json complex_json(cplx c) { return json::array({clean(c.real()), clean(c.imag())}); }

json vector_json(const Matrix& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v.reshaped()(i)));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool is_complex(const json& v) {
  return v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number();
}

std::string compact(const json& v) {
  char buf[64];
  if (is_complex(v)) {
    const double re = v[0].get<double>(), im = v[1].get<double>();
    if (im == 0.0) std::snprintf(buf, sizeof buf, "%.6g", re);
    else if (re == 0.0) std::snprintf(buf, sizeof buf, "%.6gi", im);
    else std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    return buf;
  }
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + compact(v[i]);
    return out + "]";
  }
  if (v.is_number_float()) {
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Check construction_failure(Stage s, const Error& e) {
  return make_verdict(std::string(to_string(s)) + ".construction", "construction of the stage data", false, e.code(),
                      e.what());
}

/// Lazily built data shared by the stages.
struct Context {
  const AlgebraFile& file;
  const PipelineOptions& opt;
  FiniteDimAlgebra algebra;
  std::optional<HopfData> hopf;
  std::optional<IntegralData> integrals;
  std::optional<DualPair> pair;
  std::optional<FourierMaps> fourier;
  std::optional<HeisenbergRep> heisenberg;
  std::optional<RegularRep> regular;
  json derived = json::object();
};

CheckList run_stage(Stage s, Context& c) {
  const Tolerance& tol = c.opt.tol;
  switch (s) {
    case Stage::Validate:
      return validate(c.algebra, tol).checks;
    case Stage::Hopf: {
      CheckList out = verify_hopf(c.algebra, c.file.comult, tol, declared_data(c.file));
      if (!all_passed(out)) return out;
      c.hopf = make_hopf(c.algebra, c.file.comult, tol);
      c.derived["counit"] = vector_json(c.hopf->counit);
      c.derived["antipode"] = matrix_json(c.hopf->antipode);
      c.derived["t1_condition"] = c.hopf->t_maps.cond_t1;
      c.derived["t2_condition"] = c.hopf->t_maps.cond_t2;
      return out;
    }
    case Stage::Integrals: {
      c.integrals = derive_integrals(*c.hopf, tol);
      const IntegralData& d = *c.integrals;
      c.derived["phi"] = vector_json(d.phi);
      c.derived["psi"] = vector_json(d.psi);
      c.derived["delta"] = vector_json(d.delta);
      c.derived["sigma"] = matrix_json(d.sigma);
      c.derived["sigma_prime"] = matrix_json(d.sigma_prime);
      c.derived["nu"] = complex_json(d.nu);
      c.derived["psi_over_phi_s"] = complex_json(d.psi_over_phi_s);
      return verify_integrals(*c.hopf, d, tol);
    }
    case Stage::Dual: {
      c.pair = build_dual(*c.hopf, *c.integrals, tol);
      CheckList out = verify_dual_pair(*c.pair, tol);
      append(out, verify_hopf_data(c.pair->b, tol, "dual.hopf"));
      append(out, verify_integrals(c.pair->b, c.pair->b_integrals, tol, "dual.integrals"));
      append(out, verify_biduality(*c.pair, tol).checks);
      c.derived["pairing_condition"] = condition_number(c.pair->pairing);
      c.derived["dual_phi"] = vector_json(c.pair->b_integrals.phi);
      return out;
    }
    case Stage::Fourier: {
      c.fourier = build_fourier(*c.pair, tol);
      c.derived["fourier_inverse_constant"] = complex_json(c.fourier->inverse_constant);
      c.derived["fourier_f2_scalar"] = complex_json(c.fourier->f2_scalar);
      c.derived["fourier_f2_inverse_constant"] = complex_json(c.fourier->f2_inverse_constant);
      return verify_fourier(*c.pair, *c.fourier, tol, c.opt.seed);
    }
    case Stage::Heisenberg: {
      c.heisenberg = build_heisenberg(*c.pair, tol);
      c.derived["heisenberg_span_dimension"] = c.heisenberg->span_dim;
      return verify_heisenberg(*c.pair, *c.heisenberg, tol, c.opt.seed + 1);
    }
    case Stage::Regular: {
      c.regular = build_regular(*c.pair, tol);
      const TraceFormula t = trace_formula(*c.pair, tol);
      c.derived["trace_formula_k"] = t.applicable ? complex_json(t.k) : json("skipped: S^2 is not the identity");
      return verify_regular(*c.pair, *c.regular, *c.fourier, tol);
    }
    case Stage::Gns:
      return verify_gns(*c.pair, *c.fourier, *c.regular, *c.heisenberg, tol);
  }
  return {};
}

void write_tolerance(json& doc, const Tolerance& tol) {
  doc["tolerance"] = {{"abs_tol", tol.abs_tol}, {"rel_tol", tol.rel_tol}, {"membership_tol", tol.membership_tol}};
}

}  // namespace

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Validate: return "validate";
    case Stage::Hopf: return "hopf";
    case Stage::Integrals: return "integrals";
    case Stage::Dual: return "dual";
    case Stage::Fourier: return "fourier";
    case Stage::Heisenberg: return "heisenberg";
    case Stage::Regular: return "regular";
    case Stage::Gns: return "gns";
  }
  return "unknown";
}

std::vector<Stage> parse_stages(std::string_view list) {
  std::vector<Stage> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, end - start);
    if (name == "all") {
      out.assign(std::begin(kAllStages), std::end(kAllStages));
    } else {
      auto it = std::find_if(std::begin(kAllStages), std::end(kAllStages),
                             [&](Stage s) { return to_string(s) == name; });
      if (it == std::end(kAllStages)) throw Error(ErrorCode::SchemaError, "unknown stage '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Report::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t Report::count(CheckStatus s) const {
  std::size_t k = 0;
  for (const auto& sec : sections)
    k += static_cast<std::size_t>(std::count_if(sec.checks.begin(), sec.checks.end(),
                                                [s](const Check& c) { return c.status == s; }));
  return k;
}

const Check* Report::find(std::string_view id) const {
  for (const auto& sec : sections)
    for (const auto& c : sec.checks)
      if (c.id == id) return &c;
  return nullptr;
}

std::string Report::to_json() const {
  json doc;
  doc["input"] = input;
  write_tolerance(doc, tol);
  json stages = json::array();
  for (const auto& sec : sections) {
    json checks = json::array();
    for (const auto& c : sec.checks) {
      json rec;
      rec["id"] = c.id;
      rec["anchor"] = c.anchor;
      rec["status"] = status_name(c.status);
      rec["residual"] = c.residual;
      rec["tolerance"] = c.tolerance;
      if (!c.passed()) rec["code"] = to_string(c.code);
      if (!c.detail.empty()) rec["detail"] = c.detail;
      checks.push_back(rec);
    }
    stages.push_back({{"stage", sec.stage}, {"checks", checks}});
  }
  doc["stages"] = stages;
  doc["derived"] = derived;
  doc["summary"] = {{"passed", count(CheckStatus::Pass)},
                    {"failed", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)},
                    {"ok", passed()}};
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "input: " << input << "\n";
  os << "tolerance: abs " << scientific(tol.abs_tol) << ", rel " << scientific(tol.rel_tol) << ", membership "
     << scientific(tol.membership_tol) << "\n";
  for (const auto& sec : sections) {
    os << "[" << sec.stage << "]\n";
    for (const auto& c : sec.checks) {
      os << "  " << (c.passed() ? "PASS" : c.failed() ? "FAIL" : "SKIP") << "  " << c.id;
      if (c.status != CheckStatus::Skipped)
        os << "  residual " << scientific(c.residual) << " (tol " << scientific(c.tolerance) << ")";
      os << "  " << c.anchor;
      if (!c.passed()) os << "  [" << to_string(c.code) << "]";
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
    }
  }
  if (!derived.empty()) {
    os << "derived:\n";
    for (const auto& [key, value] : derived.items()) os << "  " << key << " = " << compact(value) << "\n";
  }
  os << "summary: " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

Report run_pipeline(const AlgebraFile& file, const PipelineOptions& opt) {
  Report report;
  report.input = file.name;
  report.tol = opt.tol;
  Context ctx{file, opt, to_algebra(file), {}, {}, {}, {}, {}, {}, {}};
  if (opt.stages.empty()) return report;
  const Stage last = *std::max_element(opt.stages.begin(), opt.stages.end());

  const Check* blocking = nullptr;
  std::string blocking_stage;
  CheckList unreported_failure;
  for (Stage s : kAllStages) {
    if (s > last) break;
    const bool requested = std::find(opt.stages.begin(), opt.stages.end(), s) != opt.stages.end();
    Section sec{std::string(to_string(s)), {}};
    if (blocking) {
      if (requested) {
        if (unreported_failure.empty()) {
          sec.checks.push_back(make_skipped(sec.stage + ".prerequisites", "earlier stages pass", blocking->code,
                                            "not run: " + blocking_stage + " failed"));
        } else {
          sec.checks.push_back(make_verdict(sec.stage + ".prerequisites", blocking->anchor, false, blocking->code,
                                            "prerequisite check " + blocking->id + " failed"));
          unreported_failure.clear();
        }
        report.sections.push_back(std::move(sec));
      }
      continue;
    }
    try {
      sec.checks = run_stage(s, ctx);
    } catch (const Error& e) {
      sec.checks.push_back(construction_failure(s, e));
    }
    if (requested) {
      report.sections.push_back(std::move(sec));
      const CheckList& stored = report.sections.back().checks;
      if (const Check* f = first_failure(stored)) {
        blocking = f;
        blocking_stage = std::string(to_string(s));
      }
    } else if (first_failure(sec.checks)) {
      unreported_failure = sec.checks;
      blocking = first_failure(unreported_failure);
      blocking_stage = std::string(to_string(s));
    }
  }
  // Derived values only for what was reported.
  static const std::pair<const char*, Stage> owners[] = {
      {"counit", Stage::Hopf},
      {"antipode", Stage::Hopf},
      {"t1_condition", Stage::Hopf},
      {"t2_condition", Stage::Hopf},
      {"phi", Stage::Integrals},
      {"psi", Stage::Integrals},
      {"delta", Stage::Integrals},
      {"sigma", Stage::Integrals},
      {"sigma_prime", Stage::Integrals},
      {"nu", Stage::Integrals},
      {"psi_over_phi_s", Stage::Integrals},
      {"pairing_condition", Stage::Dual},
      {"dual_phi", Stage::Dual},
      {"fourier_inverse_constant", Stage::Fourier},
      {"fourier_f2_scalar", Stage::Fourier},
      {"fourier_f2_inverse_constant", Stage::Fourier},
      {"heisenberg_span_dimension", Stage::Heisenberg},
      {"trace_formula_k", Stage::Regular},
  };
  for (const auto& [key, stage] : owners) {
    if (!ctx.derived.contains(key)) continue;
    if (std::find(opt.stages.begin(), opt.stages.end(), stage) == opt.stages.end()) continue;
    report.derived[key] = ctx.derived[key];
  }
  return report;
}

Report run_preset(std::string_view name, const PipelineOptions& opt) {
  const PresetInfo& info = preset_info(name);
  if (info.kind == PresetKind::Finite) return run_pipeline(preset_file(name), opt);

  Report report;
  report.input = info.name;
  report.tol = opt.tol;
  const DiscreteQuantumGroup qg(preset_group(name));
  std::vector<GroupElement> sample;
  for (GroupElement p = -3; p <= 3; ++p) sample.push_back(p);
  report.sections.push_back({"discrete", verify_discrete(qg, sample, opt.seed, opt.tol)});
  report.derived["sample"] = sample;
  return report;
}

}  // namespace aqg
