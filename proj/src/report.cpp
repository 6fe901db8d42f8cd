#include "aqg/report.hpp"

#include <cmath>

namespace aqg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::DegenerateProduct: return "DegenerateProduct";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotBijectiveT: return "NotBijectiveT";
    case ErrorCode::NoCounit: return "NoCounit";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::AntipodeLawFailed: return "AntipodeLawFailed";
    case ErrorCode::CoproductFailed: return "CoproductFailed";
    case ErrorCode::NoIntegral: return "NoIntegral";
    case ErrorCode::NonUniqueIntegral: return "NonUniqueIntegral";
    case ErrorCode::InconsistentDelta: return "InconsistentDelta";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::InconsistentNu: return "InconsistentNu";
    case ErrorCode::InvarianceFailed: return "InvarianceFailed";
    case ErrorCode::BidualMismatch: return "BidualMismatch";
    case ErrorCode::PairingFailed: return "PairingFailed";
    case ErrorCode::NormalizationInconsistent: return "NormalizationInconsistent";
    case ErrorCode::NotRepresentation: return "NotRepresentation";
    case ErrorCode::IntertwiningFailed: return "IntertwiningFailed";
    case ErrorCode::PlancherelFailed: return "PlancherelFailed";
    case ErrorCode::RelationFailed: return "RelationFailed";
    case ErrorCode::SpanDeficient: return "SpanDeficient";
    case ErrorCode::IllDefined: return "IllDefined";
    case ErrorCode::InverseMismatch: return "InverseMismatch";
    case ErrorCode::PentagonFailed: return "PentagonFailed";
    case ErrorCode::ActionMismatch: return "ActionMismatch";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::TransformMismatch: return "TransformMismatch";
    case ErrorCode::TraceFormulaFailed: return "TraceFormulaFailed";
    case ErrorCode::SkippedS2: return "SkippedS2";
    case ErrorCode::NoStar: return "NoStar";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::CommutantFailed: return "CommutantFailed";
    case ErrorCode::ModularMismatch: return "ModularMismatch";
    case ErrorCode::RepresentationMismatch: return "RepresentationMismatch";
    case ErrorCode::ModularProductFailed: return "ModularProductFailed";
    case ErrorCode::MembershipFailed: return "MembershipFailed";
    case ErrorCode::AntipodeModularFailed: return "AntipodeModularFailed";
    case ErrorCode::InfiniteSupport: return "InfiniteSupport";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
  }
  return "Unknown";
}

Check make_check(std::string id, std::string anchor, double residual, double tolerance,
                 ErrorCode code_on_failure, std::string detail) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.tolerance = tolerance;
  c.status = (std::isfinite(residual) && residual <= tolerance) ? CheckStatus::Pass
                                                                 : CheckStatus::Fail;
  c.code = code_on_failure;
  c.detail = std::move(detail);
  return c;
}

Check make_verdict(std::string id, std::string anchor, bool ok, ErrorCode code_on_failure,
                   std::string detail) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  c.code = code_on_failure;
  c.detail = std::move(detail);
  return c;
}

Check make_skipped(std::string id, std::string anchor, ErrorCode reason, std::string detail) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = CheckStatus::Skipped;
  c.code = reason;
  c.detail = std::move(detail);
  return c;
}

bool all_passed(const CheckList& checks) { return first_failure(checks) == nullptr; }

const Check* first_failure(const CheckList& checks) {
  for (const auto& c : checks)
    if (c.failed()) return &c;
  return nullptr;
}

void require(const CheckList& checks) {
  if (const Check* c = first_failure(checks)) {
    std::string msg = c->id + " [" + c->anchor + "]";
    if (!c->detail.empty()) msg += " " + c->detail;
    throw Error(c->code, msg);
  }
}

void append(CheckList& into, CheckList&& more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
}

}  // namespace aqg
