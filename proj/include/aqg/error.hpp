#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqg {

enum class ErrorCode {
  // numerics
  SingularSystem,
  NotInvertible,
  NotPositive,
  DimensionMismatch,
  // algebra
  NonAssociative,
  DegenerateProduct,
  BadInvolution,
  NoUnit,
  // hopf
  NotBijectiveT,
  NoCounit,
  NotHomomorphism,
  AntipodeLawFailed,
  CoproductFailed,
  // integrals
  NoIntegral,
  NonUniqueIntegral,
  InconsistentDelta,
  NotFaithful,
  NotAutomorphism,
  InconsistentNu,
  // duality
  InvarianceFailed,
  BidualMismatch,
  PairingFailed,
  // fourier
  NormalizationInconsistent,
  NotRepresentation,
  IntertwiningFailed,
  PlancherelFailed,
  // heisenberg
  RelationFailed,
  SpanDeficient,
  IllDefined,
  // regular
  InverseMismatch,
  PentagonFailed,
  ActionMismatch,
  IdentityFailed,
  TransformMismatch,
  TraceFormulaFailed,
  SkippedS2,
  // gns
  NoStar,
  NotIsometry,
  NotUnitary,
  FormulaMismatch,
  CommutantFailed,
  ModularMismatch,
  RepresentationMismatch,
  ModularProductFailed,
  MembershipFailed,
  AntipodeModularFailed,
  // discrete
  InfiniteSupport,
  WindowTooSmall,
  // io
  SyntaxError,
  SchemaError,
  RangeError,
  UnknownPreset,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aqg
