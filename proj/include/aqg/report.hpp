#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aqg/error.hpp"

namespace aqg {

enum class CheckStatus { Pass, Fail, Skipped };

/// One verified identity. `anchor` is the identity being checked, written out
/// as a formula so that a failure points at the statement that broke.
struct Check {
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  ErrorCode code = ErrorCode::SingularSystem;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
};

using CheckList = std::vector<Check>;

/// Residual-vs-tolerance record. Non-finite residuals always fail.
Check make_check(std::string id, std::string anchor, double residual, double tolerance,
                 ErrorCode code_on_failure, std::string detail = {});
Check make_verdict(std::string id, std::string anchor, bool ok, ErrorCode code_on_failure,
                   std::string detail = {});
Check make_skipped(std::string id, std::string anchor, ErrorCode reason, std::string detail);

bool all_passed(const CheckList& checks);
const Check* first_failure(const CheckList& checks);

/// Throws the error carried by the first failed check, if any.
void require(const CheckList& checks);

void append(CheckList& into, CheckList&& more);

}  // namespace aqg
