#pragma once

#include "etcs/nno.hpp"
#include "etcs/script.hpp"
#include "etcs/verifier.hpp"

namespace etcs {

struct ExecConfig {
  std::uint64_t nat_bound = NatSystem::kDefaultBound;
  VerifierConfig verifier;
};

struct ExecResult {
  std::vector<Report> reports;
  std::vector<Diagnostic> diagnostics;

  bool any_failed() const;
  bool any_error() const;
  /// 0 success, 1 failed assert/check, 2 parse or execution error.
  int exit_status() const;
};

/// Runs a well-formed script: declarations bind, constructions bind their
/// results, asserts and checks append reports. Kernel errors surface as
/// diagnostics carrying the statement's source location and stop the run.
ExecResult execute(const Script& script, const ExecConfig& config);

}  // namespace etcs
