#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace etcs {

enum class Verdict { pass, fail, prefix_verified };

const char* verdict_name(Verdict v);

struct ReportStats {
  std::uint64_t instances = 0;
  std::uint64_t elapsed_ms = 0;
};

/// Outcome of one verification entry. A fail always carries a witness.
/// Axiom 9 entries are always "prefix-verified": a bounded model can
/// confirm the defining equations and prefix uniqueness only on the
/// indices it evaluates.
struct Report {
  std::string id;        // A1..A10, D-*, assert:<line>
  std::string instance;  // description of the instances checked
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::string>> witness;
  ReportStats stats;
};

struct VerifierConfig {
  int size_limit = 3;
  std::uint64_t instance_ceiling = 2'000'000;
  std::optional<std::uint64_t> seed;  // enables sampling above the
                                      // exhaustive per-entry maximum
  int sample_count = 200;
  bool timing = false;  // fill elapsed_ms from the wall clock
};

/// All entry ids check_all runs, in report order.
const std::vector<std::string>& verifier_entry_ids();

/// Exhaustively checks one axiom (or derived-theorem entry) over all
/// instances up to its effective size (the requested limit clamped to the
/// entry's exhaustive maximum - 2 for the doubly-exponential function-set
/// search, 3 or 4 elsewhere). Existence clauses are checked by running the
/// construction; uniqueness clauses by counting all candidate mediators.
/// Throws BudgetExceeded when the instance count passes the ceiling.
Report check_axiom(const std::string& id, const VerifierConfig& cfg);
Report check_axiom(const std::string& id, int size_limit);

/// One report per axiom plus the derived-theorem entries. BudgetExceeded
/// in one entry becomes a failing report for it; the suite continues.
std::vector<Report> check_all(const VerifierConfig& cfg);
std::vector<Report> check_all(int size_limit);

enum class Mutation {
  swap_projection,
  drop_fibre_element,
  break_curry,
  wrong_truth_element,
  non_least_choice,
};

/// Negative controls: corrupts a construction and re-runs the checks that
/// should notice. Returns every affected report; all mutations produce at
/// least one failing report with a witness (for non_least_choice the axiom
/// entry itself still passes - the axiom is existence-only - and the
/// failing report is the canonical-least contract check).
/// Throws InapplicableMutation when the pair makes no sense.
std::vector<Report> mutate_and_check(const std::string& construction_id,
                                     Mutation mutation);

}  // namespace etcs
