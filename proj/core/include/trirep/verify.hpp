#pragma once

// Batch verification: closed forms against the brute-force oracle, q-series
// identities to a truncation order, structural relations between counts,
// and the conjectured t(1,1,3,4) formula.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trirep/oracle.hpp"
#include "trirep/qseries.hpp"

namespace trirep::verify {

enum class Status { pass, fail, budget_exceeded };

const char* to_string(Status s);

/// One failed comparison. `label` names the compared quantity, e.g.
/// "t(1,3,9,9)", and `argument` the point it was compared at.
struct Counterexample {
  std::string label;
  std::int64_t argument = 0;
  std::optional<std::int64_t> oracle;
  std::optional<std::int64_t> formula;
  std::string detail;  // set when evaluation threw instead of returning

  std::string input() const;
  friend auto operator<=>(const Counterexample& a, const Counterexample& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.argument <=> b.argument;
  }
  friend bool operator==(const Counterexample& a, const Counterexample& b) {
    return a.label == b.label && a.argument == b.argument;
  }
};

/// A deviation between printed formula text and the oracle that is known and
/// does not count as a failure.
struct Finding {
  std::string id;
  std::string detail;
};

/// Every compared value, kept only when Options::record_cases is set.
struct CaseRecord {
  std::string label;
  std::int64_t argument = 0;
  std::int64_t oracle = 0;
  std::int64_t formula = 0;
};

struct Report {
  std::string suite;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Status status = Status::pass;
  std::vector<Counterexample> counterexamples;  // sorted by (label, argument)
  std::vector<Finding> findings;
  std::map<std::string, std::int64_t> case_counts;
  std::vector<CaseRecord> cases;
  std::string note;
  std::int64_t elapsed_ms = 0;

  std::int64_t total_cases() const;
  bool passed() const { return status == Status::pass; }
};

struct Options {
  unsigned jobs = 1;
  oracle::WorkBudget budget{};
  bool record_cases = false;
};

/// Defaults sized for well under a minute on a laptop.
inline constexpr std::int64_t kDefaultTMax = 300;
inline constexpr std::int64_t kDefaultNMax = 2000;
inline constexpr std::size_t kDefaultSeriesOrder = 512;
inline constexpr std::int64_t kDefaultRelationsMax = 100;
inline constexpr std::int64_t kDefaultConjectureMax = 1000;
inline constexpr std::int64_t kDefaultEtaMax = 2000;
inline constexpr std::int64_t kGeneratingOracleOrder = 50;
inline constexpr std::int64_t kInclusionExclusionMax = 30;
inline constexpr int kInclusionExclusionForms = 20;

/// Every registered t closed form against count_triangular for n in [0, n_max].
Report verify_t_formulas(std::int64_t n_max, const Options& options = {});

/// Every registered N closed form against count_squares on in-domain m in [1, m_max].
Report verify_n_formulas(std::int64_t m_max, const Options& options = {});

/// Theta and eta identities to order `truncation` (>= 8), plus the four-fold
/// theta products against oracle counts up to min(truncation, 50).
Report verify_series_identities(std::size_t truncation, const Options& options = {});

/// eta6_coefficient(n) against the coefficients of q E_6^4 = q prod (1 - q^{6j})^4 for n <= n_max.
Report check_eta_coefficients(std::int64_t n_max, const Options& options = {});

/// Capacity-constant relations, the two count_t routes, 16 | t, the
/// 16-term inclusion-exclusion, and N(1,3,9,9; 8n+22) = 40 t'(1,3,9,9; n).
Report verify_relations(std::int64_t n_max, const Options& options = {});

/// Conjectured t(1,1,3,4; n) against the oracle for n in [0, n_max].
Report check_conjecture(std::int64_t n_max, const Options& options = {});

struct AllRanges {
  std::int64_t t_max = kDefaultTMax;
  std::int64_t n_max = kDefaultNMax;
  std::size_t series_order = kDefaultSeriesOrder;
  std::int64_t relations_max = kDefaultRelationsMax;
  std::int64_t conjecture_max = kDefaultConjectureMax;
  std::int64_t eta_max = kDefaultEtaMax;
};

/// Runs every suite and merges the reports.
Report verify_all(const AllRanges& ranges, const Options& options = {});

/// Combines reports: counterexamples and findings are concatenated, the
/// status is the worst of the parts.
Report merge(std::string suite, const std::vector<Report>& parts);

/// Counterexample at the first index where `got` differs from `expected`.
std::optional<Counterexample> compare_series(const std::string& label, const qseries::Series& expected,
                                             const qseries::Series& got);

/// The twenty forms exercised by the inclusion-exclusion check (fixed seed).
std::vector<Form> inclusion_exclusion_forms();

/// Every form with a + b + c + d <= 8, sorted.
std::vector<Form> small_forms();

}  // namespace trirep::verify
