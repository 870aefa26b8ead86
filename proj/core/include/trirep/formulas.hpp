#pragma once

// Closed-form evaluators for t(a,b,c,d; n) and N(a,b,c,d; m).
//
// Each registered formula is a list of residue-class branches. A t-formula's
// branches partition the non-negative integers; an N-formula's branches
// describe the subset of m on which the cited closed form is valid.

#include <cstdint>
#include <string>
#include <vector>

#include "trirep/form.hpp"
#include "trirep/oracle.hpp"

namespace trirep::formulas {

enum class Quantity { t, n };
enum class Status { theorem, cited_lemma, conjecture };

const char* to_string(Quantity q);
const char* to_string(Status s);

using Evaluator = std::int64_t (*)(std::int64_t);

/// Applies to arguments congruent to one of `residues` modulo `modulus`.
struct Branch {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues{0};
  std::string expression;
  Evaluator evaluate = nullptr;

  bool matches(std::int64_t n) const;
};

struct FormulaEntry {
  Quantity quantity = Quantity::t;
  Form form{1, 1, 1, 1};  // canonical (sorted) coefficients
  std::vector<Branch> branches;
  std::string source;
  Status status = Status::theorem;

  /// Smallest admissible argument: 0 for t, 1 for N.
  std::int64_t min_argument() const { return quantity == Quantity::t ? 0 : 1; }
  bool in_domain(std::int64_t n) const;
  /// Throws DomainError outside the domain.
  std::int64_t evaluate(std::int64_t n) const;
  /// Residues modulo the lcm of branch moduli matched by no branch.
  std::vector<std::int64_t> uncovered_residues() const;
  /// Residues modulo the lcm of branch moduli matched by more than one branch.
  std::vector<std::int64_t> overlapping_residues() const;
};

/// A published formula text that the oracle contradicts, together with the
/// printed branch so verification can demonstrate the discrepancy.
struct KnownErratum {
  std::string id;
  std::string printed;
  std::string corrected;
};

const std::vector<FormulaEntry>& t_registry();
const std::vector<FormulaEntry>& n_registry();
const std::vector<KnownErratum>& known_errata();

/// Lookup through the canonical form; nullptr when nothing is registered.
const FormulaEntry* find_t_entry(const Form& form);
/// The N-entry for `form` whose domain contains m, or nullptr.
const FormulaEntry* find_n_entry(const Form& form, std::int64_t m);
bool has_n_entry(const Form& form);

/// t(form; n) from the registered closed form. Throws UnsupportedForm for
/// quadruples without one and DomainError for n < 0.
std::int64_t t_formula(const Form& form, std::int64_t n);

/// N(form; m) from the registered closed form. Throws UnsupportedForm when no
/// entry exists for the form and DomainError when m is outside every domain.
std::int64_t n_formula(const Form& form, std::int64_t m);

/// Even-n branch of t(1,1,3,3; n) exactly as published: 4 sigma(n1), n + 1 = 2^a 3^b n1.
std::int64_t t_1133_even_as_printed(std::int64_t n);

/// C(a,b,c,d) = 16 + 4 i1 (i1 - 1) i2 + 8 i1 i3, i_j = multiplicity of j.
/// Throws DomainError when a + b + c + d > 8.
std::int64_t printed_capacity_constant(const Form& form);

/// The constant linking N and t' measured by the oracle at n = 0:
/// N(F; s) / t'(F; 0) for s = a+b+c+d <= 7 and (N(F; 8) - N(F; 2)) / t'(F; 0) for s = 8.
std::int64_t oracle_capacity_constant(const Form& form, oracle::WorkBudget budget = {});

/// Signed sum over the 16 ways of multiplying a subset of the coefficients by
/// 4 of N(scaled form; 8n + a + b + c + d), sign (-1)^{subset size}.
std::int64_t t_by_inclusion_exclusion(const Form& form, std::int64_t n,
                                      oracle::WorkBudget budget = {});

/// Conjectured closed form for t(1,1,3,4; n).
std::int64_t conjectured_t_1134(std::int64_t n);

/// Registry entry describing the conjectured t(1,1,3,4) formula; kept apart
/// from t_registry() so theorem suites never pick it up.
const FormulaEntry& conjecture_entry();

}  // namespace trirep::formulas
