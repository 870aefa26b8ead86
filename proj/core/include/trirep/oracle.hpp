#pragma once

// Brute-force representation counters. These are the ground truth every
// closed form is tested against, so they share no code with the formulas.

#include <cstdint>

#include "trirep/form.hpp"

namespace trirep::oracle {

inline constexpr std::int64_t kDefaultWorkBudget = 1'000'000'000;

/// Cap on inner-loop iterations of a single count.
struct WorkBudget {
  std::int64_t limit = kDefaultWorkBudget;
};

/// Upper bound on inner-loop iterations count_squares(form, m) performs.
std::int64_t enumeration_cost(const Form& form, std::int64_t m);

/// N(form; m): integer quadruples with a x^2 + b y^2 + c z^2 + d w^2 = m.
std::int64_t count_squares(const Form& form, std::int64_t m, WorkBudget budget = {});

/// N0(form; m): the same, restricted to all-odd quadruples.
std::int64_t count_odd_squares(const Form& form, std::int64_t m, WorkBudget budget = {});

/// t(form; n) = N0(form; 8n + a + b + c + d).
std::int64_t count_triangular(const Form& form, std::int64_t n, WorkBudget budget = {});

/// t(form; n) by enumerating triangular values j(j+1)/2 directly; each value
/// has two integer preimages per slot, hence the factor 16.
std::int64_t count_triangular_direct(const Form& form, std::int64_t n, WorkBudget budget = {});

/// t'(form; n) = t(form; n) / 16. Throws InvariantViolation if 16 does not divide t.
std::int64_t count_positive_triangular(const Form& form, std::int64_t n, WorkBudget budget = {});

}  // namespace trirep::oracle
