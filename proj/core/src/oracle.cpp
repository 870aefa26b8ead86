#include "trirep/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "trirep/checked.hpp"
#include "trirep/errors.hpp"

namespace trirep::oracle {
namespace {

void require_nonnegative(std::int64_t m, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + ": argument must be >= 0");
}

// Coefficients sorted descending: the three largest are looped over and the
// smallest (widest range) is solved by an exact square root.
std::array<std::int64_t, 4> loop_order(const Form& form) {
  auto c = form.coefficients();
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

void charge(const Form& form, std::int64_t m, WorkBudget budget) {
  const std::int64_t cost = enumeration_cost(form, m);
  if (cost > budget.limit) {
    throw BudgetExceeded("enumerating (" + form.to_string() + ") at " + std::to_string(m) +
                         " needs ~" + std::to_string(cost) + " iterations, budget is " +
                         std::to_string(budget.limit));
  }
}

bool is_triangular(std::int64_t v, std::int64_t& root) {
  // v = j(j+1)/2  <=>  8v + 1 = (2j + 1)^2
  const std::int64_t s = exact_sqrt(8 * v + 1);
  if (s < 0) return false;
  root = (s - 1) / 2;
  return true;
}

}  // namespace

std::int64_t enumeration_cost(const Form& form, std::int64_t m) {
  if (m <= 0) return 1;
  const auto c = loop_order(form);
  std::int64_t cost = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t range = 2 * isqrt(m / c[i]) + 1;
    if (cost > kDefaultWorkBudget * 1000 / range) return INT64_MAX;
    cost *= range;
  }
  return cost;
}

std::int64_t count_squares(const Form& form, std::int64_t m, WorkBudget budget) {
  require_nonnegative(m, "count_squares");
  charge(form, m, budget);
  const auto [a, b, c, d] = loop_order(form);
  std::int64_t count = 0;
  const std::int64_t x_max = isqrt(m / a);
  for (std::int64_t x = -x_max; x <= x_max; ++x) {
    const std::int64_t r1 = m - a * x * x;
    const std::int64_t y_max = isqrt(r1 / b);
    for (std::int64_t y = -y_max; y <= y_max; ++y) {
      const std::int64_t r2 = r1 - b * y * y;
      const std::int64_t z_max = isqrt(r2 / c);
      for (std::int64_t z = -z_max; z <= z_max; ++z) {
        const std::int64_t r3 = r2 - c * z * z;
        if (r3 % d != 0) continue;
        const std::int64_t w = exact_sqrt(r3 / d);
        if (w < 0) continue;
        count += w == 0 ? 1 : 2;
      }
    }
  }
  return count;
}

std::int64_t count_odd_squares(const Form& form, std::int64_t m, WorkBudget budget) {
  require_nonnegative(m, "count_odd_squares");
  charge(form, m, budget);
  const auto [a, b, c, d] = loop_order(form);
  std::int64_t count = 0;
  const std::int64_t x_max = isqrt(m / a);
  // Start at the largest odd value <= the bound and walk down in steps of 2;
  // starting odd keeps every visited value odd.
  const auto odd_floor = [](std::int64_t v) { return (v & 1) ? v : v - 1; };
  for (std::int64_t x = -odd_floor(x_max); x <= x_max; x += 2) {
    const std::int64_t r1 = m - a * x * x;
    const std::int64_t y_max = isqrt(r1 / b);
    for (std::int64_t y = -odd_floor(y_max); y <= y_max; y += 2) {
      const std::int64_t r2 = r1 - b * y * y;
      const std::int64_t z_max = isqrt(r2 / c);
      for (std::int64_t z = -odd_floor(z_max); z <= z_max; z += 2) {
        const std::int64_t r3 = r2 - c * z * z;
        if (r3 % d != 0) continue;
        const std::int64_t w = exact_sqrt(r3 / d);
        if (w > 0 && (w & 1) == 1) count += 2;
      }
    }
  }
  return count;
}

std::int64_t count_triangular(const Form& form, std::int64_t n, WorkBudget budget) {
  require_nonnegative(n, "count_triangular");
  return count_odd_squares(form, checked_add(checked_mul(8, n), form.sum()), budget);
}

std::int64_t count_triangular_direct(const Form& form, std::int64_t n, WorkBudget budget) {
  require_nonnegative(n, "count_triangular_direct");
  charge(form, checked_add(checked_mul(8, n), form.sum()), budget);
  const auto [a, b, c, d] = loop_order(form);
  // x(x-1)/2 <= v  <=>  1 - h <= x <= h  with h the largest such positive x.
  const auto upper = [](std::int64_t v) { return (1 + isqrt(8 * v + 1)) / 2; };
  const auto tri = [](std::int64_t x) { return x * (x - 1) / 2; };
  std::int64_t count = 0;
  std::int64_t root = 0;
  const std::int64_t x_hi = upper(n / a);
  for (std::int64_t x = 1 - x_hi; x <= x_hi; ++x) {
    const std::int64_t r1 = n - a * tri(x);
    const std::int64_t y_hi = upper(r1 / b);
    for (std::int64_t y = 1 - y_hi; y <= y_hi; ++y) {
      const std::int64_t r2 = r1 - b * tri(y);
      const std::int64_t z_hi = upper(r2 / c);
      for (std::int64_t z = 1 - z_hi; z <= z_hi; ++z) {
        const std::int64_t r3 = r2 - c * tri(z);
        // w(w-1)/2 = v has exactly the two integer roots w and 1 - w.
        if (r3 % d == 0 && is_triangular(r3 / d, root)) count += 2;
      }
    }
  }
  return count;
}

std::int64_t count_positive_triangular(const Form& form, std::int64_t n, WorkBudget budget) {
  const std::int64_t t = count_triangular(form, n, budget);
  return exact_div(t, 16, "t / 16");
}

}  // namespace trirep::oracle
