#include "trirep/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "trirep/checked.hpp"
#include "trirep/errors.hpp"

namespace trirep::arith {
namespace {

constexpr std::int64_t kSieveLimit = std::int64_t{1} << 20;

// Smallest prime factor for every index below kSieveLimit. Built on first
// use, read-only afterwards.
const std::vector<std::int32_t>& smallest_prime_factor() {
  static const std::vector<std::int32_t> spf = [] {
    std::vector<std::int32_t> table(kSieveLimit, 0);
    for (std::int64_t i = 2; i < kSieveLimit; ++i) {
      if (table[i] != 0) continue;
      table[i] = static_cast<std::int32_t>(i);
      for (std::int64_t j = i * i; j < kSieveLimit; j += i) {
        if (table[j] == 0) table[j] = static_cast<std::int32_t>(i);
      }
    }
    return table;
  }();
  return spf;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol for odd m > 0.
int jacobi(std::int64_t a, std::int64_t m) {
  a = mod_floor(a, m);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::int64_t r = m & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if ((a & 3) == 3 && (m & 3) == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(n));
  }
}

}  // namespace

std::int64_t Factorization::product() const {
  std::int64_t p = 1;
  for (const auto& f : factors) p = checked_mul(p, checked_pow(f.prime, f.exponent));
  return p;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization out;
  out.value = n;
  auto push = [&out](std::int64_t p) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  };

  if (n < kSieveLimit) {
    const auto& spf = smallest_prime_factor();
    while (n > 1) {
      const std::int64_t p = spf[n];
      push(p);
      n /= p;
    }
    return out;
  }

  while ((n & 1) == 0) {
    push(2);
    n >>= 1;
  }
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    while (n % d == 0) {
      push(d);
      n /= d;
    }
  }
  if (n > 1) push(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition decompose(std::int64_t n) {
  require_positive(n, "decompose");
  Decomposition d;
  while (n % 2 == 0) {
    n /= 2;
    ++d.alpha;
  }
  while (n % 3 == 0) {
    n /= 3;
    ++d.beta;
  }
  d.n1 = n;
  return d;
}

std::int64_t sigma(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t s = 1;
  for (const auto& [p, e] : factorize(x).factors) {
    // 1 + p + ... + p^e
    std::int64_t term = 1;
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk = checked_mul(pk, p);
      term = checked_add(term, pk);
    }
    s = checked_mul(s, term);
  }
  return s;
}

std::int64_t sigma_of_quotient(std::int64_t n, std::int64_t q) {
  if (q < 1) throw DomainError("sigma_of_quotient: divisor must be >= 1");
  if (n % q != 0) return 0;
  return sigma(n / q);
}

int kronecker(std::int64_t a, std::int64_t m) {
  if (m == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (m < 0) {
    if (a < 0) result = -result;
    if (m == INT64_MIN) {
      // |m| = 2^63
      if ((a & 1) == 0) return 0;
      const std::int64_t r = mod_floor(a, 8);
      return (r == 3 || r == 5) ? -result : result;  // odd power of 2
    }
    m = -m;
  }
  while ((m & 1) == 0) {
    if ((a & 1) == 0) return 0;
    const std::int64_t r = mod_floor(a, 8);
    if (r == 3 || r == 5) result = -result;
    m >>= 1;
  }
  if (m == 1) return result;
  return result * jacobi(a, m);
}

TwistedSums twisted_sums(std::int64_t n) {
  require_positive(n, "twisted_sums");
  TwistedSums s;
  for (const std::int64_t d : divisors(n)) {
    const std::int64_t e = n / d;
    s.a = checked_add(s.a, d * kronecker(12, e));
    s.b = checked_add(s.b, d * kronecker(-3, d) * kronecker(-4, e));
    s.c = checked_add(s.c, d * kronecker(-3, e) * kronecker(-4, d));
    s.d = checked_add(s.d, d * kronecker(12, d));
  }
  return s;
}

std::int64_t kronecker3_divisor_sum(std::int64_t m) {
  require_positive(m, "kronecker3_divisor_sum");
  std::int64_t s = 0;
  for (const std::int64_t d : divisors(m)) s = checked_add(s, d * kronecker(3, d));
  return s;
}

std::int64_t kronecker2_divisor_sum(std::int64_t m) {
  require_positive(m, "kronecker2_divisor_sum");
  std::int64_t s = 0;
  for (const std::int64_t d : divisors(m)) s = checked_add(s, d * kronecker(2, d));
  return s;
}

std::int64_t reduced_twisted_a(std::int64_t m) {
  require_positive(m, "reduced_twisted_a");
  if (m % 2 == 0 || m % 3 == 0) {
    throw DomainError("reduced_twisted_a: gcd(m, 6) must be 1, got m = " + std::to_string(m));
  }
  return kronecker(3, m) * kronecker3_divisor_sum(m);
}

std::int64_t r_lattice_sum(int m, std::int64_t n) {
  if (m != 2 && m != 4) throw DomainError("r_lattice_sum: m must be 2 or 4");
  if (n < 1 || n % 2 == 0) {
    throw DomainError("r_lattice_sum: n must be odd and positive, got " + std::to_string(n));
  }
  std::int64_t total = 0;
  const std::int64_t s_max = isqrt(n / m);
  for (std::int64_t s = 0; s <= s_max; ++s) {
    const std::int64_t r = exact_sqrt(n - m * s * s);
    if (r < 0) continue;
    const std::int64_t weight = s == 0 ? 1 : 2;  // +s and -s
    // r is odd here since n is odd and m s^2 is even; exactly one of r, -r is 1 mod 4.
    const std::int64_t signed_r = mod_floor(r, 4) == 1 ? r : -r;
    total = checked_add(total, weight * signed_r);
  }
  return total;
}

std::int64_t codivisor_kronecker2_sum(std::int64_t n) {
  if (n < 1 || n % 2 == 0) {
    throw DomainError("codivisor_kronecker2_sum: n must be odd and positive, got " +
                      std::to_string(n));
  }
  std::int64_t s = 0;
  for (const std::int64_t d : divisors(n)) s = checked_add(s, (n / d) * kronecker(2, d));
  return s;
}

std::int64_t eta6_coefficient(std::int64_t n) {
  require_positive(n, "eta6_coefficient");
  const std::int64_t target = checked_mul(4, n);
  const std::int64_t b_max = isqrt(target / 3);
  std::int64_t total = 0;
  for (std::int64_t b = -b_max; b <= b_max; ++b) {
    const std::int64_t a = exact_sqrt(target - 3 * b * b);
    if (a < 0) continue;
    for (const int sign : {1, -1}) {
      if (sign < 0 && a == 0) break;
      const std::int64_t sa = sign * a;
      if (mod_floor(sa, 3) != 2) continue;
      if (mod_floor(b - sa - 2, 4) != 0) continue;
      total = checked_add(total, (sa & 1) ? -sa : sa);
    }
  }
  return exact_div(total, 3, "eta6_coefficient");
}

}  // namespace trirep::arith
