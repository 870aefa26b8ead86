#pragma once

// Exact integer arithmetic functions used by every closed form: divisor
// sums, Kronecker symbols, twisted divisor sums, binary-form lattice sums.
//
// Everything is int64 with overflow checks; values stay far from the limit
// for arguments up to about 1e9.

#include <cstdint>
#include <vector>

namespace trirep::arith {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. `factors` is sorted by prime
/// and empty for 1.
struct Factorization {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^exponent; equals `value` for any well-formed instance.
  std::int64_t product() const;
};

/// Throws DomainError for n <= 0. Uses a smallest-prime-factor sieve below
/// 2^20 and trial division above it.
Factorization factorize(std::int64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// n = 2^alpha * 3^beta * n1 with gcd(n1, 6) = 1.
struct Decomposition {
  int alpha = 0;
  int beta = 0;
  std::int64_t n1 = 1;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(std::int64_t n);

/// Sum of positive divisors; 0 for x <= 0.
std::int64_t sigma(std::int64_t x);

/// sigma(n / q) when q divides n and the quotient is positive, else 0.
std::int64_t sigma_of_quotient(std::int64_t n, std::int64_t q);

/// Kronecker symbol (a / m), extended to every integer m.
int kronecker(std::int64_t a, std::int64_t m);

/// The four Kronecker-twisted divisor sums
///   A(n) = sum d (12 / (n/d)),      B(n) = sum d (-3/d)(-4/(n/d)),
///   C(n) = sum d (-3/(n/d))(-4/d),  D(n) = sum d (12/d).
struct TwistedSums {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const TwistedSums&, const TwistedSums&) = default;
};

/// Direct divisor enumeration.
TwistedSums twisted_sums(std::int64_t n);

/// sum_{d | m} d (3/d). Requires m >= 1.
std::int64_t kronecker3_divisor_sum(std::int64_t m);

/// sum_{d | m} d (2/d). Requires m >= 1.
std::int64_t kronecker2_divisor_sum(std::int64_t m);

/// A(m) through the reduced form (3/m) * sum_{d|m} d (3/d); valid only for
/// gcd(m, 6) = 1, throws DomainError otherwise.
std::int64_t reduced_twisted_a(std::int64_t m);

/// Sum of r over all (r, s) in Z^2 with n = r^2 + m s^2 and r = 1 (mod 4).
/// m must be 2 or 4 and n odd and positive.
std::int64_t r_lattice_sum(int m, std::int64_t n);

/// sum_{d | n} (n/d)(2/d) for odd positive n.
std::int64_t codivisor_kronecker2_sum(std::int64_t n);

/// Coefficient of q^n in q * prod_{k>=1} (1 - q^{6k})^4, computed as
///   (1/3) sum (-1)^a a   over 4n = a^2 + 3b^2, a = 2 (mod 3), b = a + 2 (mod 4).
std::int64_t eta6_coefficient(std::int64_t n);

}  // namespace trirep::arith
