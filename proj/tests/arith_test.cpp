#include <gtest/gtest.h>

#include <numeric>

#include "trirep/arith.hpp"
#include "trirep/checked.hpp"
#include "trirep/errors.hpp"

namespace trirep::arith {
namespace {

std::int64_t pow_int(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

TEST(Factorize, SmallValues) {
  EXPECT_TRUE(factorize(1).factors.empty());
  const auto f12 = factorize(12);
  ASSERT_EQ(f12.factors.size(), 2u);
  EXPECT_EQ(f12.factors[0].prime, 2);
  EXPECT_EQ(f12.factors[0].exponent, 2);
  EXPECT_EQ(f12.factors[1].prime, 3);
  EXPECT_EQ(f12.factors[1].exponent, 1);
  // 8009 is prime.
  const auto f = factorize(8009);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].prime, 8009);
}

TEST(Factorize, ProductRoundTrip) {
  for (std::int64_t n : {2LL, 97LL, 1048575LL, 1048576LL, 1048583LL, 999999937LL, 600851475143LL}) {
    EXPECT_EQ(factorize(n).product(), n) << n;
  }
  for (std::int64_t n = 1; n <= 5000; ++n) EXPECT_EQ(factorize(n).product(), n);
}

TEST(Factorize, RejectsNonPositive) {
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-7), DomainError);
}

TEST(Decompose, Examples) {
  const auto d1 = decompose(1);
  EXPECT_EQ(d1.alpha, 0);
  EXPECT_EQ(d1.beta, 0);
  EXPECT_EQ(d1.n1, 1);
  const auto d72 = decompose(72);
  EXPECT_EQ(d72.alpha, 3);
  EXPECT_EQ(d72.beta, 2);
  EXPECT_EQ(d72.n1, 1);
  const auto d15 = decompose(15);
  EXPECT_EQ(d15.alpha, 0);
  EXPECT_EQ(d15.beta, 1);
  EXPECT_EQ(d15.n1, 5);
  EXPECT_THROW(decompose(0), DomainError);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(1), 1);
  EXPECT_EQ(sigma(6), 12);
  EXPECT_EQ(sigma(9), 13);
  EXPECT_EQ(sigma(-3), 0);
  EXPECT_EQ(sigma(0), 0);
}

TEST(Sigma, QuotientExamples) {
  EXPECT_EQ(sigma_of_quotient(18, 9), 3);
  EXPECT_EQ(sigma_of_quotient(20, 9), 0);
  EXPECT_EQ(sigma_of_quotient(3, 9), 0);
  EXPECT_EQ(sigma_of_quotient(-9, 9), 0);
  EXPECT_THROW(sigma_of_quotient(9, 0), DomainError);
}

TEST(Sigma, MatchesDivisorSum) {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    const auto ds = divisors(n);
    EXPECT_EQ(sigma(n), std::accumulate(ds.begin(), ds.end(), std::int64_t{0})) << n;
  }
}

TEST(Sigma, MultiplicativeOnCoprimePairs) {
  for (std::int64_t m = 1; m <= 1000; ++m) {
    for (std::int64_t n = m; n <= 1000; n += 7) {
      if (std::gcd(m, n) == 1) {
        ASSERT_EQ(sigma(m * n), sigma(m) * sigma(n)) << m << " " << n;
      }
    }
  }
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(2, 7), 1);
  EXPECT_EQ(kronecker(3, 23), 1);
  EXPECT_EQ(kronecker(-4, 3), -1);
  for (std::int64_t a = -20; a <= 20; ++a) EXPECT_EQ(kronecker(a, 1), 1);
}

TEST(Kronecker, ExtensionAtSpecialBottoms) {
  EXPECT_EQ(kronecker(1, 0), 1);
  EXPECT_EQ(kronecker(-1, 0), 1);
  EXPECT_EQ(kronecker(2, 0), 0);
  EXPECT_EQ(kronecker(5, -1), 1);
  EXPECT_EQ(kronecker(-5, -1), -1);
  EXPECT_EQ(kronecker(4, 2), 0);
  EXPECT_EQ(kronecker(1, 2), 1);
  EXPECT_EQ(kronecker(3, 2), -1);
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(7, 2), 1);
  EXPECT_EQ(kronecker(-3, 2), -1);
}

TEST(Kronecker, EulerCriterionAtOddPrimes) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    for (std::int64_t a = -50; a <= 50; ++a) {
      std::int64_t r = 1;
      const std::int64_t base = ((a % p) + p) % p;
      for (std::int64_t i = 0; i < (p - 1) / 2; ++i) r = r * base % p;
      const int expected = base == 0 ? 0 : (r == 1 ? 1 : -1);
      ASSERT_EQ(kronecker(a, p), expected) << a << "/" << p;
    }
  }
}

TEST(Kronecker, CompletelyMultiplicativeInTop) {
  for (std::int64_t m = 1; m <= 99; m += 2) {
    for (std::int64_t a = -30; a <= 30; ++a) {
      for (std::int64_t b = -30; b <= 30; ++b) {
        ASSERT_EQ(kronecker(a * b, m), kronecker(a, m) * kronecker(b, m)) << a << "," << b << "/" << m;
      }
    }
  }
}

TEST(TwistedSums, Examples) {
  const auto one = twisted_sums(1);
  EXPECT_EQ(one.a, 1);
  EXPECT_EQ(one.b, 1);
  EXPECT_EQ(one.c, 1);
  EXPECT_EQ(one.d, 1);
  const auto five = twisted_sums(5);
  EXPECT_EQ(five.a, 4);
  EXPECT_EQ(five.b, -4);
  EXPECT_EQ(five.c, 4);
  EXPECT_EQ(five.d, -4);
  EXPECT_EQ(twisted_sums(15).a, 12);
  EXPECT_THROW(twisted_sums(0), DomainError);
}

// Reduction to the part prime to 6, against direct divisor enumeration.
TEST(TwistedSums, MultiplicativeReduction) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const auto [alpha, beta, n1] = decompose(n);
    const auto s = twisted_sums(n);
    const std::int64_t a1 = twisted_sums(n1).a;
    const std::int64_t sign_ab = (alpha + beta) % 2 == 0 ? 1 : -1;
    const std::int64_t sign_c = (alpha + beta + (n1 - 1) / 2) % 2 == 0 ? 1 : -1;
    ASSERT_EQ(s.a, pow_int(2, alpha) * pow_int(3, beta) * a1) << n;
    ASSERT_EQ(s.b, sign_ab * pow_int(2, alpha) * kronecker(-3, n1) * a1) << n;
    ASSERT_EQ(s.c, sign_c * pow_int(3, beta) * a1) << n;
    ASSERT_EQ(s.d, kronecker(3, n1) * a1) << n;
  }
}

TEST(ReducedTwistedA, Examples) {
  EXPECT_EQ(reduced_twisted_a(1), 1);
  EXPECT_EQ(reduced_twisted_a(5), 4);
  EXPECT_EQ(reduced_twisted_a(11), 12);
  EXPECT_THROW(reduced_twisted_a(6), DomainError);
  EXPECT_THROW(reduced_twisted_a(9), DomainError);
  EXPECT_THROW(reduced_twisted_a(0), DomainError);
}

// Closed form of A on arguments prime to 6.
TEST(ReducedTwistedA, AgreesWithTwistedSums) {
  for (std::int64_t m = 1; m <= 10000; ++m) {
    if (std::gcd(m, std::int64_t{6}) != 1) continue;
    ASSERT_EQ(reduced_twisted_a(m), twisted_sums(m).a) << m;
  }
}

TEST(LatticeSum, Examples) {
  EXPECT_EQ(r_lattice_sum(4, 5), 2);
  EXPECT_EQ(r_lattice_sum(4, 9), -3);
  EXPECT_EQ(r_lattice_sum(4, 13), -6);
  EXPECT_EQ(r_lattice_sum(2, 11), -6);
  EXPECT_EQ(r_lattice_sum(2, 13), 0);
  EXPECT_EQ(r_lattice_sum(4, 1), 1);
}

TEST(LatticeSum, DomainErrors) {
  EXPECT_THROW(r_lattice_sum(3, 5), DomainError);
  EXPECT_THROW(r_lattice_sum(4, 6), DomainError);
  EXPECT_THROW(r_lattice_sum(2, 0), DomainError);
  EXPECT_THROW(r_lattice_sum(2, -3), DomainError);
}

TEST(LatticeSum, VanishingResidues) {
  for (std::int64_t n = 1; n <= 10000; n += 2) {
    if (n % 4 == 3) {
      ASSERT_EQ(r_lattice_sum(4, n), 0) << n;
    }
    if (n % 8 == 5 || n % 8 == 7) {
      ASSERT_EQ(r_lattice_sum(2, n), 0) << n;
    }
  }
}

TEST(CodivisorSum, Examples) {
  EXPECT_EQ(codivisor_kronecker2_sum(1), 1);
  EXPECT_EQ(codivisor_kronecker2_sum(9), 7);
  EXPECT_EQ(codivisor_kronecker2_sum(11), 10);
  EXPECT_THROW(codivisor_kronecker2_sum(4), DomainError);
}

TEST(Eta6Coefficient, Examples) {
  EXPECT_EQ(eta6_coefficient(1), 1);
  EXPECT_EQ(eta6_coefficient(2), 0);
  EXPECT_EQ(eta6_coefficient(7), -4);
  EXPECT_EQ(eta6_coefficient(13), 2);
  EXPECT_THROW(eta6_coefficient(0), DomainError);
}

TEST(Checked, OverflowIsReported) {
  EXPECT_THROW(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), OverflowError);
  EXPECT_THROW(checked_add(INT64_MAX, std::int64_t{1}), OverflowError);
  EXPECT_THROW(exact_div(7, 2, "test"), InvariantViolation);
  EXPECT_EQ(exact_div(-8, 2, "test"), -4);
}

TEST(Checked, Isqrt) {
  for (std::int64_t r = 0; r <= 3000; ++r) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r > 0) {
      EXPECT_EQ(isqrt(r * r - 1), r - 1);
    }
  }
  EXPECT_EQ(isqrt(INT64_MAX), 3037000499);
  EXPECT_EQ(exact_sqrt(49), 7);
  EXPECT_EQ(exact_sqrt(50), -1);
}

}  // namespace
}  // namespace trirep::arith
