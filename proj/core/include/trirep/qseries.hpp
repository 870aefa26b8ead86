#pragma once

// Truncated integer power series in q. A Series of truncation T carries the
// coefficients of q^0 .. q^T exactly; terms above q^T are unknown.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trirep/form.hpp"

namespace trirep::qseries {

class Series {
 public:
  /// Zero series of the given truncation.
  explicit Series(std::size_t truncation);
  /// Takes ownership of coefficients 0..T; throws DomainError when empty.
  explicit Series(std::vector<std::int64_t> coeffs);

  /// The constant 1.
  static Series one(std::size_t truncation);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  std::span<const std::int64_t> coefficients() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Same series, truncated further. `truncation` must not exceed the current one.
  Series truncated(std::size_t truncation) const;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// First index at which a and b differ, comparing only up to the smaller
/// truncation; nullopt when they agree there.
std::optional<std::size_t> first_difference(const Series& a, const Series& b);

/// phi(q^k) = sum_{j in Z} q^{k j^2}
Series theta_phi(std::int64_t k, std::size_t truncation);

/// psi(q^k) = sum_{j >= 0} q^{k j(j+1)/2}
Series theta_psi(std::int64_t k, std::size_t truncation);

/// prod_{n >= 1} (1 - q^{k n})^e
Series eta_power(std::int64_t k, int e, std::size_t truncation);

/// Cauchy product truncated at min of the operand truncations. Throws
/// OverflowError when a coefficient leaves int64.
Series multiply(const Series& a, const Series& b);

/// Coefficient-wise sum / difference, truncated at the smaller order.
Series add(const Series& a, const Series& b);
Series subtract(const Series& a, const Series& b);

/// factor * s
Series scale(const Series& s, std::int64_t factor);

/// q^k * s; the truncation is unchanged and the top k terms fall off.
Series shift(const Series& s, std::size_t k);

/// Result coefficient j is s[stride * j + offset]; truncation
/// floor((T - offset) / stride). Throws DomainError when offset > T or stride == 0.
Series extract(const Series& s, std::size_t stride, std::size_t offset);

/// psi(q^a) psi(q^b) psi(q^c) psi(q^d): coefficient n is t'(a,b,c,d; n).
Series triangular_generating(const Form& form, std::size_t truncation);

/// phi(q^a) phi(q^b) phi(q^c) phi(q^d): coefficient n is N(a,b,c,d; n).
Series square_generating(const Form& form, std::size_t truncation);

}  // namespace trirep::qseries
