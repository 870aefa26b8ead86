#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace trirep {

/// Coefficients (a, b, c, d) of the quaternary form a x^2 + b y^2 + c z^2 + d w^2
/// (or of its triangular analogue). Order is kept as given; every count is
/// permutation-invariant, so lookups go through canonical().
class Form {
 public:
  /// Throws DomainError unless all four coefficients are >= 1.
  Form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  explicit Form(const std::array<std::int64_t, 4>& coeffs);

  /// Parses "a,b,c,d". Throws DomainError on malformed input.
  static Form parse(std::string_view text);

  const std::array<std::int64_t, 4>& coefficients() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t sum() const { return coeffs_[0] + coeffs_[1] + coeffs_[2] + coeffs_[3]; }

  /// Coefficients sorted ascending.
  Form canonical() const;

  /// Same form with the coefficients selected by `mask` (bit i <-> slot i)
  /// multiplied by `factor`.
  Form scaled(unsigned mask, std::int64_t factor) const;

  /// "a,b,c,d"
  std::string to_string() const;

  friend bool operator==(const Form&, const Form&) = default;
  friend auto operator<=>(const Form&, const Form&) = default;

 private:
  std::array<std::int64_t, 4> coeffs_;
};

}  // namespace trirep
