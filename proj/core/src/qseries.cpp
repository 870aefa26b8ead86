#include "trirep/qseries.hpp"

#include <algorithm>
#include <string>

#include "trirep/checked.hpp"
#include "trirep/errors.hpp"

namespace trirep::qseries {
namespace {

void require_k(std::int64_t k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be >= 1");
}

// In-place multiplication by (1 - q^j).
void times_one_minus_power(std::vector<std::int64_t>& c, std::size_t j) {
  for (std::size_t i = c.size(); i-- > j;) c[i] = checked_sub(c[i], c[i - j]);
}

}  // namespace

Series::Series(std::size_t truncation) : coeffs_(truncation + 1, 0) {}

Series::Series(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("Series needs at least the constant coefficient");
}

Series Series::one(std::size_t truncation) {
  Series s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::truncated(std::size_t truncation) const {
  if (truncation > this->truncation()) {
    throw DomainError("cannot raise the truncation of a series");
  }
  return Series(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + truncation + 1));
}

std::optional<std::size_t> first_difference(const Series& a, const Series& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  for (std::size_t i = 0; i <= t; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

Series theta_phi(std::int64_t k, std::size_t truncation) {
  require_k(k, "theta_phi");
  std::vector<std::int64_t> c(truncation + 1, 0);
  c[0] = 1;
  const auto limit = static_cast<std::int64_t>(truncation);
  for (std::int64_t j = 1; k * j * j <= limit; ++j) c[k * j * j] = 2;
  return Series(std::move(c));
}

Series theta_psi(std::int64_t k, std::size_t truncation) {
  require_k(k, "theta_psi");
  std::vector<std::int64_t> c(truncation + 1, 0);
  const auto limit = static_cast<std::int64_t>(truncation);
  for (std::int64_t j = 0; k * (j * (j + 1) / 2) <= limit; ++j) c[k * (j * (j + 1) / 2)] = 1;
  return Series(std::move(c));
}

Series eta_power(std::int64_t k, int e, std::size_t truncation) {
  require_k(k, "eta_power");
  if (e < 1) throw DomainError("eta_power: exponent must be >= 1");
  std::vector<std::int64_t> c(truncation + 1, 0);
  c[0] = 1;
  const auto step = static_cast<std::size_t>(k);
  for (std::size_t kn = step; kn <= truncation; kn += step) {
    for (int i = 0; i < e; ++i) times_one_minus_power(c, kn);
  }
  return Series(std::move(c));
}

Series multiply(const Series& a, const Series& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  std::vector<std::int64_t> c(t + 1, 0);
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  for (std::size_t i = 0; i <= t; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; i + j <= t; ++j) {
      if (bc[j] == 0) continue;
      c[i + j] = checked_add(c[i + j], checked_mul(ac[i], bc[j]));
    }
  }
  return Series(std::move(c));
}

Series add(const Series& a, const Series& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  std::vector<std::int64_t> c(t + 1);
  for (std::size_t i = 0; i <= t; ++i) c[i] = checked_add(a[i], b[i]);
  return Series(std::move(c));
}

Series subtract(const Series& a, const Series& b) {
  const std::size_t t = std::min(a.truncation(), b.truncation());
  std::vector<std::int64_t> c(t + 1);
  for (std::size_t i = 0; i <= t; ++i) c[i] = checked_sub(a[i], b[i]);
  return Series(std::move(c));
}

Series scale(const Series& s, std::int64_t factor) {
  std::vector<std::int64_t> c(s.coefficients().begin(), s.coefficients().end());
  for (auto& v : c) v = checked_mul(v, factor);
  return Series(std::move(c));
}

Series shift(const Series& s, std::size_t k) {
  std::vector<std::int64_t> c(s.truncation() + 1, 0);
  for (std::size_t i = 0; i + k <= s.truncation(); ++i) c[i + k] = s[i];
  return Series(std::move(c));
}

Series extract(const Series& s, std::size_t stride, std::size_t offset) {
  if (stride == 0) throw DomainError("extract: stride must be positive");
  if (offset > s.truncation()) {
    throw DomainError("extract: offset " + std::to_string(offset) + " exceeds truncation " +
                      std::to_string(s.truncation()));
  }
  const std::size_t t = (s.truncation() - offset) / stride;
  std::vector<std::int64_t> c(t + 1);
  for (std::size_t j = 0; j <= t; ++j) c[j] = s[stride * j + offset];
  return Series(std::move(c));
}

Series triangular_generating(const Form& form, std::size_t truncation) {
  Series acc = theta_psi(form[0], truncation);
  for (std::size_t i = 1; i < 4; ++i) acc = multiply(acc, theta_psi(form[i], truncation));
  return acc;
}

Series square_generating(const Form& form, std::size_t truncation) {
  Series acc = theta_phi(form[0], truncation);
  for (std::size_t i = 1; i < 4; ++i) acc = multiply(acc, theta_phi(form[i], truncation));
  return acc;
}

}  // namespace trirep::qseries
