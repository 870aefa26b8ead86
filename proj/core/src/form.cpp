#include "trirep/form.hpp"

#include <charconv>
#include <vector>

#include "trirep/errors.hpp"

namespace trirep {

Form::Form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : Form(std::array<std::int64_t, 4>{a, b, c, d}) {}

Form::Form(const std::array<std::int64_t, 4>& coeffs) : coeffs_(coeffs) {
  for (const auto v : coeffs_) {
    if (v < 1) throw DomainError("form coefficients must be positive integers");
  }
}

Form Form::parse(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw DomainError("malformed form '" + std::string(text) +
                        "': expected four comma-separated positive integers");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() != 4) {
    throw DomainError("malformed form '" + std::string(text) + "': expected exactly four coefficients");
  }
  return Form(values[0], values[1], values[2], values[3]);
}

Form Form::canonical() const {
  auto sorted = coeffs_;
  std::sort(sorted.begin(), sorted.end());
  return Form(sorted);
}

Form Form::scaled(unsigned mask, std::int64_t factor) const {
  auto out = coeffs_;
  for (std::size_t i = 0; i < 4; ++i) {
    if (mask & (1u << i)) out[i] *= factor;
  }
  return Form(out);
}

std::string Form::to_string() const {
  return std::to_string(coeffs_[0]) + "," + std::to_string(coeffs_[1]) + "," +
         std::to_string(coeffs_[2]) + "," + std::to_string(coeffs_[3]);
}

}  // namespace trirep
