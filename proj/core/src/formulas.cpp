#include "trirep/formulas.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "trirep/arith.hpp"
#include "trirep/checked.hpp"
#include "trirep/errors.hpp"

namespace trirep::formulas {

using arith::sigma;
using arith::sigma_of_quotient;
using std::int64_t;

namespace {

// ---------------------------------------------------------------------------
// Shared pieces

int64_t sign_pow(int64_t e) { return (e & 1) ? -1 : 1; }

int64_t pow2(int e) { return checked_pow(2, e); }

// m = 3^beta * n1 with 3 not dividing n1.
struct ThreePart {
  int beta = 0;
  int64_t n1 = 1;
};

ThreePart split_three(int64_t m) {
  ThreePart p;
  p.n1 = m;
  while (p.n1 % 3 == 0) {
    p.n1 /= 3;
    ++p.beta;
  }
  return p;
}

// 2 (3^{beta-1} (3/n1) - 1) sum_{d|n1} d (3/d)  where m = 3^beta n1, beta >= 1.
int64_t three_power_branch(int64_t m) {
  const ThreePart p = split_three(m);
  if (p.beta < 1) throw InvariantViolation("three_power_branch: 3 must divide " + std::to_string(m));
  const int64_t lead = checked_sub(checked_mul(checked_pow(3, p.beta - 1), arith::kronecker(3, p.n1)), 1);
  return checked_mul(2 * lead, arith::kronecker3_divisor_sum(p.n1));
}

// Twisted-sum combination x A + y B + z C + w D, divided exactly by `den`.
int64_t twisted_combination(int64_t n, int64_t x, int64_t y, int64_t z, int64_t w, int64_t den) {
  const auto s = arith::twisted_sums(n);
  int64_t v = checked_mul(x, s.a);
  v = checked_add(v, checked_mul(y, s.b));
  v = checked_add(v, checked_mul(z, s.c));
  v = checked_add(v, checked_mul(w, s.d));
  return exact_div(v, den, "twisted-sum combination");
}

// (4/3) sigma(m/4) - (16/3) sigma(m/16) [+ (8/3) c(m/4)]
int64_t nine_thirtysix_family(int64_t m, bool with_eta) {
  int64_t v = checked_sub(checked_mul(4, sigma_of_quotient(m, 4)), checked_mul(16, sigma_of_quotient(m, 16)));
  if (with_eta) v = checked_add(v, checked_mul(8, arith::eta6_coefficient(m / 4)));
  return exact_div(v, 3, "N(1,4,9,36 family)");
}

int64_t nine_thirtysix_zero(int64_t m) {
  return checked_sub(checked_mul(8, sigma_of_quotient(m, 36)), checked_mul(32, sigma_of_quotient(m, 144)));
}

// ---------------------------------------------------------------------------
// t(a,b,c,d; n)

int64_t t_1111(int64_t n) { return checked_mul(16, sigma(2 * n + 1)); }

int64_t t_1122(int64_t n) {
  int64_t s = 0;
  for (const int64_t d : arith::divisors(4 * n + 3)) s = checked_add(s, d - sign_pow((d - 1) / 2));
  return checked_mul(16, exact_div(s, 4, "t'(1,1,2,2)"));
}

int64_t t_1133_even(int64_t n) { return checked_mul(16, sigma(arith::decompose(n + 1).n1)); }

int64_t t_1133_odd(int64_t n) {
  const auto dec = arith::decompose(n + 1);
  return checked_mul(pow2(dec.alpha + 4), sigma(dec.n1));
}

int64_t zero(int64_t) { return 0; }

int64_t t_1339_1(int64_t n) { return checked_mul(16, sigma(arith::decompose(n + 2).n1)); }
int64_t t_1339_4(int64_t n) {
  const auto dec = arith::decompose(n + 2);
  return checked_mul(pow2(dec.alpha + 4), sigma(dec.n1));
}
int64_t t_1339_3(int64_t n) { return checked_mul(8, sigma(arith::decompose(n + 2).n1)); }
int64_t t_1339_0(int64_t n) {
  const auto dec = arith::decompose(n + 2);
  return checked_mul(pow2(dec.alpha + 3), sigma(dec.n1));
}

int64_t t_1399_0(int64_t n) {
  return exact_div(checked_mul(4, arith::kronecker3_divisor_sum(4 * n + 11)), 3, "t(1,3,9,9)");
}
int64_t t_1399_1(int64_t n) { return three_power_branch(4 * n + 11); }

int64_t t_1139_0(int64_t n) {
  return exact_div(checked_mul(-8, arith::kronecker3_divisor_sum(4 * n + 7)), 3, "t(1,1,3,9)");
}
int64_t t_1139_1(int64_t n) {
  return exact_div(checked_mul(8, arith::kronecker3_divisor_sum(4 * n + 7)), 3, "t(1,1,3,9)");
}
int64_t t_1139_2(int64_t n) { return three_power_branch(4 * n + 7); }

int64_t t_1144(int64_t n) {
  const int64_t m = 4 * n + 5;
  return checked_mul(2, checked_add(sigma(m), sign_pow(n) * arith::r_lattice_sum(4, m)));
}

int64_t t_1444(int64_t n) {
  const int64_t m = 8 * n + 13;
  return exact_div(checked_sub(sigma(m), checked_mul(3, arith::r_lattice_sum(4, m))), 2, "t(1,4,4,4)");
}

int64_t t_1224(int64_t n) {
  const int64_t m = 8 * n + 9;
  return checked_sub(sigma(m), arith::r_lattice_sum(4, m));
}

int64_t t_1244(int64_t n) {
  const int64_t m = 8 * n + 11;
  return checked_sub(-arith::kronecker2_divisor_sum(m), arith::r_lattice_sum(2, m));
}

int64_t t_1199_0(int64_t n) { return exact_div(checked_mul(8, sigma(2 * n + 5)), 3, "t(1,1,9,9)"); }
int64_t t_1199_2(int64_t n) { return checked_mul(16, sigma_of_quotient(2 * n + 5, 9)); }
int64_t t_1199_1(int64_t n) {
  const int64_t m = 2 * n + 5;
  return exact_div(checked_mul(8, checked_sub(sigma(m), arith::eta6_coefficient(m))), 3, "t(1,1,9,9)");
}

int64_t t_1999_1(int64_t n) { return checked_mul(16, sigma_of_quotient(2 * n + 7, 9)); }
int64_t t_1999_0(int64_t n) {
  const int64_t m = 2 * n + 7;
  return exact_div(checked_mul(4, checked_sub(sigma(m), arith::eta6_coefficient(m))), 3, "t(1,9,9,9)");
}

int64_t t_1119_0(int64_t n) {
  const int64_t m = 2 * n + 3;
  return checked_add(checked_mul(4, sigma(m)), checked_mul(12, sigma_of_quotient(m, 9)));
}
int64_t t_1119_1(int64_t n) { return checked_mul(8, sigma(2 * n + 3)); }
int64_t t_1119_2(int64_t n) {
  const int64_t m = 2 * n + 3;
  return checked_mul(4, checked_sub(sigma(m), arith::eta6_coefficient(m)));
}

// ---------------------------------------------------------------------------
// N(a,b,c,d; m)

int64_t n_jacobi(int64_t m) {
  int64_t s = 0;
  for (const int64_t d : arith::divisors(m)) {
    if (d % 4 != 0) s = checked_add(s, d);
  }
  return checked_mul(8, s);
}

int64_t n_1399_or_1139_0(int64_t m) { return twisted_combination(m / 3, 2, 2, -1, -1, 1); }
int64_t n_1399_1(int64_t m) { return twisted_combination(m, 6, -2, 3, -1, 3); }
int64_t n_1139_1(int64_t m) { return twisted_combination(m, 12, -4, 6, -2, 3); }

int64_t n_1144(int64_t m) { return checked_mul(4, sigma(m / 2)); }
int64_t n_1_1_16_16(int64_t m) {
  const int64_t h = m / 2;
  return checked_add(checked_mul(2, sigma(h)), 2 * arith::kronecker(2, h) * arith::r_lattice_sum(4, h));
}
int64_t n_1444(int64_t m) { return checked_mul(2, sigma(m)); }
int64_t n_1_4_16_16(int64_t m) {
  const int64_t v = checked_add(sigma(m), (2 + sign_pow((m - 1) / 4)) * arith::r_lattice_sum(4, m));
  return exact_div(v, 2, "N(1,4,16,16)");
}
int64_t sigma_plus_r4(int64_t m) { return checked_add(sigma(m), arith::r_lattice_sum(4, m)); }
int64_t sigma_plus_signed_r4(int64_t m) {
  return checked_add(sigma(m), sign_pow((m - 1) / 4) * arith::r_lattice_sum(4, m));
}
int64_t s_plus_r2(int64_t m) {
  return checked_add(arith::codivisor_kronecker2_sum(m), arith::r_lattice_sum(2, m));
}
int64_t n_1244(int64_t m) { return checked_mul(2, arith::codivisor_kronecker2_sum(m)); }

int64_t n_1199_24(int64_t m) { return checked_sub(checked_mul(4, sigma(m)), checked_mul(8, sigma_of_quotient(m, 2))); }
int64_t n_1199_5(int64_t m) { return exact_div(checked_mul(4, sigma(m)), 3, "N(1,1,9,9)"); }
int64_t nine_36(int64_t m) {
  return checked_sub(checked_mul(8, sigma_of_quotient(m, 9)), checked_mul(32, sigma_of_quotient(m, 36)));
}
int64_t n_1999_3(int64_t m) { return checked_mul(8, sigma_of_quotient(m, 9)); }
int64_t n_1999_4(int64_t m) { return checked_sub(checked_mul(2, sigma(m)), checked_mul(4, sigma_of_quotient(m, 2))); }

int64_t family_4(int64_t m) { return nine_thirtysix_family(m, true); }
int64_t family_8(int64_t m) { return nine_thirtysix_family(m, false); }

// ---------------------------------------------------------------------------

Branch always(std::string expr, Evaluator f) { return Branch{1, {0}, std::move(expr), f}; }
Branch when(std::int64_t mod, std::vector<std::int64_t> res, std::string expr, Evaluator f) {
  return Branch{mod, std::move(res), std::move(expr), f};
}

FormulaEntry t_entry(Form form, std::vector<Branch> branches, std::string source,
                     Status status = Status::theorem) {
  return FormulaEntry{Quantity::t, form.canonical(), std::move(branches), std::move(source), status};
}

FormulaEntry n_entry(Form form, std::vector<Branch> branches, std::string source) {
  return FormulaEntry{Quantity::n, form.canonical(), std::move(branches), std::move(source),
                      Status::cited_lemma};
}

std::vector<FormulaEntry> build_t_registry() {
  std::vector<FormulaEntry> r;
  r.push_back(t_entry({1, 1, 1, 1}, {always("16 sigma(2n+1)", t_1111)}, "Legendre", Status::cited_lemma));
  r.push_back(t_entry({1, 1, 2, 2},
                      {always("4 sum_{d|4n+3} (d - (-1)^((d-1)/2))", t_1122)},
                      "Williams, Far East J. Math. Sci. 11 (2003)", Status::cited_lemma));
  r.push_back(t_entry({1, 1, 3, 3},
                      {when(2, {0}, "16 sigma(n1), n+1 = 2^a 3^b n1", t_1133_even),
                       when(2, {1}, "2^(a+4) sigma(n1), n+1 = 2^a 3^b n1", t_1133_odd)},
                      "sums of squares vs triangular numbers for partitions of 8, plus Liouville's "
                      "N(1,1,3,3) formula"));
  r.push_back(t_entry({1, 3, 3, 9},
                      {when(6, {2, 5}, "0", zero),
                       when(6, {1}, "16 sigma(n1), n+2 = 2^a 3^b n1", t_1339_1),
                       when(6, {4}, "2^(a+4) sigma(n1)", t_1339_4),
                       when(6, {3}, "8 sigma(n1)", t_1339_3),
                       when(6, {0}, "2^(a+3) sigma(n1)", t_1339_0)},
                      "odd-square counting reduced to t(1,1,3,3)"));
  r.push_back(t_entry({1, 3, 9, 9},
                      {when(3, {2}, "0", zero),
                       when(3, {0}, "(4/3) sum_{d|4n+11} d (3/d)", t_1399_0),
                       when(3, {1}, "2 (3^(b-1) (3/n1) - 1) sum_{d|n1} d (3/d), 4n+11 = 3^b n1", t_1399_1)},
                      "N(1,3,9,9; 8n+22) = 40 t'(1,3,9,9; n) and Alaca's N(1,3,9,9)"));
  r.push_back(t_entry({1, 1, 3, 9},
                      {when(3, {0}, "-(8/3) sum_{d|4n+7} d (3/d)", t_1139_0),
                       when(3, {1}, "(8/3) sum_{d|4n+7} d (3/d)", t_1139_1),
                       when(3, {2}, "2 (3^(b-1) (3/n1) - 1) sum_{d|n1} d (3/d), 4n+7 = 3^b n1", t_1139_2)},
                      "N(1,1,3,9; 8n+14) = 40 t'(1,1,3,9; n) and Alaca's N(1,1,3,9)"));
  r.push_back(t_entry({1, 1, 4, 4}, {always("2 (sigma(4n+5) + (-1)^n S4(4n+5))", t_1144)},
                      "16-term inclusion-exclusion over N(1,1,4,4), N(1,1,4,16), N(1,1,16,16)"));
  r.push_back(t_entry({1, 4, 4, 4}, {always("(sigma(8n+13) - 3 S4(8n+13)) / 2", t_1444)},
                      "16-term inclusion-exclusion over N(1,4,4,4), N(1,4,4,16), N(1,4,16,16)"));
  r.push_back(t_entry({1, 2, 2, 4}, {always("sigma(8n+9) - S4(8n+9)", t_1224)},
                      "16-term inclusion-exclusion over N(1,2,2,4) and five companions"));
  r.push_back(t_entry({1, 2, 4, 4}, {always("-sum_{d|8n+11} d (2/d) - S2(8n+11)", t_1244)},
                      "16-term inclusion-exclusion over N(1,2,4,4), N(1,2,4,16), N(1,2,16,16)"));
  r.push_back(t_entry({1, 1, 9, 9},
                      {when(3, {0}, "(8/3) sigma(2n+5)", t_1199_0),
                       when(9, {2}, "16 sigma((2n+5)/9)", t_1199_2),
                       when(9, {5, 8}, "0", zero),
                       when(3, {1}, "(8/3) (sigma(2n+5) - c(2n+5))", t_1199_1)},
                      "inclusion-exclusion over Alaca's N(1,4,9,36) family"));
  r.push_back(t_entry({1, 9, 9, 9},
                      {when(9, {1}, "16 sigma((2n+7)/9)", t_1999_1),
                       when(9, {2, 4, 5, 7, 8}, "0", zero),
                       when(3, {0}, "(4/3) (sigma(2n+7) - c(2n+7))", t_1999_0)},
                      "reduction to t(1,1,9,9; n+1) = 2 t(1,9,9,9; n)"));
  r.push_back(t_entry({1, 1, 1, 9},
                      {when(3, {0}, "4 sigma(2n+3) + 12 sigma((2n+3)/9)", t_1119_0),
                       when(3, {1}, "8 sigma(2n+3)", t_1119_1),
                       when(3, {2}, "4 (sigma(2n+3) - c(2n+3))", t_1119_2)},
                      "reduction to t(1,1,1,1), t(1,1,9,9) and t(1,9,9,9)"));
  return r;
}

std::vector<FormulaEntry> build_n_registry() {
  const std::string aalw1 = "Alaca-Alaca-Lemire-Williams, Acta Arith. 130 (2007)";
  const std::string aalw2 = "Alaca-Alaca-Lemire-Williams, Int. J. Modern Math. 2 (2007)";
  const std::string aalw4 = "Alaca-Alaca-Lemire-Williams, Int. J. Number Theory 5 (2009)";
  const std::string a1 = "A. Alaca, Acta Arith. 136 (2009)";
  const std::string a2 = "A. Alaca, J. Number Theory 131 (2011)";

  std::vector<FormulaEntry> r;
  r.push_back(n_entry({1, 1, 1, 1}, {always("8 sum_{d|m, 4 !| d} d", n_jacobi)}, "Jacobi"));
  r.push_back(n_entry({1, 3, 9, 9},
                      {when(3, {0}, "2A(m/3) + 2B(m/3) - C(m/3) - D(m/3)", n_1399_or_1139_0),
                       when(3, {1}, "2A - (2/3)B + C - (1/3)D", n_1399_1),
                       when(3, {2}, "0", zero)},
                      a1 + ", Thm 1.2"));
  r.push_back(n_entry({1, 1, 3, 9},
                      {when(3, {0}, "2A(m/3) + 2B(m/3) - C(m/3) - D(m/3)", n_1399_or_1139_0),
                       when(3, {1}, "4A - (4/3)B + 2C - (2/3)D", n_1139_1),
                       when(3, {2}, "2A - (2/3)B + C - (1/3)D", n_1399_1)},
                      a1 + ", Thm 1.3"));
  r.push_back(n_entry({1, 1, 4, 4}, {when(4, {2}, "4 sigma(m/2)", n_1144)}, aalw1 + ", Thm 1.11"));
  r.push_back(n_entry({1, 1, 16, 16}, {when(8, {2}, "2 sigma(m/2) + 2 (2/(m/2)) S4(m/2)", n_1_1_16_16)},
                      aalw2 + ", Thm 4.6"));
  r.push_back(n_entry({1, 1, 4, 16}, {when(8, {2}, "2 sigma(m/2) + 2 (2/(m/2)) S4(m/2)", n_1_1_16_16)},
                      aalw2 + ", Thm 4.8"));
  r.push_back(n_entry({1, 4, 4, 4}, {when(4, {1}, "2 sigma(m)", n_1444)}, aalw1 + ", Thm 1.18"));
  r.push_back(n_entry({1, 4, 16, 16}, {when(4, {1}, "sigma(m)/2 + (2 + (-1)^((m-1)/4)) S4(m)/2", n_1_4_16_16)},
                      aalw2 + ", Thm 4.5"));
  r.push_back(n_entry({1, 4, 4, 16}, {when(4, {1}, "sigma(m) + S4(m)", sigma_plus_r4)}, aalw2 + ", Thm 4.7"));
  r.push_back(n_entry({1, 2, 2, 4}, {when(2, {1}, "2 sigma(m)", n_1444)}, aalw1 + ", Thm 1.14"));
  r.push_back(n_entry({1, 2, 2, 16}, {when(8, {1}, "sigma(m) + S4(m)", sigma_plus_r4)}, aalw2 + ", Thm 4.9"));
  r.push_back(n_entry({1, 8, 8, 16}, {when(8, {1}, "sigma(m) + S4(m)", sigma_plus_r4)}, aalw2 + ", Thm 4.11"));
  r.push_back(n_entry({1, 2, 8, 16}, {when(8, {1}, "sigma(m) + S4(m)", sigma_plus_r4)}, aalw2 + ", Thm 4.13"));
  r.push_back(n_entry({1, 2, 4, 8}, {when(4, {1}, "sigma(m) + (-1)^((m-1)/4) S4(m)", sigma_plus_signed_r4)},
                      aalw2 + ", Thm 4.1"));
  r.push_back(n_entry({1, 4, 8, 8}, {when(4, {1}, "sigma(m) + (-1)^((m-1)/4) S4(m)", sigma_plus_signed_r4)},
                      aalw2 + ", Thm 4.4"));
  r.push_back(n_entry({1, 2, 4, 16}, {when(8, {1, 3}, "S(m) + S2(m)", s_plus_r2)}, aalw2 + ", Thm 4.17"));
  r.push_back(n_entry({1, 2, 16, 16}, {when(8, {1, 3}, "S(m) + S2(m)", s_plus_r2)}, aalw2 + ", Thm 4.18"));
  r.push_back(n_entry({1, 2, 4, 4}, {when(2, {1}, "2 S(m)", n_1244)}, aalw4 + ", Thm 5.4"));
  r.push_back(n_entry({1, 1, 9, 9},
                      {when(6, {2, 4}, "4 sigma(m) - 8 sigma(m/2)", n_1199_24),
                       when(6, {5}, "(4/3) sigma(m)", n_1199_5),
                       when(6, {0}, "8 sigma(m/9) - 32 sigma(m/36)", nine_36)},
                      a1 + ", Thm 1.5"));
  r.push_back(n_entry({1, 9, 9, 9},
                      {when(6, {3}, "8 sigma(m/9)", n_1999_3),
                       when(6, {4}, "2 sigma(m) - 4 sigma(m/2)", n_1999_4),
                       when(6, {0}, "8 sigma(m/9) - 32 sigma(m/36)", nine_36)},
                      a1 + ", Thm 1.6"));

  const std::vector<std::pair<Form, std::string>> family = {
      {{1, 1, 36, 36}, a2 + ", Thm 2.5"}, {{1, 4, 36, 36}, a2 + ", Thm 2.10"},
      {{1, 1, 9, 36}, a2 + ", Thm 2.4"},  {{1, 4, 9, 9}, a2 + ", Thm 2.8"},
      {{1, 4, 9, 36}, a2 + ", Thm 2.9"},  {{4, 4, 9, 9}, a2 + ", Thm 2.15"},
      {{4, 4, 9, 36}, a2 + ", Thm 2.16"},
  };
  for (const auto& [form, source] : family) {
    r.push_back(n_entry(form,
                        {when(12, {4}, "(4/3) sigma(m/4) - (16/3) sigma(m/16) + (8/3) c(m/4)", family_4),
                         when(12, {8}, "(4/3) sigma(m/4) - (16/3) sigma(m/16)", family_8),
                         when(12, {0}, "8 sigma(m/36) - 32 sigma(m/144)", nine_thirtysix_zero)},
                        source));
  }
  return r;
}

std::int64_t lcm_of_moduli(const FormulaEntry& e) {
  std::int64_t l = 1;
  for (const auto& b : e.branches) l = std::lcm(l, b.modulus);
  return l;
}

}  // namespace

const char* to_string(Quantity q) { return q == Quantity::t ? "t" : "N"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::theorem: return "theorem";
    case Status::cited_lemma: return "cited-lemma";
    case Status::conjecture: return "conjecture";
  }
  return "?";
}

bool Branch::matches(std::int64_t n) const {
  std::int64_t r = n % modulus;
  if (r < 0) r += modulus;
  return std::find(residues.begin(), residues.end(), r) != residues.end();
}

bool FormulaEntry::in_domain(std::int64_t n) const {
  if (n < min_argument()) return false;
  return std::any_of(branches.begin(), branches.end(), [n](const Branch& b) { return b.matches(n); });
}

std::int64_t FormulaEntry::evaluate(std::int64_t n) const {
  if (n >= min_argument()) {
    for (const auto& b : branches) {
      if (b.matches(n)) return b.evaluate(n);
    }
  }
  throw DomainError(std::string(to_string(quantity)) + "(" + form.to_string() + "; " +
                    std::to_string(n) + ") is outside the formula's domain");
}

std::vector<std::int64_t> FormulaEntry::uncovered_residues() const {
  std::vector<std::int64_t> out;
  const std::int64_t l = lcm_of_moduli(*this);
  for (std::int64_t r = 0; r < l; ++r) {
    if (std::none_of(branches.begin(), branches.end(), [r](const Branch& b) { return b.matches(r); })) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<std::int64_t> FormulaEntry::overlapping_residues() const {
  std::vector<std::int64_t> out;
  const std::int64_t l = lcm_of_moduli(*this);
  for (std::int64_t r = 0; r < l; ++r) {
    const auto hits = std::count_if(branches.begin(), branches.end(), [r](const Branch& b) { return b.matches(r); });
    if (hits > 1) out.push_back(r);
  }
  return out;
}

const std::vector<FormulaEntry>& t_registry() {
  static const std::vector<FormulaEntry> registry = build_t_registry();
  return registry;
}

const std::vector<FormulaEntry>& n_registry() {
  static const std::vector<FormulaEntry> registry = build_n_registry();
  return registry;
}

const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> errata = {
      {"t(1,1,3,3) even-n constant", "4 sigma(n1) for even n", "16 sigma(n1) for even n"},
      {"capacity constant C(1,1,1,1)", "16 + 4 i1 (i1 - 1) i2 + 8 i1 i3 = 16", "oracle ratio 24"},
  };
  return errata;
}

const FormulaEntry* find_t_entry(const Form& form) {
  const Form key = form.canonical();
  for (const auto& e : t_registry()) {
    if (e.form == key) return &e;
  }
  return nullptr;
}

const FormulaEntry* find_n_entry(const Form& form, std::int64_t m) {
  const Form key = form.canonical();
  for (const auto& e : n_registry()) {
    if (e.form == key && e.in_domain(m)) return &e;
  }
  return nullptr;
}

bool has_n_entry(const Form& form) {
  const Form key = form.canonical();
  return std::any_of(n_registry().begin(), n_registry().end(), [&](const FormulaEntry& e) { return e.form == key; });
}

std::int64_t t_formula(const Form& form, std::int64_t n) {
  const FormulaEntry* e = find_t_entry(form);
  if (e == nullptr) throw UnsupportedForm("unsupported form (" + form.to_string() + ") for a t closed form");
  if (n < 0) throw DomainError("t_formula: n must be >= 0");
  return e->evaluate(n);
}

std::int64_t n_formula(const Form& form, std::int64_t m) {
  if (!has_n_entry(form)) throw UnsupportedForm("unsupported form (" + form.to_string() + ") for an N closed form");
  const FormulaEntry* e = find_n_entry(form, m);
  if (e == nullptr) {
    throw DomainError("N(" + form.to_string() + "; " + std::to_string(m) + ") is outside every registered domain");
  }
  return e->evaluate(m);
}

std::int64_t t_1133_even_as_printed(std::int64_t n) {
  if (n < 0 || n % 2 != 0) throw DomainError("t_1133_even_as_printed: n must be even and >= 0");
  return checked_mul(4, sigma(arith::decompose(n + 1).n1));
}

std::int64_t printed_capacity_constant(const Form& form) {
  if (form.sum() > 8) throw DomainError("capacity constant needs a + b + c + d <= 8");
  const auto& c = form.coefficients();
  const auto count = [&](std::int64_t j) { return static_cast<std::int64_t>(std::count(c.begin(), c.end(), j)); };
  const std::int64_t i1 = count(1), i2 = count(2), i3 = count(3);
  return 16 + 4 * i1 * (i1 - 1) * i2 + 8 * i1 * i3;
}

std::int64_t oracle_capacity_constant(const Form& form, oracle::WorkBudget budget) {
  const std::int64_t s = form.sum();
  if (s > 8) throw DomainError("capacity constant needs a + b + c + d <= 8");
  const std::int64_t t0 = oracle::count_positive_triangular(form, 0, budget);
  std::int64_t lhs = oracle::count_squares(form, s, budget);
  if (s == 8) lhs -= oracle::count_squares(form, 2, budget);
  return exact_div(lhs, t0, "capacity constant");
}

std::int64_t t_by_inclusion_exclusion(const Form& form, std::int64_t n, oracle::WorkBudget budget) {
  if (n < 0) throw DomainError("t_by_inclusion_exclusion: n must be >= 0");
  const std::int64_t m = checked_add(checked_mul(8, n), form.sum());
  std::int64_t total = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const std::int64_t term = oracle::count_squares(form.scaled(mask, 4), m, budget);
    total = (std::popcount(mask) & 1) ? checked_sub(total, term) : checked_add(total, term);
  }
  return total;
}

std::int64_t conjectured_t_1134(std::int64_t n) {
  if (n < 0) throw DomainError("conjectured_t_1134: n must be >= 0");
  const std::int64_t m = checked_add(checked_mul(8, n), 9);
  const ThreePart p = split_three(m);
  const std::int64_t lead =
      checked_sub(checked_mul(checked_pow(3, p.beta + 1), arith::kronecker(3, p.n1)), 1);
  const std::int64_t head = exact_div(checked_mul(lead, arith::kronecker3_divisor_sum(p.n1)), 2,
                                      "conjectured t(1,1,3,4) halving");

  // sum over a, b >= 1, a odd, 4m = a^2 + 3 b^2 of (-1)^((a-1)/2) a
  const std::int64_t target = checked_mul(4, m);
  std::int64_t lattice = 0;
  for (std::int64_t a = 1; a * a < target; a += 2) {
    const std::int64_t rest = target - a * a;
    if (rest % 3 != 0) continue;
    const std::int64_t b = exact_sqrt(rest / 3);
    if (b > 0) lattice = checked_add(lattice, sign_pow((a - 1) / 2) * a);
  }
  return checked_sub(head, lattice);
}

const FormulaEntry& conjecture_entry() {
  static const FormulaEntry entry{
      Quantity::t, Form{1, 1, 3, 4},
      {always("(3^(b+1) (3/n1) - 1)/2 sum_{d|n1} d (3/d) - sum_{a,b>=1, a odd, 4(8n+9)=a^2+3b^2} "
              "(-1)^((a-1)/2) a, 8n+9 = 3^b n1",
              conjectured_t_1134)},
      "open conjecture, previously checked for n <= 1000", Status::conjecture};
  return entry;
}

}  // namespace trirep::formulas
