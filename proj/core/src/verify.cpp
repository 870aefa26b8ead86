#include "trirep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "trirep/arith.hpp"
#include "trirep/errors.hpp"
#include "trirep/formulas.hpp"

namespace trirep::verify {
namespace {

using Clock = std::chrono::steady_clock;
using qseries::Series;

// Runs body(i) for i in [0, count) on `jobs` threads. Each index is handled
// exactly once; callers write into per-index slots so results do not depend
// on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
  };
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs - 1);
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
}

struct Outcome {
  std::optional<std::int64_t> oracle;
  std::optional<std::int64_t> formula;
  std::string error;
  bool budget_exceeded = false;
};

// Evaluates one side, sorting failures into budget exhaustion and errors.
void evaluate_side(const std::function<std::int64_t()>& f, std::optional<std::int64_t>& slot,
                   Outcome& out, const char* side) {
  try {
    slot = f();
  } catch (const BudgetExceeded& e) {
    out.budget_exceeded = true;
    if (out.error.empty()) out.error = e.what();
  } catch (const std::exception& e) {
    if (!out.error.empty()) out.error += "; ";
    out.error += std::string(side) + ": " + e.what();
  }
}

Outcome evaluate_pair(const std::function<std::int64_t()>& oracle_side,
                      const std::function<std::int64_t()>& formula_side) {
  Outcome out;
  evaluate_side(oracle_side, out.oracle, out, "oracle");
  evaluate_side(formula_side, out.formula, out, "formula");
  return out;
}

class ReportBuilder {
 public:
  ReportBuilder(std::string suite, std::int64_t lo, std::int64_t hi, const Options& options)
      : options_(options), start_(Clock::now()) {
    report_.suite = std::move(suite);
    report_.lo = lo;
    report_.hi = hi;
  }

  void add(const std::string& label, std::int64_t argument, const Outcome& o) {
    if (o.budget_exceeded) {
      budget_hit_ = true;
      if (report_.note.empty()) report_.note = "budget exceeded: " + o.error;
      return;
    }
    ++report_.case_counts[label];
    if (!o.error.empty()) {
      report_.counterexamples.push_back({label, argument, o.oracle, o.formula, o.error});
      return;
    }
    if (*o.oracle != *o.formula) report_.counterexamples.push_back({label, argument, o.oracle, o.formula, {}});
    if (options_.record_cases) report_.cases.push_back({label, argument, *o.oracle, *o.formula});
  }

  void touch(const std::string& label) { report_.case_counts.try_emplace(label, 0); }

  void add_counterexample(Counterexample c) { report_.counterexamples.push_back(std::move(c)); }
  void count(const std::string& label, std::int64_t n = 1) { report_.case_counts[label] += n; }
  void finding(std::string id, std::string detail) {
    report_.findings.push_back({std::move(id), std::move(detail)});
  }
  void budget_exceeded(const std::string& what) {
    budget_hit_ = true;
    if (report_.note.empty()) report_.note = "budget exceeded: " + what;
  }

  Report finish() {
    std::sort(report_.counterexamples.begin(), report_.counterexamples.end());
    if (!report_.counterexamples.empty()) {
      report_.status = Status::fail;
    } else if (budget_hit_) {
      report_.status = Status::budget_exceeded;
    } else {
      report_.status = Status::pass;
    }
    report_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Options options_;
  Clock::time_point start_;
  Report report_;
  bool budget_hit_ = false;
};

std::string label_of(const char* quantity, const Form& form) {
  return std::string(quantity) + "(" + form.to_string() + ")";
}

// The thirteen forms that have a t closed form, in registry order.
std::vector<Form> supported_t_forms() {
  std::vector<Form> out;
  for (const auto& e : formulas::t_registry()) out.push_back(e.form);
  return out;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

std::string Counterexample::input() const { return label + ";" + std::to_string(argument); }

std::int64_t Report::total_cases() const {
  std::int64_t n = 0;
  for (const auto& [_, c] : case_counts) n += c;
  return n;
}

Report verify_t_formulas(std::int64_t n_max, const Options& options) {
  ReportBuilder builder("t", 0, n_max, options);
  const auto forms = supported_t_forms();
  const std::size_t per_form = static_cast<std::size_t>(std::max<std::int64_t>(n_max + 1, 0));
  std::vector<Outcome> outcomes(forms.size() * per_form);

  parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
    const Form& form = forms[i / per_form];
    const auto n = static_cast<std::int64_t>(i % per_form);
    outcomes[i] = evaluate_pair([&] { return oracle::count_triangular(form, n, options.budget); },
                                [&] { return formulas::t_formula(form, n); });
  });

  for (std::size_t f = 0; f < forms.size(); ++f) {
    const std::string label = label_of("t", forms[f]);
    builder.touch(label);
    for (std::size_t n = 0; n < per_form; ++n) builder.add(label, static_cast<std::int64_t>(n), outcomes[f * per_form + n]);
  }

  // The printed even-n constant for t(1,1,3,3), measured against the same oracle values.
  const Form t1133{1, 1, 3, 3};
  const auto it = std::find(forms.begin(), forms.end(), t1133);
  if (it != forms.end()) {
    const std::size_t f = static_cast<std::size_t>(it - forms.begin());
    std::int64_t checked = 0, disagree = 0, first = -1, first_printed = 0, first_oracle = 0;
    for (std::size_t n = 0; n < per_form; n += 2) {
      const Outcome& o = outcomes[f * per_form + n];
      if (!o.oracle) continue;
      ++checked;
      const std::int64_t printed = formulas::t_1133_even_as_printed(static_cast<std::int64_t>(n));
      if (printed != *o.oracle) {
        if (first < 0) {
          first = static_cast<std::int64_t>(n);
          first_printed = printed;
          first_oracle = *o.oracle;
        }
        ++disagree;
      }
    }
    if (disagree > 0) {
      builder.finding(formulas::known_errata()[0].id,
                      "printed 4 sigma(n1) disagrees with the oracle at " + std::to_string(disagree) + " of " +
                          std::to_string(checked) + " even n (first n=" + std::to_string(first) +
                          ": printed " + std::to_string(first_printed) + ", oracle " +
                          std::to_string(first_oracle) + "); registered 16 sigma(n1) is used instead");
    }
  }
  return builder.finish();
}

Report verify_n_formulas(std::int64_t m_max, const Options& options) {
  ReportBuilder builder("n", 1, m_max, options);
  struct Task {
    const formulas::FormulaEntry* entry;
    std::int64_t m;
  };
  std::vector<Task> tasks;
  for (const auto& e : formulas::n_registry()) {
    builder.touch(label_of("N", e.form));
    for (std::int64_t m = 1; m <= m_max; ++m) {
      if (e.in_domain(m)) tasks.push_back({&e, m});
    }
  }
  // Heaviest counts first so the tail of a parallel run stays short.
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    return oracle::enumeration_cost(a.entry->form, a.m) > oracle::enumeration_cost(b.entry->form, b.m);
  });

  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    outcomes[i] = evaluate_pair([&] { return oracle::count_squares(t.entry->form, t.m, options.budget); },
                                [&] { return t.entry->evaluate(t.m); });
  });

  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (tasks[a].entry != tasks[b].entry) return tasks[a].entry < tasks[b].entry;
    return tasks[a].m < tasks[b].m;
  });
  for (const std::size_t i : order) builder.add(label_of("N", tasks[i].entry->form), tasks[i].m, outcomes[i]);
  return builder.finish();
}

std::optional<Counterexample> compare_series(const std::string& label, const Series& expected,
                                             const Series& got) {
  const auto idx = qseries::first_difference(expected, got);
  if (!idx) return std::nullopt;
  return Counterexample{label, static_cast<std::int64_t>(*idx), expected[*idx], got[*idx],
                        "first differing coefficient"};
}

Report verify_series_identities(std::size_t truncation, const Options& options) {
  using namespace qseries;
  if (truncation < 8) throw DomainError("series identities need truncation >= 8");
  ReportBuilder builder("series", 0, static_cast<std::int64_t>(truncation), options);
  const std::size_t T = truncation;
  const auto check = [&](const std::string& label, const Series& lhs, const Series& rhs) {
    builder.count(label, static_cast<std::int64_t>(std::min(lhs.truncation(), rhs.truncation()) + 1));
    if (auto c = compare_series(label, lhs, rhs)) builder.add_counterexample(std::move(*c));
  };

  try {
    check("phi(q) = phi(q^4) + 2q psi(q^8)", theta_phi(1, T),
          add(theta_phi(4, T), scale(shift(theta_psi(8, T), 1), 2)));

    check("psi(q)psi(q^3) = phi(q^6)psi(q^4) + q psi(q^12)phi(q^2)",
          multiply(theta_psi(1, T), theta_psi(3, T)),
          add(multiply(theta_phi(6, T), theta_psi(4, T)), shift(multiply(theta_psi(12, T), theta_phi(2, T)), 1)));

    {
      const Series n1399 = square_generating(Form{1, 3, 9, 9}, 8 * T + 22);
      const Series psi_product =
          multiply(multiply(theta_psi(1, T), theta_psi(3, T)), multiply(theta_psi(9, T), theta_psi(9, T)));
      check("sum N(1,3,9,9;8n+22) q^n = 40 psi(q)psi(q^3)psi(q^9)^2", extract(n1399, 8, 22),
            scale(psi_product, 40));
    }
    {
      const Series n1139 = square_generating(Form{1, 1, 3, 9}, 8 * T + 14);
      const Series psi_product =
          multiply(multiply(theta_psi(1, T), theta_psi(1, T)), multiply(theta_psi(3, T), theta_psi(9, T)));
      check("sum N(1,1,3,9;8n+14) q^n = 40 psi(q)^2 psi(q^3)psi(q^9)", extract(n1139, 8, 14),
            scale(psi_product, 40));
    }
    {
      std::vector<std::int64_t> lattice(T + 1, 0);
      for (std::size_t n = 1; n <= T; ++n) lattice[n] = arith::eta6_coefficient(static_cast<std::int64_t>(n));
      check("q E6^4 = sum c(n) q^n", shift(eta_power(6, 4, T), 1), Series(std::move(lattice)));
    }
  } catch (const OverflowError& e) {
    builder.add_counterexample({"series overflow", 0, std::nullopt, std::nullopt, e.what()});
  }

  // Four-fold theta products against direct counts.
  const std::size_t order = std::min<std::size_t>(T, kGeneratingOracleOrder);
  for (const Form& form : supported_t_forms()) {
    const Series tri = triangular_generating(form, order);
    const Series sq = square_generating(form, order);
    const std::string tl = "psi-product(" + form.to_string() + ")";
    const std::string nl = "phi-product(" + form.to_string() + ")";
    for (std::size_t n = 0; n <= order; ++n) {
      const auto arg = static_cast<std::int64_t>(n);
      builder.add(tl, arg, evaluate_pair([&] { return oracle::count_positive_triangular(form, arg, options.budget); },
                                         [&] { return tri[n]; }));
      builder.add(nl, arg, evaluate_pair([&] { return oracle::count_squares(form, arg, options.budget); },
                                         [&] { return sq[n]; }));
    }
  }
  return builder.finish();
}

Report check_eta_coefficients(std::int64_t n_max, const Options& options) {
  ReportBuilder builder("eta", 1, n_max, options);
  const auto T = static_cast<std::size_t>(std::max<std::int64_t>(n_max, 1));
  const Series q_eta = qseries::shift(qseries::eta_power(6, 4, T), 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    builder.add("c", n, evaluate_pair([&] { return q_eta[static_cast<std::size_t>(n)]; },
                                      [&] { return arith::eta6_coefficient(n); }));
  }
  return builder.finish();
}

std::vector<Form> small_forms() {
  std::vector<Form> out;
  for (std::int64_t a = 1; a <= 5; ++a)
    for (std::int64_t b = a; b <= 5; ++b)
      for (std::int64_t c = b; c <= 5; ++c)
        for (std::int64_t d = c; d <= 5; ++d)
          if (a + b + c + d <= 8) out.emplace_back(a, b, c, d);
  return out;
}

std::vector<Form> inclusion_exclusion_forms() {
  std::mt19937_64 rng(0x5eed1134u);
  std::uniform_int_distribution<std::int64_t> coeff(1, 4);
  std::vector<Form> out;
  while (out.size() < static_cast<std::size_t>(kInclusionExclusionForms)) {
    out.emplace_back(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
  }
  return out;
}

Report verify_relations(std::int64_t n_max, const Options& options) {
  ReportBuilder builder("relations", 0, n_max, options);
  const auto budget = options.budget;
  const std::int64_t count = std::max<std::int64_t>(n_max + 1, 0);

  // Capacity constants and N(F; 8n + s) [- N(F; 2n + 2)] = C t'(F; n).
  for (const Form& form : small_forms()) {
    const std::string label = "capacity(" + form.to_string() + ")";
    builder.touch(label);
    std::int64_t constant = 0;
    try {
      constant = formulas::oracle_capacity_constant(form, budget);
    } catch (const BudgetExceeded& e) {
      builder.budget_exceeded(e.what());
      continue;
    }
    const std::int64_t printed = formulas::printed_capacity_constant(form);
    if (printed != constant) {
      builder.finding("capacity constant C(" + form.to_string() + ")",
                      "printed formula gives " + std::to_string(printed) + ", oracle ratio is " +
                          std::to_string(constant) + "; the relation is checked with the oracle ratio");
    }
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
    const std::int64_t s = form.sum();
    parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
      const auto n = static_cast<std::int64_t>(i);
      outcomes[i] = evaluate_pair(
          [&] {
            std::int64_t v = oracle::count_squares(form, 8 * n + s, budget);
            if (s == 8) v -= oracle::count_squares(form, 2 * n + 2, budget);
            return v;
          },
          [&] { return constant * oracle::count_positive_triangular(form, n, budget); });
    });
    for (std::int64_t n = 0; n < count; ++n) builder.add(label, n, outcomes[static_cast<std::size_t>(n)]);
  }

  // Both count_t routes agree, and 16 divides t.
  std::vector<Form> t_forms = supported_t_forms();
  t_forms.emplace_back(1, 1, 3, 4);
  for (const Form& form : t_forms) {
    const std::string label = "t-routes(" + form.to_string() + ")";
    builder.touch(label);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
    parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
      const auto n = static_cast<std::int64_t>(i);
      outcomes[i] = evaluate_pair([&] { return oracle::count_triangular_direct(form, n, budget); },
                                  [&] { return oracle::count_triangular(form, n, budget); });
    });
    for (std::int64_t n = 0; n < count; ++n) {
      const Outcome& o = outcomes[static_cast<std::size_t>(n)];
      builder.add(label, n, o);
      if (o.formula && *o.formula % 16 != 0) {
        builder.add_counterexample({"16|t(" + form.to_string() + ")", n, 0, *o.formula % 16, "t mod 16"});
      }
    }
  }

  // 16-term inclusion-exclusion against the oracle.
  const std::int64_t ie_count = std::min(count, kInclusionExclusionMax + 1);
  for (const Form& form : inclusion_exclusion_forms()) {
    const std::string label = "inclusion-exclusion(" + form.to_string() + ")";
    builder.touch(label);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(ie_count));
    parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
      const auto n = static_cast<std::int64_t>(i);
      outcomes[i] = evaluate_pair([&] { return oracle::count_triangular(form, n, budget); },
                                  [&] { return formulas::t_by_inclusion_exclusion(form, n, budget); });
    });
    for (std::int64_t n = 0; n < ie_count; ++n) builder.add(label, n, outcomes[static_cast<std::size_t>(n)]);
  }

  // N(1,3,9,9; 8n+22) = 40 t'(1,3,9,9; n) and N(1,1,3,9; 8n+14) = 40 t'(1,1,3,9; n).
  const std::vector<std::pair<Form, std::int64_t>> forty = {{Form{1, 3, 9, 9}, 22}, {Form{1, 1, 3, 9}, 14}};
  for (const auto& [form, offset] : forty) {
    const std::string label = "N(" + form.to_string() + ";8n+" + std::to_string(offset) + ")=40t'";
    builder.touch(label);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
    parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
      const auto n = static_cast<std::int64_t>(i);
      outcomes[i] = evaluate_pair([&] { return oracle::count_squares(form, 8 * n + offset, budget); },
                                  [&] { return 40 * oracle::count_positive_triangular(form, n, budget); });
    });
    for (std::int64_t n = 0; n < count; ++n) builder.add(label, n, outcomes[static_cast<std::size_t>(n)]);
  }
  return builder.finish();
}

Report check_conjecture(std::int64_t n_max, const Options& options) {
  ReportBuilder builder("conjecture", 0, n_max, options);
  const Form form{1, 1, 3, 4};
  const std::size_t count = static_cast<std::size_t>(std::max<std::int64_t>(n_max + 1, 0));
  std::vector<Outcome> outcomes(count);
  // Largest n first: cost grows with n.
  parallel_for(count, options.jobs, [&](std::size_t i) {
    const std::size_t slot = count - 1 - i;
    const auto n = static_cast<std::int64_t>(slot);
    outcomes[slot] = evaluate_pair([&] { return oracle::count_triangular(form, n, options.budget); },
                                   [&] { return formulas::conjectured_t_1134(n); });
  });
  const std::string label = "t(1,1,3,4)";
  builder.touch(label);
  for (std::size_t n = 0; n < count; ++n) builder.add(label, static_cast<std::int64_t>(n), outcomes[n]);
  return builder.finish();
}

Report merge(std::string suite, const std::vector<Report>& parts) {
  Report out;
  out.suite = std::move(suite);
  bool budget = false;
  bool first = true;
  for (const auto& p : parts) {
    out.lo = first ? p.lo : std::min(out.lo, p.lo);
    out.hi = first ? p.hi : std::max(out.hi, p.hi);
    first = false;
    for (auto c : p.counterexamples) {
      c.label = p.suite + ":" + c.label;
      out.counterexamples.push_back(std::move(c));
    }
    out.findings.insert(out.findings.end(), p.findings.begin(), p.findings.end());
    for (const auto& [k, v] : p.case_counts) out.case_counts[p.suite + ":" + k] += v;
    out.cases.insert(out.cases.end(), p.cases.begin(), p.cases.end());
    if (!p.note.empty()) out.note += (out.note.empty() ? "" : "; ") + p.suite + ": " + p.note;
    out.elapsed_ms += p.elapsed_ms;
    budget = budget || p.status == Status::budget_exceeded;
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  out.status = !out.counterexamples.empty() ? Status::fail : budget ? Status::budget_exceeded : Status::pass;
  return out;
}

Report verify_all(const AllRanges& ranges, const Options& options) {
  std::vector<Report> parts;
  parts.push_back(verify_t_formulas(ranges.t_max, options));
  parts.push_back(verify_n_formulas(ranges.n_max, options));
  parts.push_back(verify_series_identities(ranges.series_order, options));
  parts.push_back(check_eta_coefficients(ranges.eta_max, options));
  parts.push_back(verify_relations(ranges.relations_max, options));
  parts.push_back(check_conjecture(ranges.conjecture_max, options));
  return merge("all", parts);
}

}  // namespace trirep::verify
