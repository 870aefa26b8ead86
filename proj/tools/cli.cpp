#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trirep/errors.hpp"
#include "trirep/form.hpp"
#include "trirep/formulas.hpp"
#include "trirep/oracle.hpp"
#include "trirep/qseries.hpp"
#include "trirep/report_io.hpp"
#include "trirep/verify.hpp"

namespace trirep::cli {
namespace {

// Flags validated by CLI11 but needing domain checks before any computation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return oracle::kDefaultWorkBudget;
}

Form parse_form(const std::string& text) {
  try {
    return Form::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_series(const qseries::Series& s, const std::string& format, std::ostream& out) {
  const auto c = s.coefficients();
  if (format == "csv") {
    out << "index,coefficient\n";
    for (std::size_t i = 0; i < c.size(); ++i) out << i << "," << c[i] << "\n";
    return;
  }
  out << nlohmann::json(std::vector<std::int64_t>(c.begin(), c.end())).dump() << "\n";
}

int emit_report(const verify::Report& report, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << verify::to_csv(report);
  } else {
    out << verify::to_json(report) << "\n";
  }
  return report.passed() ? kExitPass : kExitFail;
}

struct Settings {
  std::int64_t budget = oracle::kDefaultWorkBudget;
  unsigned jobs = 1;
};

int run_eval(const std::string& form_text, std::int64_t n, const std::string& method, const std::string& quantity,
             const Settings& settings, std::ostream& out, std::ostream& err) {
  const Form form = parse_form(form_text);
  const oracle::WorkBudget budget{settings.budget};
  const bool is_t = quantity == "t";
  if (!is_t && n < 1 && method != "oracle") throw UsageError("--n must be >= 1 for quantity N");

  std::optional<std::int64_t> formula, truth;
  if (method == "formula" || method == "both") {
    try {
      formula = is_t ? formulas::t_formula(form, n) : formulas::n_formula(form, n);
    } catch (const UnsupportedForm& e) {
      throw UsageError(e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (method == "oracle" || method == "both") {
    try {
      truth = is_t ? oracle::count_triangular(form, n, budget) : oracle::count_squares(form, n, budget);
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << "\n";
      return kExitFail;
    }
  }
  if (method == "formula") {
    out << "formula=" << *formula << "\n";
  } else if (method == "oracle") {
    out << "oracle=" << *truth << "\n";
  } else {
    const bool match = *formula == *truth;
    out << "formula=" << *formula << " oracle=" << *truth << " match=" << bool_text(match) << "\n";
    return match ? kExitPass : kExitFail;
  }
  return kExitPass;
}

int run_oracle(const std::string& form_text, std::int64_t n, const std::string& quantity,
               const Settings& settings, std::ostream& out, std::ostream& err) {
  const Form form = parse_form(form_text);
  const oracle::WorkBudget budget{settings.budget};
  try {
    std::int64_t v = 0;
    if (quantity == "t") {
      v = oracle::count_triangular(form, n, budget);
    } else if (quantity == "tprime") {
      v = oracle::count_positive_triangular(form, n, budget);
    } else if (quantity == "N") {
      v = oracle::count_squares(form, n, budget);
    } else {
      v = oracle::count_odd_squares(form, n, budget);
    }
    out << v << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int run_series(const std::string& kind, std::int64_t k, int e, const std::string& form_text, std::size_t order,
               const std::string& format, std::ostream& out) {
  if (k < 1) throw UsageError("--k must be >= 1");
  if (e < 1) throw UsageError("--e must be >= 1");
  std::optional<qseries::Series> s;
  if (kind == "phi") {
    s = qseries::theta_phi(k, order);
  } else if (kind == "psi") {
    s = qseries::theta_psi(k, order);
  } else if (kind == "eta") {
    s = qseries::eta_power(k, e, order);
  } else {
    if (form_text.empty()) throw UsageError("--form is required for --kind " + kind);
    const Form form = parse_form(form_text);
    s = kind == "tgen" ? qseries::triangular_generating(form, order) : qseries::square_generating(form, order);
  }
  print_series(*s, format, out);
  return kExitPass;
}

int run_verify(const std::string& suite, std::optional<std::int64_t> max, const std::string& format,
               const std::string& dump, const Settings& settings, std::ostream& out, std::ostream& err) {
  verify::Options options;
  options.jobs = settings.jobs;
  options.budget = {settings.budget};
  options.record_cases = !dump.empty();
  if (suite == "series" && max && *max < 8) throw UsageError("--max must be >= 8 for the series suite");

  verify::Report report;
  if (suite == "t") {
    report = verify::verify_t_formulas(max.value_or(verify::kDefaultTMax), options);
  } else if (suite == "n") {
    report = verify::verify_n_formulas(max.value_or(verify::kDefaultNMax), options);
  } else if (suite == "series") {
    report = verify::verify_series_identities(static_cast<std::size_t>(max.value_or(verify::kDefaultSeriesOrder)),
                                              options);
  } else if (suite == "relations") {
    report = verify::verify_relations(max.value_or(verify::kDefaultRelationsMax), options);
  } else {
    verify::AllRanges ranges;
    if (max) {
      ranges = {*max, std::max<std::int64_t>(*max, 1), static_cast<std::size_t>(std::max<std::int64_t>(*max, 8)), *max, *max,
                *max};
    }
    report = verify::verify_all(ranges, options);
  }

  if (!dump.empty()) {
    std::ofstream file(dump);
    if (!file) {
      err << "error: cannot open dump file " << dump << "\n";
      return kExitUsage;
    }
    verify::write_cases_csv(report, file);
  }
  return emit_report(report, format, out);
}

int run_table(const std::string& form_text, std::int64_t n_max, const std::string& format, const Settings& settings,
              std::ostream& out) {
  const Form form = parse_form(form_text);
  const bool supported = formulas::find_t_entry(form) != nullptr;
  const oracle::WorkBudget budget{settings.budget};

  struct Row {
    std::int64_t n;
    std::optional<std::int64_t> formula;
    std::int64_t oracle;
  };
  std::vector<Row> rows;
  std::string warning;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    try {
      const std::int64_t truth = oracle::count_triangular(form, n, budget);
      rows.push_back({n, supported ? std::optional(formulas::t_formula(form, n)) : std::nullopt, truth});
    } catch (const BudgetExceeded& e) {
      warning = "budget exceeded at n=" + std::to_string(n) + ": " + e.what();
      break;
    }
  }

  bool all_match = true;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["form"] = form_text;
    auto& arr = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n"] = r.n;
      row["t_formula"] = r.formula ? nlohmann::ordered_json(*r.formula) : nlohmann::ordered_json(nullptr);
      row["t_oracle"] = r.oracle;
      row["match"] = r.formula ? nlohmann::ordered_json(*r.formula == r.oracle) : nlohmann::ordered_json(nullptr);
      if (r.formula && *r.formula != r.oracle) all_match = false;
      arr.push_back(std::move(row));
    }
    if (!warning.empty()) j["warning"] = warning;
    out << j.dump(2) << "\n";
  } else {
    out << "n,t_formula,t_oracle,match\n";
    for (const auto& r : rows) {
      out << r.n << "," << (r.formula ? std::to_string(*r.formula) : "") << "," << r.oracle << ","
          << (r.formula ? bool_text(*r.formula == r.oracle) : "") << "\n";
      if (r.formula && *r.formula != r.oracle) all_match = false;
    }
    if (!warning.empty()) out << "# warning: " << warning << "\n";
  }
  return (all_match && warning.empty()) ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation counts by weighted sums of four triangular numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  settings.budget = default_budget();
  app.add_option("--budget", settings.budget, "Oracle work budget (inner-loop iterations per count)")
      ->check(CLI::PositiveNumber);

  std::string form_text;
  std::int64_t n = 0;
  std::string method = "formula";
  std::string quantity = "t";
  std::string format = "json";
  std::string dump;

  auto* eval = app.add_subcommand("eval", "Evaluate t (or N) by closed form, oracle, or both");
  eval->add_option("--form", form_text, "Coefficients a,b,c,d")->required();
  eval->add_option("--n", n, "Argument")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "both"}));
  eval->add_option("--quantity", quantity)->check(CLI::IsMember({"t", "N"}));

  std::string oracle_quantity = "t";
  auto* orc = app.add_subcommand("oracle", "Brute-force count");
  orc->add_option("--form", form_text, "Coefficients a,b,c,d")->required();
  orc->add_option("--n", n, "Argument")->required()->check(CLI::NonNegativeNumber);
  orc->add_option("--quantity", oracle_quantity)->check(CLI::IsMember({"t", "tprime", "N", "N0"}));

  std::string kind = "phi";
  std::int64_t k = 1;
  int e = 1;
  std::size_t order = 0;
  std::string series_format = "json";
  auto* series = app.add_subcommand("series", "Print truncated q-series coefficients");
  series->add_option("--kind", kind, "phi, psi, eta, tgen (psi product) or ngen (phi product)")
      ->check(CLI::IsMember({"phi", "psi", "eta", "tgen", "ngen"}));
  series->add_option("--k", k, "Argument scale q -> q^k");
  series->add_option("--e", e, "Exponent for eta");
  series->add_option("--form", form_text, "Coefficients for tgen/ngen");
  series->add_option("--order", order, "Truncation order")->required();
  series->add_option("--format", series_format)->check(CLI::IsMember({"json", "csv"}));

  std::string suite = "all";
  std::optional<std::int64_t> max;
  std::string verify_format = "json";
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"t", "n", "series", "relations", "all"}));
  ver->add_option("--max", max, "Range upper bound (n, m or truncation order)")->check(CLI::NonNegativeNumber);
  ver->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv"}));
  ver->add_option("--jobs", settings.jobs)->check(CLI::PositiveNumber);
  ver->add_option("--dump", dump, "Write every compared value as CSV to this path");

  std::int64_t conj_max = verify::kDefaultConjectureMax;
  std::string conj_format = "json";
  auto* conj = app.add_subcommand("conjecture", "Check the conjectured t(1,1,3,4) formula");
  conj->add_option("--max-n", conj_max)->check(CLI::NonNegativeNumber);
  conj->add_option("--format", conj_format)->check(CLI::IsMember({"json", "csv"}));
  conj->add_option("--jobs", settings.jobs)->check(CLI::PositiveNumber);

  std::int64_t table_max = 0;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "Tabulate closed form against oracle");
  table->add_option("--form", form_text, "Coefficients a,b,c,d")->required();
  table->add_option("--max", table_max)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--budget") {
      ++i;
      continue;
    }
    if (args[i].empty() || args[i][0] == '-') continue;
    const auto subs = app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == args[i]; });
    if (subs.empty()) {
      err << "usage error: unknown subcommand '" << args[i] << "'\n";
      return kExitUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) return run_eval(form_text, n, method, quantity, settings, out, err);
    if (*orc) return run_oracle(form_text, n, oracle_quantity, settings, out, err);
    if (*series) return run_series(kind, k, e, form_text, order, series_format, out);
    if (*ver) return run_verify(suite, max, verify_format, dump, settings, out, err);
    if (*conj) {
      verify::Options options;
      options.jobs = settings.jobs;
      options.budget = {settings.budget};
      return emit_report(verify::check_conjecture(conj_max, options), conj_format, out);
    }
    if (*table) return run_table(form_text, table_max, table_format, settings, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace trirep::cli
