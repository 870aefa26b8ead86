#include "trirep/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace trirep::verify {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["range"] = {report.lo, report.hi};
  j["status"] = to_string(report.status);
  auto& ces = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    nlohmann::ordered_json e;
    e["input"] = c.input();
    e["oracle"] = c.oracle ? nlohmann::ordered_json(*c.oracle) : nlohmann::ordered_json(nullptr);
    e["formula"] = c.formula ? nlohmann::ordered_json(*c.formula) : nlohmann::ordered_json(nullptr);
    if (!c.detail.empty()) e["detail"] = c.detail;
    ces.push_back(std::move(e));
  }
  auto& fs = j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : report.findings) fs.push_back({{"id", f.id}, {"detail", f.detail}});
  j["cases"] = report.total_cases();
  if (!report.note.empty()) j["note"] = report.note;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2);
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  const auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  out << "kind,suite,input,oracle,formula,detail\n";
  out << "summary," << csv_field(report.suite) << "," << report.lo << ".." << report.hi << ",,,"
      << to_string(report.status) << "\n";
  for (const auto& c : report.counterexamples) {
    out << "counterexample," << csv_field(report.suite) << "," << csv_field(c.input()) << "," << opt(c.oracle)
        << "," << opt(c.formula) << "," << csv_field(c.detail) << "\n";
  }
  for (const auto& f : report.findings) {
    out << "finding," << csv_field(report.suite) << "," << csv_field(f.id) << ",,," << csv_field(f.detail) << "\n";
  }
  if (!report.note.empty()) out << "note," << csv_field(report.suite) << ",,,," << csv_field(report.note) << "\n";
  out << "elapsed_ms," << csv_field(report.suite) << ",,,," << report.elapsed_ms << "\n";
  return out.str();
}

void write_cases_csv(const Report& report, std::ostream& out) {
  out << "label,argument,oracle,formula\n";
  for (const auto& c : report.cases) {
    out << csv_field(c.label) << "," << c.argument << "," << c.oracle << "," << c.formula << "\n";
  }
}

}  // namespace trirep::verify
