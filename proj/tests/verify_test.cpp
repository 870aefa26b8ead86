#include <gtest/gtest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "trirep/errors.hpp"
#include "trirep/formulas.hpp"
#include "trirep/qseries.hpp"
#include "trirep/report_io.hpp"
#include "trirep/verify.hpp"

namespace trirep::verify {
namespace {

TEST(VerifyT, ZeroRange) {
  const auto r = verify_t_formulas(0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.case_counts.size(), 13u);
  EXPECT_EQ(r.total_cases(), 13);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(VerifyT, FiftyPassesAndSurfacesEvenBranchErratum) {
  const auto r = verify_t_formulas(50);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.total_cases(), 13 * 51);
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].id, formulas::known_errata()[0].id);
}

TEST(VerifyN, FiftyPasses) {
  const auto r = verify_n_formulas(50);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.total_cases(), 0);
  EXPECT_TRUE(r.findings.empty());
}

TEST(VerifyN, EntriesWithEmptyDomainRecordZero) {
  // m = 1 lies outside the domain of every entry that needs m >= 2 or a
  // particular residue; those entries must still appear with a count.
  const auto r = verify_n_formulas(1);
  EXPECT_TRUE(r.passed());
  bool has_zero = false;
  for (const auto& [label, count] : r.case_counts) has_zero = has_zero || count == 0;
  EXPECT_TRUE(has_zero);
  std::set<Form> forms;
  for (const auto& e : formulas::n_registry()) forms.insert(e.form);
  EXPECT_EQ(r.case_counts.size(), forms.size());
}

TEST(VerifySeries, SmallOrder) {
  EXPECT_TRUE(verify_series_identities(8).passed());
  EXPECT_THROW(verify_series_identities(7), DomainError);
}

TEST(VerifySeries, PerturbedSeriesFailsAtFirstDifference) {
  const auto phi = qseries::theta_phi(1, 30);
  auto c = std::vector<std::int64_t>(phi.coefficients().begin(), phi.coefficients().end());
  c[17] = 5;
  c[25] = 7;
  const auto ce = compare_series("phi", phi, qseries::Series(c));
  ASSERT_TRUE(ce.has_value());
  EXPECT_EQ(ce->argument, 17);
  EXPECT_EQ(ce->oracle, 0);
  EXPECT_EQ(ce->formula, 5);
  EXPECT_FALSE(compare_series("phi", phi, phi).has_value());
}

TEST(VerifyRelations, TenPassesWithCapacityFinding) {
  const auto r = verify_relations(10);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].id, formulas::known_errata()[1].id);
  EXPECT_NE(r.findings[0].detail.find("24"), std::string::npos);
}

TEST(Conjecture, SmallRanges) {
  EXPECT_TRUE(check_conjecture(1).passed());
  const auto r = check_conjecture(100);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.total_cases(), 101);
}

TEST(Eta, CoefficientCheck) { EXPECT_TRUE(check_eta_coefficients(500).passed()); }

TEST(Determinism, IndependentOfJobs) {
  Options one;
  Options four;
  four.jobs = 4;
  one.record_cases = four.record_cases = true;
  const auto a = verify_relations(12, one);
  const auto b = verify_relations(12, four);
  EXPECT_EQ(a.case_counts, b.case_counts);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].label, b.cases[i].label);
    EXPECT_EQ(a.cases[i].argument, b.cases[i].argument);
    EXPECT_EQ(a.cases[i].oracle, b.cases[i].oracle);
  }
}

TEST(Budget, ExhaustionYieldsPartialReport) {
  Options tight;
  tight.budget = {2000};
  const auto r = verify_t_formulas(300, tight);
  EXPECT_EQ(r.status, Status::budget_exceeded);
  EXPECT_FALSE(r.note.empty());
  EXPECT_GT(r.total_cases(), 0);
  EXPECT_LT(r.total_cases(), 13 * 301);
}

TEST(Merge, WorstStatusAndPrefixedLabels) {
  Report ok;
  ok.suite = "a";
  ok.hi = 5;
  Report bad;
  bad.suite = "b";
  bad.hi = 9;
  bad.status = Status::fail;
  bad.counterexamples.push_back({"x", 3, 1, 2, {}});
  const auto m = merge("all", {ok, bad});
  EXPECT_EQ(m.status, Status::fail);
  EXPECT_EQ(m.hi, 9);
  ASSERT_EQ(m.counterexamples.size(), 1u);
  EXPECT_EQ(m.counterexamples[0].input(), "b:x;3");
}

TEST(ReportIo, JsonSchema) {
  Report r;
  r.suite = "t";
  r.lo = 0;
  r.hi = 4;
  r.status = Status::fail;
  r.counterexamples.push_back({"t(1,1,1,1)", 2, 48, 40, {}});
  r.elapsed_ms = 12;
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["suite"], "t");
  EXPECT_EQ(j["range"], nlohmann::json::array({0, 4}));
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["counterexamples"][0]["input"], "t(1,1,1,1);2");
  EXPECT_EQ(j["counterexamples"][0]["oracle"], 48);
  EXPECT_EQ(j["counterexamples"][0]["formula"], 40);
  EXPECT_EQ(j["elapsed_ms"], 12);
}

TEST(ReportIo, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  Report r;
  r.suite = "n";
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.rfind("kind,suite,input,oracle,formula,detail\n", 0), 0u);
}

TEST(ReportIo, CasesDump) {
  Options o;
  o.record_cases = true;
  const auto r = verify_t_formulas(2, o);
  std::ostringstream out;
  write_cases_csv(r, out);
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 1 + 13 * 3);
}

}  // namespace
}  // namespace trirep::verify
