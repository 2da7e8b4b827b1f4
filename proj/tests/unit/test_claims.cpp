#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "atl/claims.hpp"
#include "atl/report_io.hpp"

using namespace atl;

namespace {
const ClaimRecord& record(const ClaimReport& report, std::string_view id) {
  for (const auto& r : report.records) {
    if (r.id == id) return r;
  }
  FAIL("missing record " << id);
  throw std::logic_error("unreachable");
}

const ClaimReport& default_report() {
  static const ClaimReport report = run_all();
  return report;
}
}  // namespace

TEST_CASE("registry ids are unique and cover the required claims") {
  std::set<std::string> ids;
  for (const Claim& c : builtin_registry()) CHECK(ids.insert(c.id).second);
  for (const char* id : {"CL-01", "CL-02", "CL-03", "CL-04", "CL-05", "CL-06", "CL-07", "CL-08",
                         "CL-09", "CL-10.g2", "CL-10.g10", "CL-11", "CL-12", "CL-13", "CL-14",
                         "CL-15", "CL-16", "CL-17", "CL-18", "CL-19", "CL-19-statement", "CL-20",
                         "CL-21", "CL-21.jk", "CL-21.wilms"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  CHECK(builtin_registry().size() >= 21);
}

TEST_CASE("claimed values carry the printed digits") {
  CHECK(std::get<double>(find_claim("CL-05")->claimed) == 0.5474277074);
  CHECK(std::get<double>(find_claim("CL-10.g3")->claimed) == 9.76363);
  CHECK(find_claim("CL-10.g3")->quote == "g=3: 9.76363");
  CHECK(find_claim("nope") == nullptr);
}

TEST_CASE("expected statuses under default precision") {
  const ClaimReport& r = default_report();
  for (const char* id : {"CL-01", "CL-02", "CL-03", "CL-04", "CL-05", "CL-06", "CL-07", "CL-08",
                         "CL-09", "CL-13-rounded", "CL-15", "CL-16", "CL-17", "CL-18", "CL-19",
                         "CL-22"}) {
    CHECK_MESSAGE(record(r, id).status == ClaimStatus::confirmed, id);
  }
  for (int g = 2; g <= 10; ++g) {
    CHECK(record(r, "CL-10.g" + std::to_string(g)).status == ClaimStatus::confirmed);
  }
  for (const char* id : {"CL-07-arith", "CL-11", "CL-12", "CL-13", "CL-13-bound", "CL-14",
                         "CL-19-statement", "CL-23"}) {
    CHECK_MESSAGE(record(r, id).status == ClaimStatus::discrepant, id);
  }
  for (const char* id : {"CL-21", "CL-21.jk", "CL-21.wilms"}) {
    CHECK(record(r, id).status == ClaimStatus::assumed);
    CHECK(std::holds_alternative<std::monostate>(record(r, id).computed));
  }
  CHECK(r.summary.errored == 0);
  CHECK(r.warnings.empty());
}

TEST_CASE("deltas of the forensic claims") {
  const ClaimReport& r = default_report();
  CHECK(std::get<double>(record(r, "CL-01").computed) == doctest::Approx(0.0831013716283738).epsilon(1e-13));
  CHECK(record(r, "CL-12").delta.value() == doctest::Approx(1.837877497).epsilon(1e-8));
  CHECK(record(r, "CL-13").delta.value() == doctest::Approx(4.2519929755e-7).epsilon(1e-6));
  CHECK(record(r, "CL-14").delta.value() == doctest::Approx(-0.005).epsilon(1e-9));
  CHECK(record(r, "CL-03").delta.value() == doctest::Approx(-0.0120117266762).epsilon(1e-9));
  CHECK(record(r, "CL-22").delta.value() == 13.0);
}

TEST_CASE("summary counts match the records") {
  const ClaimReport& r = default_report();
  ClaimSummary s;
  for (const auto& rec : r.records) {
    if (rec.status == ClaimStatus::confirmed) ++s.confirmed;
    if (rec.status == ClaimStatus::discrepant) ++s.discrepant;
    if (rec.status == ClaimStatus::assumed) ++s.assumed;
    if (rec.status == ClaimStatus::ambiguous) ++s.ambiguous;
    if (rec.status == ClaimStatus::errored) ++s.errored;
  }
  CHECK(s == r.summary);
  CHECK(r.records.size() == builtin_registry().size());
}

TEST_CASE("records come out in registry order and reproducibly") {
  const ClaimReport again = run_all();
  CHECK(Json(again).dump() == Json(default_report()).dump());
  for (std::size_t i = 0; i < again.records.size(); ++i) {
    CHECK(again.records[i].id == builtin_registry()[i].id);
  }
}

TEST_CASE("selected run and unknown ids") {
  const std::vector<std::string> ids = {"CL-15", "CL-05"};
  const ClaimReport r = run_selected(ids);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].id == "CL-05");
  CHECK(r.records[1].id == "CL-15");
  const std::vector<std::string> bad = {"CL-99"};
  CHECK_THROWS_AS(run_selected(bad), std::invalid_argument);
}

TEST_CASE("kernel failures become ERRORED") {
  Claim broken{"X-1", "test", "x", ClaimKind::equality, 1.0,
               [](const Precision&) -> ClaimOutcome { throw std::runtime_error("boom"); }};
  const ClaimRecord rec = evaluate(broken);
  CHECK(rec.status == ClaimStatus::errored);
  CHECK(rec.note == "boom");
  Precision bad;
  bad.em_order = 0;
  CHECK(evaluate(*find_claim("CL-05"), bad).status == ClaimStatus::errored);
}

TEST_CASE("strict policy") {
  const ClaimReport& r = default_report();
  CHECK(strict_exit_code(r, Allowlist::builtin()) == 0);
  CHECK(strict_exit_code(r, Allowlist{}) == 1);
  ClaimReport errored = r;
  errored.records[0].status = ClaimStatus::errored;
  CHECK(strict_exit_code(errored, Allowlist::builtin()) == 1);
}

TEST_CASE("allowlist parsing and patterns") {
  const Allowlist a = Allowlist::parse(R"({"expected_discrepant": ["CL-10.*", "CL-12"]})");
  CHECK(a.contains("CL-10.g4"));
  CHECK(a.contains("CL-12"));
  CHECK_FALSE(a.contains("CL-1"));
  CHECK_FALSE(a.contains("CL-13"));
  CHECK_THROWS_AS(Allowlist::parse("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(Allowlist::parse("{"), std::invalid_argument);
  CHECK_THROWS_AS(Allowlist::parse(R"({"expected_discrepant": [3]})"), std::invalid_argument);
}

TEST_CASE("shipped allowlist file matches the embedded copy and the registry") {
  std::ifstream in(std::string(ATL_PROJECT_DATA_DIR) + "/expected_discrepancies.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  const Allowlist file = Allowlist::parse(ss.str());
  CHECK(file.patterns() == Allowlist::builtin().patterns());
  for (const std::string& id : file.patterns()) CHECK_MESSAGE(find_claim(id) != nullptr, id);
}

TEST_CASE("allowlisted claims that confirm raise a warning") {
  const Allowlist loose({"CL-05", "CL-404"});
  const std::vector<std::string> ids = {"CL-05"};
  const ClaimReport r = run_selected(ids, {}, loose);
  REQUIRE(r.warnings.size() == 2);
  CHECK(r.warnings[0].find("CL-05") != std::string::npos);
  CHECK(r.warnings[1].find("CL-404") != std::string::npos);
}

TEST_CASE("status and kind names") {
  for (auto s : {ClaimStatus::confirmed, ClaimStatus::discrepant, ClaimStatus::assumed,
                 ClaimStatus::ambiguous, ClaimStatus::errored}) {
    CHECK(claim_status_from_string(to_string(s)) == s);
  }
  for (auto k : {ClaimKind::equality, ClaimKind::inequality, ClaimKind::sweep, ClaimKind::ambiguous}) {
    CHECK(claim_kind_from_string(to_string(k)) == k);
  }
  CHECK(to_string(ClaimStatus::confirmed) == "CONFIRMED");
  CHECK_THROWS_AS(claim_status_from_string("OK"), std::invalid_argument);
}
