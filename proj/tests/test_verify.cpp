#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "koebe/verify.hpp"

using namespace koebe;

TEST_CASE("report is deterministic and sorted", "[verify]") {
  const VerificationReport r1 = run_verification(2, 6);
  const VerificationReport r2 = run_verification(2, 6);
  CHECK(r1.to_json().dump() == r2.to_json().dump());
  CHECK(r1.all_pass());

  for (std::size_t i = 0; i + 1 < r1.entries.size(); ++i) {
    const auto& a = r1.entries[i];
    const auto& b = r1.entries[i + 1];
    CHECK((a.name < b.name || (a.name == b.name && a.n < b.n)));
  }
}

TEST_CASE("report runs identically across thread counts", "[verify]") {
  const VerificationReport seq = run_verification(2, 5, 1);
  const VerificationReport par = run_verification(2, 5, 4);
  CHECK(seq.to_json().dump() == par.to_json().dump());
}

TEST_CASE("report JSON round-trips", "[verify]") {
  const std::string text = run_verification(2, 4).to_json().dump();
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed["schema"] == "koebe-verification-report/1");
  CHECK(parsed["n_min"] == 2);
  CHECK(parsed["n_max"] == 4);
  CHECK(parsed["all_pass"].is_boolean());
  CHECK(parsed["tolerances"].is_object());
  REQUIRE(parsed["entries"].is_array());
  for (const auto& e : parsed["entries"]) {
    CHECK(e.contains("check"));
    CHECK(e.contains("n"));
    CHECK(e.contains("computed"));
    CHECK(e.contains("reference"));
    CHECK(e.contains("residual"));
    CHECK(e.contains("pass"));
  }
  // parse -> serialize -> parse is the identity on the value level
  CHECK(nlohmann::json::parse(parsed.dump()) == parsed);
}

TEST_CASE("timings are opt-in", "[verify]") {
  const VerificationReport r = run_verification(3, 3);
  const nlohmann::json plain = nlohmann::json::parse(r.to_json(false).dump());
  const nlohmann::json timed = nlohmann::json::parse(r.to_json(true).dump());
  CHECK_FALSE(plain["entries"][0].contains("seconds"));
  CHECK(timed["entries"][0].contains("seconds"));
}

TEST_CASE("tolerance floor relaxes checks", "[verify]") {
  const VerificationReport r = run_verification(2, 2, 1, 1e-8);
  for (const auto& [name, tol] : r.tolerances) CHECK(tol >= 1e-8);
  CHECK(r.all_pass());
}

TEST_CASE("argument validation", "[verify]") {
  CHECK_THROWS_AS(run_verification(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(run_verification(5, 4), std::invalid_argument);
}

TEST_CASE("perturbations never improve the objective", "[verify]") {
  for (int n = 2; n <= 8; ++n) CHECK(perturbation_improvement(n) <= 1e-9);
}
