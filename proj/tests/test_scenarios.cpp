#include <set>

#include "d4cr/scenarios.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace d4cr;

TEST_CASE("registry") {
  const auto& reg = scenario_registry();
  REQUIRE(reg.size() == 10);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == "S" + std::to_string(i + 1));
    CHECK_FALSE(reg[i].claim.empty());
    ids.insert(reg[i].id);
  }
  CHECK(ids.size() == reg.size());
  CHECK_THROWS_AS(run_scenario("S0"), UnknownScenario);
}

TEST_CASE("every scenario passes") {
  for (const Report& r : run_all()) {
    INFO(r.scenario, " ", emit({r}, Format::Text));
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("golden details") {
  Report s1 = run_scenario("S1");
  REQUIRE(s1.find_detail("permutation"));
  CHECK(*s1.find_detail("permutation") == "(4 5 8 11 10 7)(6 9)(12)");
  Report s5 = run_scenario("S5");
  REQUIRE(s5.find_detail("certificate"));
  CHECK(*s5.find_detail("certificate") == "UNSOLVABLE-OVER-K: (p)^2 = a with p = y+x9");
  Report s8 = run_scenario("S8");
  CHECK(*s8.find_detail("image_of_11") == "-11");
  CHECK(*s8.find_detail("image_of_2") == "-2");
  CHECK(*s8.find_detail("membership") == "NotInParabolic");
  CHECK_FALSE(s8.notes.empty());
}

TEST_CASE("emit") {
  CHECK(emit({}, Format::Text).find("0 scenarios") != std::string::npos);
  CHECK(emit({}, Format::Json) == "[]\n");

  Report s1 = run_scenario("S1");
  auto j = nlohmann::json::parse(emit({s1}, Format::Json));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["scenario"] == "S1");
  for (const char* f : {"scenario", "claim", "status", "paper_refs", "details", "notes"}) CHECK(j[0].contains(f));

  std::string text8 = emit({run_scenario("S8")}, Format::Text);
  CHECK(text8.find("NOTE:") != std::string::npos);
}

TEST_CASE("json round trip and determinism") {
  std::string first = emit(run_all(), Format::Json);
  std::string second = emit(run_all(), Format::Json);
  CHECK(first == second);
  CHECK(emit(run_all(), Format::Text) == emit(run_all(), Format::Text));
  auto parsed = nlohmann::ordered_json::parse(first);
  CHECK(parsed.dump(2) + "\n" == first);
}
