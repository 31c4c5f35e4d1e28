#include "sheaf/report.hpp"

#include <doctest.h>

#include <regex>

using namespace sheaf;

TEST_CASE("JSON round trip on every census output") {
  for (int N = 0; N <= 12; ++N)
    for (int p = 0; p <= N; ++p)
      for (Central c : {Central::k0, Central::k1})
        for (Subset s : {Subset::all, Subset::cuspidal, Subset::nilpotent, Subset::full}) {
          const auto r = restrict_to(census_bdi(p, N - p, c), s);
          const auto text = to_json(r).dump();
          CHECK(census_from_json(Json::parse(text)) == r);
        }
  for (int n = 0; n <= 8; ++n) {
    auto [k0, k1] = census_diii(n);
    CHECK(census_from_json(to_json(k0)) == k0);
    CHECK(census_from_json(to_json(k1)) == k1);
  }
}

TEST_CASE("JSON layout") {
  const auto j = to_json(census_bdi_k0(3, 2));
  CHECK(j["pair"]["type"] == "bdi");
  CHECK(j["pair"]["p"] == 3);
  CHECK(j["pair"]["q"] == 2);
  CHECK(j["pair"]["n"] == 2);
  CHECK(j["central"] == "k0");
  CHECK(j["total"] == 11);
  CHECK(j["warnings"].is_array());
  bool saw_null = false, saw_delta = false;
  for (const auto& s : j["strata"]) {
    for (const char* key : {"support", "delta", "m", "k", "mu", "family", "count"}) CHECK(s.contains(key));
    CHECK(s["count"].is_number_integer());
    saw_null |= s["delta"].is_null();
    saw_delta |= s["delta"].is_string();
  }
  CHECK(saw_null);
  CHECK(saw_delta);
  CHECK_THROWS_AS(census_from_json(Json::parse(R"({"pair":{}})")), std::invalid_argument);
}

TEST_CASE("csv and table carry the same total") {
  for (auto r : {census_bdi_k0(3, 2), census_bdi_k1(4, 2), census_diii(5).first}) {
    const std::string total = std::to_string(r.total);
    const auto csv = render_csv(r);
    const auto last = csv.substr(csv.rfind('\n', csv.size() - 2) + 1);
    CHECK(last.find(",total,") != std::string::npos);
    CHECK(last.substr(last.rfind(',') + 1) == total + "\n");
    CHECK(render_table(r).find("total: " + total + "\n") != std::string::npos);
  }
}

TEST_CASE("orbit listings") {
  CHECK(orbits_bdi(3, 2).size() == 8);
  CHECK(orbits_bdi(3, 2, {SigmaClass::sigma1, false}).size() == 2);
  CHECK(orbits_bdi(3, 2, {std::nullopt, true}).size() == 4);
  CHECK(orbits_diii(3).size() == 4);
  CHECK(orbits_diii(3, {std::nullopt, true}).size() == 3);
  CHECK_THROWS_AS(orbits_diii(3, {SigmaClass::sigma1, false}), std::invalid_argument);
  for (int N = 0; N <= 10; ++N)
    for (int p = 0; p <= N; ++p)
      for (const auto& row : orbits_bdi(p, N - p)) {
        const auto printed = row.label.diagram.to_string();
        CHECK(SignedYoungDiagram::parse(printed) == row.label.diagram);
      }
  const auto j = to_json(orbits_bdi(3, 2).front());
  CHECK(j.contains("class"));
  CHECK(render_table(orbits_bdi(3, 2)).find("orbits: 8") != std::string::npos);
}

TEST_CASE("envelope") {
  const auto e = envelope({"census", "bdi"}, Json::object(), {"w"});
  CHECK(e["tool"] == kToolName);
  CHECK(e["version"] == kToolVersion);
  CHECK(e["command"].size() == 2);
  CHECK(e["warnings"][0] == "w");
}
