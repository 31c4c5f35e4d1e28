#pragma once

#include "sheaf/census.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sheaf {

inline constexpr const char* kToolName = "sheaf-census";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

Json to_json(const CensusReport& r);
// Inverse of to_json. Throws std::invalid_argument on malformed input.
CensusReport census_from_json(const Json& j);

std::string render_csv(const CensusReport& r);
std::string render_table(const CensusReport& r);

// One nilpotent orbit with its local irreducible counts per central character.
struct OrbitRow {
  OrbitLabel label;
  std::optional<DiagramClass> cls;  // bdi only
  Count k0 = 0;
  Count k1 = 0;
};

struct OrbitFilter {
  std::optional<SigmaClass> cls;
  bool richardson = false;
};

std::vector<OrbitRow> orbits_bdi(int p, int q, const OrbitFilter& f = {});
std::vector<OrbitRow> orbits_diii(int n, const OrbitFilter& f = {});

Json to_json(const OrbitRow& r);
std::string render_csv(const std::vector<OrbitRow>& rows);
std::string render_table(const std::vector<OrbitRow>& rows);

Json envelope(const std::vector<std::string>& command, Json payload, const std::vector<std::string>& warnings);

}  // namespace sheaf
