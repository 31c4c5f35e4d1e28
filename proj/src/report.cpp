#include "sheaf/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sheaf {

Json to_json(const CensusReport& r) {
  Json strata = Json::array();
  for (const auto& e : r.entries) {
    Json s;
    s["support"] = e.support.diagram.to_string();
    s["delta"] = e.support.delta ? Json(roman(*e.support.delta)) : Json(nullptr);
    s["m"] = e.m;
    s["k"] = e.k;
    s["mu"] = e.mu.to_string();
    s["family"] = to_string(e.family);
    s["count"] = e.count;
    strata.push_back(std::move(s));
  }
  Json j;
  j["pair"] = {{"type", to_string(r.type)}, {"p", r.p}, {"q", r.q}, {"n", r.n}};
  j["central"] = to_string(r.central);
  j["subset"] = to_string(r.subset);
  j["strata"] = std::move(strata);
  j["total"] = r.total;
  j["warnings"] = r.warnings;
  return j;
}

CensusReport census_from_json(const Json& j) {
  try {
    CensusReport r;
    const auto& pair = j.at("pair");
    r.type = parse_pair_type(pair.at("type").get<std::string>());
    r.p = pair.at("p").get<int>();
    r.q = pair.at("q").get<int>();
    r.n = pair.at("n").get<int>();
    r.central = parse_central(j.at("central").get<std::string>());
    r.subset = j.contains("subset") ? parse_subset(j.at("subset").get<std::string>()) : Subset::all;
    for (const auto& s : j.at("strata")) {
      StratumEntry e;
      std::optional<int> delta;
      if (!s.at("delta").is_null()) delta = parse_roman(s.at("delta").get<std::string>());
      e.support = OrbitLabel::make(SignedYoungDiagram::parse(s.at("support").get<std::string>()), delta, r.type);
      e.m = s.at("m").get<int>();
      e.k = s.at("k").get<int>();
      e.mu = SignedYoungDiagram::parse(s.at("mu").get<std::string>());
      e.family = parse_family(s.at("family").get<std::string>());
      e.count = s.at("count").get<Count>();
      r.entries.push_back(std::move(e));
    }
    r.total = j.at("total").get<Count>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed census report: ") + ex.what());
  }
}

namespace {

std::string header_line(const CensusReport& r) {
  std::ostringstream os;
  os << to_string(r.type) << " p=" << r.p << " q=" << r.q << " n=" << r.n << " central=" << to_string(r.central)
     << " subset=" << to_string(r.subset);
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "type,p,q,central,subset,support,delta,m,k,mu,family,count\n";
  const std::string prefix = to_string(r.type) + "," + std::to_string(r.p) + "," + std::to_string(r.q) + "," +
                             to_string(r.central) + "," + to_string(r.subset) + ",";
  for (const auto& e : r.entries)
    os << prefix << csv_field(e.support.diagram.to_string()) << "," << e.support.delta_name() << "," << e.m << ","
       << e.k << "," << csv_field(e.mu.to_string()) << "," << to_string(e.family) << "," << e.count << "\n";
  os << prefix << "total,,,,,," << r.total << "\n";
  return os.str();
}

std::string render_table(const CensusReport& r) {
  std::size_t w = 7;
  for (const auto& e : r.entries) w = std::max(w, e.support.diagram.to_string().size());
  std::size_t wm = 2;
  for (const auto& e : r.entries) wm = std::max(wm, e.mu.to_string().size());
  std::ostringstream os;
  os << header_line(r) << "\n";
  os << std::left << std::setw(static_cast<int>(w)) << "support" << "  " << std::setw(5) << "delta" << "  "
     << std::right << std::setw(3) << "m" << "  " << std::setw(3) << "k" << "  " << std::left
     << std::setw(static_cast<int>(wm)) << "mu" << "  " << std::setw(12) << "family" << "  " << std::right
     << "count\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(static_cast<int>(w)) << e.support.diagram.to_string() << "  " << std::setw(5)
       << e.support.delta_name() << "  " << std::right << std::setw(3) << e.m << "  " << std::setw(3) << e.k
       << "  " << std::left << std::setw(static_cast<int>(wm)) << e.mu.to_string() << "  " << std::setw(12)
       << to_string(e.family) << "  " << std::right << e.count << "\n";
  }
  os << "total: " << r.total << "\n";
  for (const auto& w2 : r.warnings) os << "warning: " << w2 << "\n";
  return os.str();
}

// ---------------------------------------------------------------- orbits

std::vector<OrbitRow> orbits_bdi(int p, int q, const OrbitFilter& f) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature entries must be nonnegative");
  std::vector<SignedYoungDiagram> ds;
  if (f.richardson) {
    ds = enum_sigma_b(p, q);
  } else {
    ds = enum_sigma(p, q);
  }
  std::vector<OrbitRow> out;
  for (const auto& d : ds) {
    const auto c = classify(d);
    if (f.cls && c.cls != *f.cls) continue;
    const int mult = orbit_multiplicity(d);
    const Count k0 = Count{1} << c.r;
    const Count k1 = kappa1_data_bdi(d).count;
    for (int i = 1; i <= mult; ++i) {
      OrbitRow row;
      row.label = OrbitLabel::make(d, mult > 1 ? std::optional<int>(i) : std::nullopt, PairType::bdi);
      row.cls = c;
      row.k0 = k0;
      row.k1 = k1;
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<OrbitRow> orbits_diii(int n, const OrbitFilter& f) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  if (f.cls) throw std::invalid_argument("orbit classes apply to bdi pairs only");
  std::vector<OrbitRow> out;
  for (auto& d : f.richardson ? enum_lambda_b(n) : enum_lambda(n)) {
    OrbitRow row;
    row.k0 = 1;
    row.k1 = kappa1_data_diii(d).count;
    row.label = OrbitLabel::make(std::move(d), std::nullopt, PairType::diii);
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const OrbitRow& r) {
  Json j;
  j["diagram"] = r.label.diagram.to_string();
  j["delta"] = r.label.delta ? Json(roman(*r.label.delta)) : Json(nullptr);
  if (r.cls) {
    j["a"] = r.cls->a;
    j["b"] = r.cls->b;
    j["r"] = r.cls->r;
    j["class"] = to_string(r.cls->cls);
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
    j["r"] = nullptr;
    j["class"] = nullptr;
  }
  j["k0"] = r.k0;
  j["k1"] = r.k1;
  return j;
}

std::string render_csv(const std::vector<OrbitRow>& rows) {
  std::ostringstream os;
  os << "diagram,delta,a,b,r,class,k0,k1\n";
  for (const auto& r : rows) {
    os << r.label.diagram.to_string() << "," << r.label.delta_name() << ",";
    if (r.cls)
      os << r.cls->a << "," << r.cls->b << "," << r.cls->r << "," << to_string(r.cls->cls);
    else
      os << ",,,";
    os << "," << r.k0 << "," << r.k1 << "\n";
  }
  return os.str();
}

std::string render_table(const std::vector<OrbitRow>& rows) {
  std::size_t w = 7;
  for (const auto& r : rows) w = std::max(w, r.label.diagram.to_string().size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "diagram" << "  delta   a   b   r  class     k0    k1\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(w)) << r.label.diagram.to_string() << "  " << std::setw(5)
       << r.label.delta_name() << std::right;
    if (r.cls)
      os << std::setw(4) << r.cls->a << std::setw(4) << r.cls->b << std::setw(4) << r.cls->r << "  " << std::left
         << std::setw(7) << to_string(r.cls->cls) << std::right;
    else
      os << std::setw(4) << "-" << std::setw(4) << "-" << std::setw(4) << "-" << "  " << std::left << std::setw(7)
         << "-" << std::right;
    os << std::setw(5) << r.k0 << std::setw(6) << r.k1 << "\n";
  }
  os << "orbits: " << rows.size() << "\n";
  return os.str();
}

Json envelope(const std::vector<std::string>& command, Json payload, const std::vector<std::string>& warnings) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["payload"] = std::move(payload);
  j["warnings"] = warnings;
  return j;
}

}  // namespace sheaf
