#include "sheaf/report.hpp"
#include "sheaf/series_parser.hpp"
#include "sheaf/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sheaf;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Output {
  std::string format = "json";
  std::string out;
};

int default_order() {
  if (const char* env = std::getenv("SHEAF_CENSUS_ORDER")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("SHEAF_CENSUS_ORDER is not a nonnegative integer: ") + env);
  }
  return kDefaultOrder;
}

void emit(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(o.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<SigmaClass> parse_class(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "sigma1") return SigmaClass::sigma1;
  if (s == "sigma2") return SigmaClass::sigma2;
  if (s == "sigma3") return SigmaClass::sigma3;
  throw std::invalid_argument("unknown class '" + s + "'");
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> command(argv, argv + argc);
  if (!command.empty()) command.erase(command.begin());

  CLI::App app{"Census of character sheaves for spin symmetric pairs of types BDI and DIII"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", out.out, "Write output to FILE instead of stdout");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "List nilpotent orbits with local irreducible counts");
  orbits->require_subcommand(1);
  int op = 0, oq = 0, on = 0;
  std::string oclass;
  bool richardson = false;
  auto* ob = orbits->add_subcommand("bdi", "Spin_{p+q} with K of signature (p,q)");
  ob->add_option("--p", op)->required()->check(CLI::NonNegativeNumber);
  ob->add_option("--q", oq)->required()->check(CLI::NonNegativeNumber);
  ob->add_option("--class", oclass)->check(CLI::IsMember({"sigma1", "sigma2", "sigma3"}));
  ob->add_flag("--richardson", richardson, "Only the Sigma_b diagrams");
  auto* od = orbits->add_subcommand("diii", "Spin_{2n} with K = GL_n cover");
  od->add_option("--n", on)->required()->check(CLI::NonNegativeNumber);
  od->add_flag("--richardson", richardson, "Only the Lambda_b diagrams");

  // census
  auto* census = app.add_subcommand("census", "Character sheaf census");
  census->require_subcommand(1);
  int cp = 0, cq = 0, cn = 0;
  std::string central = "both", subset = "all";
  bool check = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--central", central)->check(CLI::IsMember({"k0", "k1", "both"}))->capture_default_str();
    sub->add_option("--subset", subset)
        ->check(CLI::IsMember({"all", "cuspidal", "nilpotent", "full"}))
        ->capture_default_str();
    sub->add_flag("--check", check, "Cross-check totals against closed forms");
  };
  auto* cb = census->add_subcommand("bdi", "BDI pair");
  cb->add_option("--p", cp)->required()->check(CLI::NonNegativeNumber);
  cb->add_option("--q", cq)->required()->check(CLI::NonNegativeNumber);
  add_common(cb);
  auto* cd = census->add_subcommand("diii", "DIII pair");
  cd->add_option("--n", cn)->required()->check(CLI::NonNegativeNumber);
  add_common(cd);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  std::vector<std::string> suite{"all"};
  std::optional<int> vorder, vsweep;
  verify->add_option("--suite", suite, "all, or check ids (comma separated or repeated)");
  verify->add_option("--order", vorder, "Series truncation order (>= 10)");
  verify->add_option("--sweep", vsweep, "Largest p+q in census comparisons");
  bool list_ids = false;
  verify->add_flag("--list", list_ids, "Print the check ids and exit");

  // series
  auto* series = app.add_subcommand("series", "Expand a product expression");
  std::string expr;
  std::optional<int> sorder, scoeff;
  series->add_option("--expr", expr)->required();
  series->add_option("--order", sorder)->check(CLI::NonNegativeNumber);
  series->add_option("--coeff", scoeff)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (orbits->parsed()) {
      OrbitFilter f;
      f.richardson = richardson;
      f.cls = parse_class(oclass);
      const auto rows = ob->parsed() ? orbits_bdi(op, oq, f) : orbits_diii(on, f);
      if (out.format == "json") {
        Json payload;
        payload["pair"] = ob->parsed() ? Json{{"type", "bdi"}, {"p", op}, {"q", oq}, {"n", (op + oq) / 2}}
                                       : Json{{"type", "diii"}, {"p", on}, {"q", on}, {"n", on}};
        payload["orbits"] = Json::array();
        for (const auto& r : rows) payload["orbits"].push_back(to_json(r));
        emit(out, dump(envelope(command, payload, {})));
      } else {
        emit(out, out.format == "csv" ? render_csv(rows) : render_table(rows));
      }
      return kOk;
    }

    if (census->parsed()) {
      const bool bdi = cb->parsed();
      const Subset sub = parse_subset(subset);
      std::vector<CensusReport> reports;
      auto wanted = [&](Central c) { return central == "both" || central == to_string(c); };
      if (bdi) {
        for (Central c : {Central::k0, Central::k1})
          if (wanted(c)) reports.push_back(restrict_to(census_bdi(cp, cq, c), sub));
      } else {
        auto [k0, k1] = census_diii(cn);
        if (wanted(Central::k0)) reports.push_back(restrict_to(k0, sub));
        if (wanted(Central::k1)) reports.push_back(restrict_to(k1, sub));
      }
      std::vector<std::string> warnings;
      bool mismatch = false;
      for (auto& r : reports) {
        for (const auto& w : r.warnings) warnings.push_back(w);
        if (!check) continue;
        const auto ref = reference_total(r);
        if (!ref) {
          warnings.push_back("no closed form for the " + to_string(r.subset) + " " + to_string(r.central) +
                             " total of this pair; --check skipped");
        } else if (*ref != Rational(r.total)) {
          mismatch = true;
          std::cerr << "check failed for " << to_string(r.central) << ": census " << r.total << ", closed form "
                    << to_string(*ref) << "\n";
        }
      }
      std::string text;
      if (out.format == "json") {
        Json payload;
        if (reports.size() == 1) {
          payload = to_json(reports.front());
        } else {
          payload = Json::array();
          for (const auto& r : reports) payload.push_back(to_json(r));
        }
        text = dump(envelope(command, payload, warnings));
      } else {
        for (const auto& r : reports) text += out.format == "csv" ? render_csv(r) : render_table(r);
        if (out.format == "table" && check) text += mismatch ? "check: MISMATCH\n" : "check: ok\n";
      }
      emit(out, text);
      return mismatch ? kMismatch : kOk;
    }

    if (verify->parsed()) {
      if (list_ids) {
        std::string text;
        for (const auto& id : check_ids()) text += id + "\n";
        emit(out, text);
        return kOk;
      }
      const int order = vorder.value_or(default_order());
      const auto checks = run_suite(split_ids(suite), order, vsweep);
      std::string text;
      if (out.format == "json")
        text = dump(envelope(command, verify_report_json(checks, order, vsweep), {}));
      else
        text = out.format == "csv" ? render_csv(checks) : render_table(checks);
      emit(out, text);
      return all_pass(checks) ? kOk : kMismatch;
    }

    if (series->parsed()) {
      const auto parsed = parse_series_expr(expr);
      int order = sorder.value_or(scoeff ? *scoeff : default_order());
      if (scoeff && *scoeff > order)
        throw std::invalid_argument("--coeff " + std::to_string(*scoeff) + " exceeds --order " + std::to_string(order));
      const auto s = parsed.evaluate(order);
      std::vector<std::string> coeffs;
      if (scoeff) {
        coeffs.push_back(to_string(s.coeff(*scoeff)));
      } else {
        for (int k = 0; k <= order; ++k) coeffs.push_back(to_string(s.coeff(k)));
      }
      std::string text;
      if (out.format == "json") {
        Json payload{{"expr", expr}, {"order", order}};
        if (scoeff) {
          payload["coeff"] = *scoeff;
          payload["value"] = coeffs.front();
        } else {
          payload["coefficients"] = coeffs;
        }
        text = dump(envelope(command, payload, {}));
      } else if (out.format == "csv") {
        text = "k,coefficient\n";
        const int first = scoeff.value_or(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) text += std::to_string(first + i) + "," + coeffs[i] + "\n";
      } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) text += (i ? ", " : "") + coeffs[i];
        text += "\n";
      }
      emit(out, text);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << e.diagnostic() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
