#pragma once

#include "sheaf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sheaf {

enum class CheckStatus { pass, fail };

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string anchor;  // the identity being tested, written out
  std::string range;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // first disagreement; empty on PASS
  long cells = 0;       // individual comparisons made
};

inline constexpr int kDefaultSweep = 24;
inline constexpr int kDefaultOrbitSweep = 20;

// Every known check id, in execution order.
const std::vector<std::string>& check_ids();

// `ids` empty or {"all"} selects everything. Throws std::invalid_argument on an
// unknown id or order < 10. `sweep` bounds p+q in census comparisons (default 24,
// and 20 for kappa1-orbit-sum).
std::vector<IdentityCheck> run_suite(const std::vector<std::string>& ids, int order,
                                     std::optional<int> sweep = {});

bool all_pass(const std::vector<IdentityCheck>& checks);
Json to_json(const IdentityCheck& c);
Json verify_report_json(const std::vector<IdentityCheck>& checks, int order, std::optional<int> sweep);
std::string render_table(const std::vector<IdentityCheck>& checks);
std::string render_csv(const std::vector<IdentityCheck>& checks);

}  // namespace sheaf
