#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lieweyl {

/// One verified identity.
///
/// `order_checked` is the d-order through which every coefficient was
/// compared for Weyl-algebra identities, and the largest degree exercised
/// for identities that hold exactly in U(g) or S(g).
struct CheckResult {
  std::string identity;
  std::size_t order_checked = 0;
  bool pass = true;
  std::optional<std::string> witness;
  /// Reported but not counted toward an overall verdict.
  bool experimental = false;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass && !c.experimental) return false;
  return true;
}

}  // namespace lieweyl
