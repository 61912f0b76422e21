#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mwb {

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string lhs, rhs;
};

struct Report {
  std::string title;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// {"title", "all_hold", "checks": {name: {"holds","lhs","rhs"}}}
nlohmann::json to_json(const Report& r);

}  // namespace mwb
