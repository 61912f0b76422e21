#include "mwb/report.hpp"

#include <algorithm>

namespace mwb {

bool Report::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : r.checks) checks[c.name] = {{"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  return {{"title", r.title}, {"all_hold", r.all_hold()}, {"checks", checks}};
}

}  // namespace mwb
