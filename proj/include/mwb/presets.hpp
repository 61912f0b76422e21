#pragma once

// Bundled fixtures and the constructions a session can start from: a preset
// name, a (Cartan, word) pair, or raw seed JSON.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwb/cartan.hpp"
#include "mwb/seed.hpp"

namespace mwb {

/// Names cluster variables that are minors of a generic unitriangular matrix.
class MinorAliases {
 public:
  /// images[k] is the minor carried by initial variable k+1, in the ring of
  /// generic_unitriangular(size).
  MinorAliases(int size, std::vector<RationalFunction> images);

  /// "D_{2,3}" when v, rewritten in the matrix entries, is a nonconstant minor.
  std::optional<std::string> alias(const RationalFunction& v) const;
  const Ring& ring() const { return ring_; }

 private:
  Ring ring_;
  std::vector<RationalFunction> images_;
  std::map<std::string, std::string> by_value_;  // canonical polynomial -> name
};

/// Resolved origin of a session.
struct Construction {
  nlohmann::json origin;  // as supplied, normalized
  Seed seed;
  std::optional<std::vector<int>> rows;  // row of each vertex, for layout
  std::optional<MinorAliases> minors;
};

std::vector<std::string> preset_names();
/// a3-bfz, affine-a1-w4, kronecker-a1, kronecker-a2. Throws InvalidInput.
Construction make_preset(const std::string& name);
std::string preset_description(const std::string& name);

/// {"preset": name} | {"cartan": name-or-matrix, "word": [..]} | {"seed": {..}}.
/// Throws InvalidInput (or ParseError, NotReduced) on malformed input.
Construction construct(const nlohmann::json& origin);

/// Seed JSON plus "mutable", "expansions", and, when known, "aliases" and
/// "rows".
nlohmann::json seed_view(const Construction& c, const Seed& current);

}  // namespace mwb
