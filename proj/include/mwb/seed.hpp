#pragma once

// Seeds (cluster + quiver), exchange-relation mutation, Laurent
// certification and breadth-first exploration of mutation classes.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwb/algebra.hpp"
#include "mwb/quiver.hpp"

namespace mwb {

struct Seed {
  Quiver quiver;
  /// Cluster variables as functions of the initial variables named by `ring`.
  std::vector<RationalFunction> vars;
  Ring ring;

  int n() const { return quiver.n(); }
  /// 1-based access.
  const RationalFunction& var(int k) const { return vars.at(k - 1); }
};

/// The seed (x_1..x_n, q), or with explicit variable names.
Seed initial_seed(const Quiver& q);
Seed initial_seed(const Quiver& q, Ring ring);

/// mu_k: y_k' = (prod_{i->k} y_i + prod_{k->j} y_j) / y_k with multiplicity.
Seed mutate(const Seed& s, int k);
Seed mutate_path(Seed s, const std::vector<int>& path);

/// Exact Laurent expansion of v in the initial variables of s0. Throws
/// NotDivisible when v is not a Laurent polynomial.
LaurentPoly certify_laurent(const Seed& s0, const RationalFunction& v);

/// Canonical text of a cluster variable (its Laurent expansion when it has one).
std::string canonical_string(const RationalFunction& v, const Ring& ring);

struct ExploreBudget {
  std::size_t max_seeds = 10000;
  int max_depth = 1000;
  unsigned threads = 1;
};

struct MutationClassReport {
  std::size_t clusters = 0;
  std::size_t seeds = 0;
  std::size_t variables = 0;          // distinct cluster variables, frozen included
  std::size_t mutable_variables = 0;  // frozen excluded
  std::size_t frozen = 0;
  bool finite = false;                // frontier emptied within budget
  int depth = 0;                      // deepest BFS level reached
  bool nonnegative_coefficients = true;  // observed only, never asserted
  std::vector<std::string> variable_strings;  // sorted canonical strings
};

MutationClassReport explore(const Seed& s0, const ExploreBudget& budget = {});

nlohmann::json to_json(const MutationClassReport& r, bool include_variables = false);

/// x_3 .. x_{count+2} of x_{k+1} x_{k-1} = 1 + x_k^a.
std::vector<RationalFunction> rank2_sequence(int a, int count);

/// {"ring":[...],"quiver":{...},"variables":[...]} with fraction renderings.
nlohmann::json to_json(const Seed& s);
/// Missing "ring" defaults to x1..xn; missing "variables" to the ring itself.
Seed seed_from_json(const nlohmann::json& j);

}  // namespace mwb
