#include "mwb/seed.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_set>

namespace mwb {

Seed initial_seed(const Quiver& q) { return initial_seed(q, Ring::indexed("x", q.n())); }

Seed initial_seed(const Quiver& q, Ring ring) {
  if (static_cast<int>(ring.arity()) != q.n())
    throw ArityMismatch("ring size must match the number of vertices");
  Seed s{q, {}, std::move(ring)};
  for (int i = 0; i < q.n(); ++i)
    s.vars.emplace_back(LaurentPoly::variable(q.n(), static_cast<std::size_t>(i)));
  return s;
}

Seed mutate(const Seed& s, int k) {
  Quiver q = s.quiver.mutate(k);  // validates k and frozenness
  const std::size_t arity = s.ring.arity();
  RationalFunction in(LaurentPoly::constant(arity, 1));
  RationalFunction out(LaurentPoly::constant(arity, 1));
  for (int i = 1; i <= s.n(); ++i) {
    if (int m = s.quiver.arrows(i, k)) in *= s.var(i).pow(m);
    if (int m = s.quiver.arrows(k, i)) out *= s.var(i).pow(m);
  }
  Seed next{std::move(q), s.vars, s.ring};
  next.vars[k - 1] = (in + out) / s.var(k);
  return next;
}

Seed mutate_path(Seed s, const std::vector<int>& path) {
  for (int k : path) s = mutate(s, k);
  return s;
}

LaurentPoly certify_laurent(const Seed& s0, const RationalFunction& v) {
  if (v.arity() != s0.ring.arity()) throw ArityMismatch("variable lives in a different ring");
  return exact_div(v.num(), v.den());
}

std::string canonical_string(const RationalFunction& v, const Ring& ring) {
  if (v.is_laurent()) return to_string(v.num(), ring);
  return to_string(v, ring);
}

namespace {

struct Node {
  Seed seed;
  std::vector<std::string> names;  // canonical strings per vertex
  std::string id;
};

Node make_node(Seed s) {
  Node n{std::move(s), {}, {}};
  for (const auto& v : n.seed.vars) n.names.push_back(canonical_string(v, n.seed.ring));
  std::vector<std::string> sorted = n.names;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& x : sorted) n.id += x + ";";
  n.id += "#" + canonical_key(n.seed.quiver);
  return n;
}

std::string cluster_id(const Node& n) { return n.id.substr(0, n.id.find('#')); }

}  // namespace

MutationClassReport explore(const Seed& s0, const ExploreBudget& budget) {
  MutationClassReport rep;
  const auto mut = s0.quiver.mutable_vertices();
  rep.frozen = s0.quiver.frozen().size();

  std::unordered_set<std::string> seen;
  std::set<std::string> clusters, variables, frozen_vars;
  for (int v : s0.quiver.frozen()) frozen_vars.insert(canonical_string(s0.var(v), s0.ring));

  auto record = [&](const Node& n) {
    clusters.insert(cluster_id(n));
    for (std::size_t i = 0; i < n.names.size(); ++i) {
      if (!variables.insert(n.names[i]).second) continue;
      const auto& v = n.seed.vars[i];
      const LaurentPoly expansion = certify_laurent(s0, v);
      for (const auto& [m, c] : expansion.terms())
        if (c < 0) rep.nonnegative_coefficients = false;
    }
  };

  std::vector<Node> frontier;
  frontier.push_back(make_node(s0));
  seen.insert(frontier.front().id);
  record(frontier.front());
  bool exceeded = false;
  int depth = 0;

  while (!frontier.empty() && !exceeded) {
    if (depth >= budget.max_depth) {
      exceeded = true;
      break;
    }
    // Expand the whole level, possibly in parallel; children keep a fixed
    // (parent, vertex) order so the merge below is deterministic.
    std::vector<std::vector<Node>> children(frontier.size());
    auto expand = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t p = lo; p < hi; ++p)
        for (int k : mut) children[p].push_back(make_node(mutate(frontier[p].seed, k)));
    };
    const unsigned t = std::max(1u, std::min<unsigned>(budget.threads, frontier.size()));
    if (t == 1) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + t - 1) / t;
      for (unsigned w = 0; w < t; ++w) {
        std::size_t lo = w * chunk, hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(expand, lo, hi);
      }
      for (auto& th : pool) th.join();
    }

    std::vector<Node> next;
    for (auto& group : children) {
      for (auto& c : group) {
        if (seen.count(c.id)) continue;
        if (seen.size() >= budget.max_seeds) {
          exceeded = true;
          break;
        }
        seen.insert(c.id);
        record(c);
        next.push_back(std::move(c));
      }
      if (exceeded) break;
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }

  rep.finite = !exceeded;
  rep.depth = depth;
  rep.seeds = seen.size();
  rep.clusters = clusters.size();
  rep.variables = variables.size();
  std::size_t frozen_seen = 0;
  for (const auto& f : frozen_vars) frozen_seen += variables.count(f);
  rep.mutable_variables = rep.variables - frozen_seen;
  rep.variable_strings.assign(variables.begin(), variables.end());
  return rep;
}

nlohmann::json to_json(const MutationClassReport& r, bool include_variables) {
  nlohmann::json j = {{"clusters", r.clusters},
                      {"variables", r.variables},
                      {"mutable_variables", r.mutable_variables},
                      {"frozen", r.frozen},
                      {"seeds", r.seeds},
                      {"verdict", r.finite ? "finite" : "exceeded-budget"},
                      {"depth", r.depth},
                      {"nonnegative_coefficients", r.nonnegative_coefficients}};
  if (include_variables) j["variable_list"] = r.variable_strings;
  return j;
}

std::vector<RationalFunction> rank2_sequence(int a, int count) {
  if (count < 1) throw InvalidInput("count must be at least 1");
  if (a < 1) throw InvalidInput("a must be positive");
  std::vector<RationalFunction> xs{RationalFunction(LaurentPoly::variable(2, 0)),
                                   RationalFunction(LaurentPoly::variable(2, 1))};
  const RationalFunction one(LaurentPoly::constant(2, 1));
  for (int i = 0; i < count; ++i) {
    const auto& prev = xs[xs.size() - 2];
    const auto& cur = xs.back();
    xs.push_back((one + cur.pow(a)) / prev);
  }
  return {xs.begin() + 2, xs.end()};
}

nlohmann::json to_json(const Seed& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : s.vars) vars.push_back(to_string(v, s.ring));
  return {{"ring", s.ring.names}, {"quiver", to_json(s.quiver)}, {"variables", vars}};
}

Seed seed_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("quiver")) throw InvalidInput("seed JSON needs a 'quiver'");
  Quiver q = quiver_from_json(j.at("quiver"));
  Ring ring = Ring::indexed("x", q.n());
  try {
    if (j.contains("ring")) ring.names = j.at("ring").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad ring: ") + e.what());
  }
  if (!j.contains("variables")) return initial_seed(q, ring);
  const auto& vs = j.at("variables");
  if (!vs.is_array() || static_cast<int>(vs.size()) != q.n())
    throw InvalidInput("'variables' must list one expression per vertex");
  Seed s{q, {}, ring};
  for (const auto& v : vs) {
    if (!v.is_string()) throw InvalidInput("variables must be strings");
    s.vars.push_back(parse_rational(v.get<std::string>(), ring));
  }
  return s;
}

}  // namespace mwb
