#include "mwb/presets.hpp"

#include <algorithm>

#include "mwb/lie_seeds.hpp"
#include "mwb/matrix_realization.hpp"

namespace mwb {

namespace {

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Quiver quiver_from_arrows(int n, const std::vector<int>& frozen,
                          const std::vector<std::array<int, 3>>& arrows) {
  Quiver q(n, frozen);
  for (auto [a, b, m] : arrows) q.add_arrows(a, b, m);
  return q;
}

WeylWord word_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("'word' must be a list of letters or a string like \"1,2,1\"");
  WeylWord w;
  for (const auto& l : j) {
    if (!l.is_number_integer()) throw InvalidInput("word letters must be integers");
    w.letters.push_back(l.get<int>());
  }
  return w;
}

bool is_type_a_name(const nlohmann::json& c) {
  return c.is_string() && c.get<std::string>().size() > 1 && c.get<std::string>()[0] == 'A';
}

Construction from_word(const nlohmann::json& cartan_json, const WeylWord& w) {
  const CartanMatrix c = cartan_from_json(cartan_json);
  check_letters(c, w);
  if (w.length() == 0) throw InvalidInput("word is empty");
  if (!is_reduced(c, w)) throw NotReduced("word " + format_word(w) + " is not reduced");
  Construction out{{{"cartan", cartan_json}, {"word", w.letters}},
                   initial_seed(build_gamma_quiver(c, w)),
                   w.letters,
                   std::nullopt};
  if (is_type_a_name(cartan_json)) {
    auto typeA = seed_from_word_typeA(c.n(), w);
    out.minors.emplace(c.n() + 1, typeA.seed.vars);
  }
  return out;
}

}  // namespace

MinorAliases::MinorAliases(int size, std::vector<RationalFunction> images)
    : images_(std::move(images)) {
  auto real = generic_unitriangular(size);
  ring_ = real.ring;
  // Smaller minors first so the shortest name wins among equal values.
  for (int k = 1; k < size; ++k)
    for (const auto& rows : subsets(size, k))
      for (const auto& cols : subsets(size, k)) {
        auto m = minor(real.matrix, rows, cols);
        if (m.is_constant()) continue;
        by_value_.emplace(to_string(m, ring_), minor_name(rows, cols));
      }
}

std::optional<std::string> MinorAliases::alias(const RationalFunction& v) const {
  if (v.arity() != images_.size()) return std::nullopt;
  auto f = substitute(v.num(), images_) / substitute(v.den(), images_);
  if (!f.is_laurent() || !f.laurent().is_polynomial()) return std::nullopt;
  auto it = by_value_.find(to_string(f.laurent(), ring_));
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> preset_names() {
  return {"a3-bfz", "affine-a1-w4", "kronecker-a1", "kronecker-a2"};
}

std::string preset_description(const std::string& name) {
  if (name == "a3-bfz") return "A3 seed of flag minors with frozen D_{1,4}, D_{12,34}, D_{123,234}";
  if (name == "affine-a1-w4") return "Gamma_i for affine sl2 and the word 1,2,1,2";
  if (name == "kronecker-a1") return "rank 2, b = 1 (finite, type A2)";
  if (name == "kronecker-a2") return "rank 2, b = 2 (Kronecker, infinite)";
  throw InvalidInput("unknown preset '" + name + "'");
}

Construction make_preset(const std::string& name) {
  const nlohmann::json origin = {{"preset", name}};
  if (name == "a3-bfz") {
    // Vertices 1..6 carry D_{1,2}, D_{1,3}, D_{12,23}, D_{1,4}, D_{12,34}, D_{123,234}.
    Quiver q = quiver_from_arrows(6, {4, 5, 6},
                                  {{{1, 2, 1}}, {{2, 4, 1}}, {{2, 3, 1}}, {{3, 1, 1}}, {{3, 5, 1}},
                                   {{4, 5, 1}}, {{5, 2, 1}}, {{5, 6, 1}}, {{6, 3, 1}}});
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> sets = {
        {{1}, {2}}, {{1}, {3}}, {{1, 2}, {2, 3}}, {{1}, {4}}, {{1, 2}, {3, 4}}, {{1, 2, 3}, {2, 3, 4}}};
    auto real = generic_unitriangular(4);
    std::vector<RationalFunction> images;
    std::vector<int> rows;
    for (const auto& [r, c] : sets) {
      images.emplace_back(minor(real.matrix, r, c));
      rows.push_back(static_cast<int>(r.size()));
    }
    return {origin, initial_seed(q), rows, MinorAliases(4, std::move(images))};
  }
  if (name == "affine-a1-w4") {
    auto c = from_word("affine-a1", WeylWord{{1, 2, 1, 2}});
    c.origin = origin;
    return c;
  }
  if (name == "kronecker-a1" || name == "kronecker-a2") {
    const int a = name.back() - '0';
    return {origin, initial_seed(quiver_from_arrows(2, {}, {{{1, 2, a}}})), std::nullopt, std::nullopt};
  }
  throw InvalidInput("unknown preset '" + name + "'");
}

Construction construct(const nlohmann::json& origin) {
  if (!origin.is_object()) throw InvalidInput("session origin must be a JSON object");
  try {
    if (origin.contains("preset")) {
      if (!origin.at("preset").is_string()) throw InvalidInput("'preset' must be a string");
      return make_preset(origin.at("preset").get<std::string>());
    }
    if (origin.contains("word")) {
      if (!origin.contains("cartan")) throw InvalidInput("a word origin needs 'cartan'");
      return from_word(origin.at("cartan"), word_from_json(origin.at("word")));
    }
    if (origin.contains("seed")) {
      Seed s = seed_from_json(origin.at("seed"));
      return {{{"seed", to_json(s)}}, std::move(s), std::nullopt, std::nullopt};
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed origin: ") + e.what());
  }
  throw InvalidInput("origin needs one of 'preset', 'word' (with 'cartan') or 'seed'");
}

nlohmann::json seed_view(const Construction& c, const Seed& current) {
  nlohmann::json j = to_json(current);
  j["mutable"] = current.quiver.mutable_vertices();
  nlohmann::json expansions = nlohmann::json::array();
  for (const auto& v : current.vars) expansions.push_back(canonical_string(v, current.ring));
  j["expansions"] = std::move(expansions);
  if (c.minors) {
    nlohmann::json aliases = nlohmann::json::array();
    for (const auto& v : current.vars) {
      auto a = c.minors->alias(v);
      aliases.push_back(a ? nlohmann::json(*a) : nlohmann::json(nullptr));
    }
    j["aliases"] = std::move(aliases);
  }
  if (c.rows) j["rows"] = *c.rows;
  return j;
}

}  // namespace mwb
