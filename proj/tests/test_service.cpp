#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <thread>

#include <unistd.h>

#include "mwb/lie_seeds.hpp"
#include "mwb/matrix_realization.hpp"
#include "mwb/session.hpp"
#include "support.hpp"

using namespace mwb;
using mwb::testing::quiver_of;
using nlohmann::json;

namespace {

std::vector<std::string> alias_strings(const json& seed) {
  std::vector<std::string> out;
  for (const auto& a : seed["aliases"]) out.push_back(a.is_null() ? "-" : a.get<std::string>());
  return out;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("mwb_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("presets") {
  CHECK(preset_names().size() == 4);
  for (const auto& name : preset_names()) {
    CHECK_NOTHROW(make_preset(name));
    CHECK_FALSE(preset_description(name).empty());
  }
  CHECK_THROWS_AS(make_preset("e8-lattice"), InvalidInput);

  auto a3 = make_preset("a3-bfz");
  CHECK(a3.seed.quiver == quiver_of(6, {4, 5, 6},
                                    {{1, 2, 1}, {2, 4, 1}, {2, 3, 1}, {3, 1, 1}, {3, 5, 1}, {4, 5, 1},
                                     {5, 2, 1}, {5, 6, 1}, {6, 3, 1}}));
  auto view = seed_view(a3, a3.seed);
  CHECK(alias_strings(view) ==
        std::vector<std::string>{"D_{1,2}", "D_{1,3}", "D_{12,23}", "D_{1,4}", "D_{12,34}", "D_{123,234}"});
  CHECK(view["mutable"] == json({1, 2, 3}));
  CHECK(view["rows"] == json({1, 1, 2, 1, 2, 3}));

  auto aff = make_preset("affine-a1-w4");
  CHECK(aff.seed.quiver == build_gamma_quiver(CartanMatrix::from_name("affine-a1"), WeylWord{{1, 2, 1, 2}}));
  CHECK(*aff.rows == std::vector<int>{1, 2, 1, 2});
  CHECK_FALSE(aff.minors.has_value());
  CHECK(make_preset("kronecker-a2").seed.quiver.arrows(1, 2) == 2);
  CHECK(make_preset("kronecker-a1").seed.quiver.arrows(1, 2) == 1);
}

TEST_CASE("minor aliases follow mutation") {
  auto a3 = make_preset("a3-bfz");
  auto s = mutate(a3.seed, 1);
  CHECK(to_string(s.var(1), s.ring) == "(x2+x3)/x1");
  CHECK(a3.minors->alias(s.var(1)) == "D_{2,3}");
  // Aliases agree with direct substitution of the minors.
  auto g = generic_unitriangular(4);
  auto d = [&](std::vector<int> r, std::vector<int> c) { return RationalFunction(minor(g.matrix, r, c)); };
  std::vector<RationalFunction> images{d({1}, {2}), d({1}, {3}), d({1, 2}, {2, 3}),
                                       d({1}, {4}), d({1, 2}, {3, 4}), d({1, 2, 3}, {2, 3, 4})};
  auto s2 = mutate(mutate(a3.seed, 2), 3);
  for (const auto& v : s2.vars) {
    auto alias = a3.minors->alias(v);
    auto value = substitute(v.num(), images) / substitute(v.den(), images);
    if (alias) {
      // Parse "D_{I,J}" back into sets and compare values.
      auto body = alias->substr(3, alias->size() - 4);
      auto comma = body.find(',');
      std::vector<int> rows, cols;
      for (char ch : body.substr(0, comma)) rows.push_back(ch - '0');
      for (char ch : body.substr(comma + 1)) cols.push_back(ch - '0');
      CHECK(value == d(rows, cols));
    }
  }
  CHECK_FALSE(a3.minors->alias(RationalFunction(LaurentPoly::constant(6, 1))).has_value());
}

TEST_CASE("origins") {
  auto w = construct({{"cartan", "A3"}, {"word", "1,2,1,3,2,1"}});
  auto ts = seed_from_word_typeA(3, WeylWord{{1, 2, 1, 3, 2, 1}});
  CHECK(alias_strings(seed_view(w, w.seed)) == ts.names);
  CHECK(w.origin == json{{"cartan", "A3"}, {"word", {1, 2, 1, 3, 2, 1}}});

  auto s = construct({{"seed", {{"quiver", {{"n", 2}, {"arrows", {{1, 2, 3}}}}}}}});
  CHECK(s.seed.quiver.arrows(1, 2) == 3);
  CHECK(construct(s.origin).seed.vars == s.seed.vars);

  CHECK_THROWS_AS(construct(json::array()), InvalidInput);
  CHECK_THROWS_AS(construct(json::object()), InvalidInput);
  CHECK_THROWS_AS(construct({{"preset", 3}}), InvalidInput);
  CHECK_THROWS_AS(construct({{"word", {1, 2}}}), InvalidInput);
  CHECK_THROWS_AS(construct({{"cartan", "A2"}, {"word", {1, 1}}}), NotReduced);
  CHECK_THROWS_AS(construct({{"cartan", "A2"}, {"word", {1, 3}}}), Error);
  CHECK_THROWS_AS(construct({{"cartan", "A2"}, {"word", {"x"}}}), InvalidInput);
  CHECK_THROWS_AS(construct({{"seed", {{"quiver", {{"n", "two"}}}}}}), InvalidInput);
}

TEST_CASE("session store basics") {
  SessionStore store;
  auto created = store.create({{"preset", "a3-bfz"}});
  const std::string id = created["id"];
  CHECK(created["history"] == json::array());
  auto m = store.mutate(id, 1);
  CHECK(m["seed"]["variables"][0] == "(x2+x3)/x1");
  CHECK(m["seed"]["aliases"][0] == "D_{2,3}");
  CHECK(m["seed"]["quiver"] == to_json(make_preset("a3-bfz").seed.quiver.mutate(1)));
  CHECK(store.history(id)["steps"] == json::array({{{"step", 1}, {"vertex", 1}}}));
  auto u = store.undo(id);
  CHECK(u.dump() == created.dump());
  CHECK(store.get(id).dump() == created.dump());

  CHECK_THROWS_AS(store.mutate(id, 4), FrozenVertex);
  CHECK_THROWS_AS(store.mutate(id, 99), IndexOutOfRange);
  CHECK_THROWS_AS(store.undo(id), EmptyHistory);
  CHECK_THROWS_AS(store.get("nope"), SessionNotFound);
  // Failed operations leave the session untouched.
  CHECK(store.get(id).dump() == created.dump());

  auto other = store.create({{"preset", "kronecker-a2"}});
  CHECK(other["id"] != created["id"]);
  CHECK(store.ids().size() == 2);
}

TEST_CASE("history replay is byte-identical") {
  std::uniform_int_distribution<std::size_t> pick_preset(0, preset_names().size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    SessionStore store;
    auto name = preset_names()[pick_preset(mwb::testing::rng())];
    std::string id = store.create({{"preset", name}})["id"];
    for (int step = 0; step < 6; ++step) {
      auto mv = construct({{"preset", name}}).seed.quiver.mutable_vertices();
      int k = mv[static_cast<std::size_t>(mwb::testing::uniform(0, static_cast<int>(mv.size()) - 1))];
      store.mutate(id, k);
    }
    auto j = store.get(id);
    auto again = to_json(session_from_json(j));
    CHECK(again.dump() == j.dump());
    // Stripping the seed and replaying gives the same bytes too.
    json bare{{"id", j["id"]}, {"origin", j["origin"]}, {"history", j["history"]}};
    CHECK(to_json(session_from_json(bare)).dump() == j.dump());
  }
}

TEST_CASE("state directory snapshots") {
  auto dir = fresh_dir("state");
  std::string id;
  json before;
  {
    SessionStore store(dir);
    id = store.create({{"cartan", "affine-a1"}, {"word", {1, 2, 1, 2}}})["id"];
    store.mutate(id, 1);
    before = store.mutate(id, 2);
  }
  CHECK(std::filesystem::exists(dir / (id + ".json")));
  SessionStore reloaded(dir);
  CHECK(reloaded.get(id).dump() == before.dump());
  auto fresh = reloaded.create({{"preset", "kronecker-a1"}});
  CHECK(fresh["id"] != id);
  CHECK(reloaded.undo(id)["history"] == json({1}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("concurrent sessions") {
  SessionStore store;
  std::string shared = store.create({{"preset", "kronecker-a2"}})["id"];
  std::vector<std::thread> pool;
  std::vector<std::string> own(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      own[static_cast<std::size_t>(t)] = store.create({{"preset", "a3-bfz"}})["id"];
      for (int i = 0; i < 5; ++i) {
        store.mutate(shared, 1 + (i % 2));
        store.mutate(own[static_cast<std::size_t>(t)], 1 + (i % 3));
      }
    });
  for (auto& th : pool) th.join();
  auto j = store.get(shared);
  CHECK(j["history"].size() == 20);
  CHECK(to_json(session_from_json(j)).dump() == j.dump());
  for (const auto& id : own) CHECK(store.get(id)["history"].size() == 5);
}
