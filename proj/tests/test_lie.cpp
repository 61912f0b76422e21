#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwb/lie_seeds.hpp"
#include "mwb/matrix_realization.hpp"
#include "support.hpp"

using namespace mwb;
using mwb::testing::quiver_of;

namespace {

const CartanMatrix AFF = CartanMatrix::from_name("affine-a1");
const WeylWord W4{{1, 2, 1, 2}};

Quiver a3_triangle() {
  return quiver_of(6, {4, 5, 6},
                   {{1, 2, 1}, {2, 4, 1}, {2, 3, 1}, {3, 1, 1}, {3, 5, 1}, {4, 5, 1}, {5, 2, 1},
                    {5, 6, 1}, {6, 3, 1}});
}

std::vector<std::string> strs(const std::vector<std::pair<IntervalLabel, int>>& ps) {
  std::vector<std::string> v;
  for (const auto& [l, m] : ps) v.push_back(l.str() + "x" + std::to_string(m));
  return v;
}

}  // namespace

TEST_CASE("Gamma_i for the affine word") {
  auto q = build_gamma_quiver(AFF, W4);
  auto expect = quiver_of(4, {3, 4}, {{1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {3, 1, 1}, {4, 2, 1}});
  CHECK(q == expect);
  CHECK(q.induced({1, 2}) == quiver_of(2, {}, {{1, 2, 2}}));
  auto single = build_gamma_quiver(AFF, WeylWord{{2}});
  CHECK(single.n() == 1);
  CHECK(single.is_frozen(1));
  CHECK_THROWS_AS(build_gamma_quiver(AFF, WeylWord{{1, 1}}), NotReduced);
}

TEST_CASE("Gamma_i for the A3 triangle word") {
  // Oracle: search all reduced words of the longest element of S4 for those
  // whose six flag minors are exactly the triangle seed's minors, and compare
  // Gamma_i (relabelled by minor) with the drawn quiver.
  const std::vector<std::string> triangle{"D_{1,2}",  "D_{1,3}",  "D_{12,23}",
                                          "D_{1,4}", "D_{12,34}", "D_{123,234}"};
  auto a3 = CartanMatrix::from_name("A3");
  std::vector<WeylWord> matches;
  std::vector<int> letters{1, 2, 3};
  std::function<void(WeylWord)> grow = [&](WeylWord w) {
    if (w.length() == 6) {
      std::vector<std::string> names;
      for (int k = 1; k <= 6; ++k) {
        auto [r, c] = flag_minor_sets(w, k);
        names.push_back(minor_name(r, c));
      }
      auto sorted = names, want = triangle;
      std::sort(sorted.begin(), sorted.end());
      std::sort(want.begin(), want.end());
      if (sorted == want) matches.push_back(w);
      return;
    }
    for (int l : letters) {
      WeylWord next = w;
      next.letters.push_back(l);
      if (is_reduced(a3, next)) grow(next);
    }
  };
  grow(WeylWord{});
  REQUIRE(matches.size() == 2);
  CHECK(matches[0] == WeylWord{{1, 2, 1, 3, 2, 1}});
  for (const auto& w : matches) {
    auto ts = seed_from_word_typeA(3, w);
    std::vector<int> perm;
    for (const auto& name : ts.names)
      perm.push_back(static_cast<int>(std::find(triangle.begin(), triangle.end(), name) -
                                      triangle.begin()) + 1);
    auto relabelled = ts.seed.quiver.relabel(perm);
    // The drawn quiver is Gamma_i with every arrow reversed.
    CHECK(relabelled == a3_triangle().opposite());
    CHECK(relabelled.frozen() == std::vector<int>{4, 5, 6});
  }
}

TEST_CASE("type A seed from the triangle word") {
  auto ts = seed_from_word_typeA(3, WeylWord{{1, 2, 1, 3, 2, 1}});
  auto sorted = ts.names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::string>{"D_{1,2}", "D_{1,3}", "D_{1,4}", "D_{12,23}",
                                           "D_{12,34}", "D_{123,234}"});
  std::vector<std::string> frozen;
  for (int v : ts.seed.quiver.frozen()) frozen.push_back(ts.names[v - 1]);
  std::sort(frozen.begin(), frozen.end());
  CHECK(frozen == std::vector<std::string>{"D_{1,4}", "D_{12,34}", "D_{123,234}"});

  // vertex 1 carries D_{1,2}; its mutation is D_{2,3}.
  REQUIRE(ts.names[0] == "D_{1,2}");
  auto m = mutate(ts.seed, 1);
  auto g = generic_unitriangular(4);
  CHECK(m.var(1) == RationalFunction(minor(g.matrix, {2}, {3})));
  CHECK(ts.seed.var(1) * m.var(1) ==
        RationalFunction(minor(g.matrix, {1}, {3}) + minor(g.matrix, {1, 2}, {2, 3})));

  auto a1 = seed_from_word_typeA(1, WeylWord{{1}});
  CHECK(a1.names == std::vector<std::string>{"D_{1,2}"});
  CHECK(a1.seed.quiver.is_frozen(1));
  CHECK(to_string(a1.seed.var(1), a1.seed.ring) == "u12");
}

TEST_CASE("Laurent property of the type A seed's mutation class") {
  auto ts = seed_from_word_typeA(3, WeylWord{{1, 2, 1, 3, 2, 1}});
  // Minor variables are polynomials in u; every mutation stays polynomial.
  Seed s = ts.seed;
  for (int k : {1, 2, 3, 1, 2, 3, 2, 1}) {
    if (s.quiver.is_frozen(k)) continue;
    s = mutate(s, k);
    for (const auto& v : s.vars) CHECK(v.is_laurent());
  }
}

TEST_CASE("distinguished sequence") {
  CHECK(distinguished_vertices(AFF, W4) == std::vector<int>{1, 2});
  auto a3 = CartanMatrix::from_name("A3");
  CHECK(distinguished_vertices(a3, WeylWord{{1, 2, 3}}).empty());
  auto seq = distinguished_vertices(a3, WeylWord{{1, 2, 1, 3, 2, 1}});
  // t_1 = 3, t_2 = 2, t_3 = 1
  CHECK(seq.size() == 3 + 1 + 0);
}

TEST_CASE("labelled run for the affine word") {
  auto run = run_labeled_sequence(AFF, W4);
  REQUIRE(run.trace.size() == 2);
  const auto& s1 = run.trace[0];
  CHECK(s1.vertex == 1);
  CHECK(s1.old_label.str() == "M[1,1]");  // V_1
  CHECK(s1.new_label.str() == "M[3,3]");  // T_1 = M[3, 1^+]
  CHECK(strs(s1.in_partners) == std::vector<std::string>{"M[3,1]x1"});  // V_3
  CHECK(strs(s1.out_partners) == std::vector<std::string>{"M[2,2]x2"});  // V_2^2
  const auto& s2 = run.trace[1];
  CHECK(s2.vertex == 2);
  CHECK(s2.old_label.str() == "M[2,2]");  // V_2
  CHECK(s2.new_label.str() == "M[4,4]");  // T_2
  CHECK(strs(s2.in_partners) == std::vector<std::string>{"M[4,2]x1"});  // V_4
  CHECK(strs(s2.out_partners) == std::vector<std::string>{"M[3,3]x2"});  // T_1^2
  CHECK(run.final_matches_t);
  CHECK(run.coverage);
  CHECK(run.t_labels[0].str() == "M[3,3]");
  CHECK(run.t_labels[2].str() == "M[3,1]");

  auto expect = quiver_of(4, {3, 4}, {{1, 2, 2}, {2, 4, 1}, {1, 3, 1}, {3, 4, 2}, {4, 1, 2}});
  CHECK(run.final_quiver == expect);
  CHECK(row_reversal(2, W4) == std::vector<int>{3, 4, 1, 2});
  // Same quiver as Gamma_i once each row is reversed; the projectives move to
  // the right end of the rows, so only the arrows are compared.
  auto reversed = run.final_quiver.relabel(row_reversal(2, W4));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(reversed.arrows(i, j) == run.initial_quiver.arrows(i, j));
  CHECK(t_numbering(run) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("labelled run with all letters distinct") {
  auto a3 = CartanMatrix::from_name("A3");
  auto run = run_labeled_sequence(a3, WeylWord{{2, 1, 3}});
  CHECK(run.trace.empty());
  CHECK(run.final_labels == run.initial_labels);
  CHECK(run.final_matches_t);
  CHECK(run.coverage);
}

TEST_CASE("random words: sequence length, partners, coverage") {
  for (const char* name : {"A3", "D4", "affine-a1"}) {
    auto c = CartanMatrix::from_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      auto w = mwb::testing::random_reduced_word(c, 10);
      auto p = word_positions(c.n(), w);
      std::size_t expect = 0;
      for (int j = 1; j <= c.n(); ++j) expect += static_cast<std::size_t>(p.t[j] * (p.t[j] - 1) / 2);
      CHECK(distinguished_sequence(c, w).size() == expect);
      LabeledRun run;
      CHECK_NOTHROW(run = run_labeled_sequence(c, w));
      CHECK(run.final_matches_t);
      CHECK(run.coverage);
      // every letter occurring gives one frozen vertex
      int letters = 0;
      for (int j = 1; j <= c.n(); ++j) letters += p.t[j] > 0;
      CHECK(static_cast<int>(run.initial_quiver.frozen().size()) == letters);
      // T_k = Omega^-1(V_k) for mutable k: numbering by T_k fixes the
      // mutable part and the frozen positions.
      auto renumbered = run.final_quiver.relabel(t_numbering(run));
      const auto mv = run.initial_quiver.mutable_vertices();
      CHECK(renumbered.frozen() == run.initial_quiver.frozen());
      CHECK(renumbered.induced(mv) == run.initial_quiver.induced(mv));
    }
  }
}
