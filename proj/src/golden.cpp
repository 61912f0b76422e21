#include "mwb/golden.hpp"

#include <algorithm>
#include <sstream>

#include "mwb/lie_seeds.hpp"
#include "mwb/matrix_realization.hpp"
#include "mwb/presets.hpp"
#include "mwb/quantum.hpp"
#include "mwb/session.hpp"
#include "mwb/verification.hpp"

namespace mwb {

namespace {

const WeylWord kAffineWord{{1, 2, 1, 2}};

void expect(Report& r, std::string name, const std::string& got, const std::string& want) {
  r.checks.push_back({std::move(name), got == want, got, want});
}

void expect_true(Report& r, std::string name, bool ok, const std::string& what) {
  r.checks.push_back({std::move(name), ok, ok ? what : "not " + what, what});
}

// Any exception inside a check group becomes a failed check.
template <class F>
void guarded(Report& r, const std::string& name, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.checks.push_back({name, false, std::string("error: ") + e.what(), "no error"});
  }
}

std::string roots_str(const std::vector<RootVector>& rs) {
  std::ostringstream os;
  for (const auto& v : rs) {
    os << "(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
    os << ")";
  }
  return os.str();
}

std::string q_str(const Quiver& q) { return to_json(q).dump(); }

Quiver quiver_of(int n, const std::vector<int>& frozen, const std::vector<std::array<int, 3>>& arrows) {
  Quiver q(n, frozen);
  for (auto [a, b, m] : arrows) q.add_arrows(a, b, m);
  return q;
}

Quiver a3_triangle() { return make_preset("a3-bfz").seed.quiver; }

Report algebra_report() {
  Report r{"exact-algebra", {}};
  guarded(r, "algebra", [&] {
    Ring x = Ring::indexed("x", 2);
    auto f = parse_rational("(1+x1+x2)/(x1*x2)", x);
    std::vector<Rational> at{Rational(1), Rational(1)};
    expect(r, "(1+x1+x2)/(x1x2) at x1=x2=1", evaluate(f, at).get_str(), "3");
    auto s0 = initial_seed(Quiver(2));
    expect(r, "(1+x1+x2)/(x1x2) is Laurent", to_string(certify_laurent(s0, f), x),
           to_string(parse_laurent("x1^-1*x2^-1 + x2^-1 + x1^-1", x), x));
  });
  return r;
}

Report cartan_report() {
  Report r{"cartan-weyl", {}};
  guarded(r, "cartan", [&] {
    auto aff = CartanMatrix::from_name("affine-a1");
    expect_true(r, "s2s1s2s1 is reduced", is_reduced(aff, kAffineWord), "reduced");
    expect(r, "inversion roots of s2s1s2s1", roots_str(inversion_roots(aff, kAffineWord)),
           "(1,0)(2,1)(3,2)(4,3)");
    auto p = word_positions(2, kAffineWord);
    expect(r, "t1 = t2 = 2", std::to_string(p.t[1]) + "," + std::to_string(p.t[2]), "2,2");
  });
  return r;
}

Report quiver_report() {
  Report r{"quiver", {}};
  guarded(r, "quiver", [&] {
    auto mu1 = quiver_of(6, {4, 5, 6},
                         {{{2, 1, 1}}, {{1, 3, 1}}, {{2, 4, 1}}, {{3, 5, 1}}, {{4, 5, 1}}, {{5, 2, 1}},
                          {{5, 6, 1}}, {{6, 3, 1}}});
    expect(r, "mu1 of the A3 triangle quiver", q_str(a3_triangle().mutate(1)), q_str(mu1));
    auto aff = CartanMatrix::from_name("affine-a1");
    auto mu21 = quiver_of(4, {3, 4}, {{{1, 2, 2}}, {{2, 4, 1}}, {{1, 3, 1}}, {{3, 4, 2}}, {{4, 1, 2}}});
    expect(r, "mu2 mu1 of Gamma_i", q_str(build_gamma_quiver(aff, kAffineWord).mutate(1).mutate(2)),
           q_str(mu21));
    expect(r, "mutable part of mu1(Q) is Dynkin", dynkin_type(mu1).value_or("none"), "A3");
    expect(r, "Kronecker quiver is not Dynkin", dynkin_type(quiver_of(2, {}, {{{1, 2, 2}}})).value_or("none"),
           "none");
  });
  return r;
}

Report seed_report() {
  Report r{"seed-engine", {}};
  guarded(r, "seed", [&] {
    auto tri = initial_seed(a3_triangle());
    expect(r, "mu1 of the A3 seed", to_string(mutate(tri, 1).var(1), tri.ring), "(x2+x3)/x1");
    auto rank2 = initial_seed(quiver_of(2, {}, {{{1, 2, 1}}}));
    expect(r, "rank 2, a=1: mu1", to_string(mutate(rank2, 1).var(1), rank2.ring), "(1+x2)/x1");

    auto r1 = explore(rank2);
    expect(r, "rank 2, a=1: clusters and variables",
           std::to_string(r1.clusters) + "/" + std::to_string(r1.variables), "5/5");
    auto a3 = explore(tri);
    expect(r, "A3 seed: clusters, variables, frozen",
           std::to_string(a3.clusters) + "/" + std::to_string(a3.variables) + "/" + std::to_string(a3.frozen),
           "14/12/3");
    auto kr = explore(initial_seed(quiver_of(2, {}, {{{1, 2, 2}}})), ExploreBudget{50, 1000, 1});
    expect(r, "Kronecker at 50 seeds: verdict", to_json(kr)["verdict"].get<std::string>(), "exceeded-budget");
    expect_true(r, "Kronecker at 50 seeds: at least 10 variables", kr.variables >= 10, ">= 10 variables");

    Ring x = Ring::indexed("x", 2);
    auto xs = rank2_sequence(1, 6);
    std::string got;
    for (int i = 0; i < 5; ++i) got += (i ? "; " : "") + to_string(xs[static_cast<std::size_t>(i)], x);
    std::string want;
    for (const char* s : {"(1+x2)/x1", "(1+x1+x2)/(x1*x2)", "(1+x1)/x2", "x1", "x2"})
      want += (want.empty() ? "" : "; ") + to_string(parse_rational(s, x), x);
    expect(r, "rank 2, a=1: x3..x7", got, want);
    expect(r, "rank 2, a=1: x8 = x3", to_string(xs[5], x), to_string(xs[0], x));
  });
  return r;
}

Report lie_report() {
  Report r{"lie-seeds", {}};
  guarded(r, "lie", [&] {
    auto aff = CartanMatrix::from_name("affine-a1");
    auto fig = quiver_of(4, {3, 4}, {{{1, 2, 2}}, {{2, 3, 2}}, {{3, 4, 2}}, {{3, 1, 1}}, {{4, 2, 1}}});
    expect(r, "Gamma_i for 1,2,1,2", q_str(build_gamma_quiver(aff, kAffineWord)), q_str(fig));
    auto seq = distinguished_vertices(aff, kAffineWord);
    expect(r, "distinguished sequence", nlohmann::json(seq).dump(), "[1,2]");

    auto run = run_labeled_sequence(aff, kAffineWord);
    auto partners = [](const TraceRecord& t) {
      std::string s = "{";
      for (const auto& [l, m] : t.in_partners) s += l.str() + "^" + std::to_string(m);
      s += "} {";
      for (const auto& [l, m] : t.out_partners) s += l.str() + "^" + std::to_string(m);
      return s + "} -> " + t.new_label.str();
    };
    // V_3 = M[3,1], V_2 = M[2,2], V_4 = M[4,2], T_1 = M[3,3], T_2 = M[4,4].
    expect(r, "step 1: 0->V1->V3->T1->0, 0->T1->V2^2->V1->0", partners(run.trace.at(0)),
           "{M[3,1]^1} {M[2,2]^2} -> M[3,3]");
    expect(r, "step 2: 0->V2->V4->T2->0, 0->T2->T1^2->V2->0", partners(run.trace.at(1)),
           "{M[4,2]^1} {M[3,3]^2} -> M[4,4]");
    expect_true(r, "final labels are the T_k", run.final_matches_t, "final labels = T_k");

    auto ts = seed_from_word_typeA(3, WeylWord{{1, 2, 1, 3, 2, 1}});
    auto names = ts.names;
    std::sort(names.begin(), names.end());
    expect(r, "minors of the A3 word", nlohmann::json(names).dump(),
           R"(["D_{1,2}","D_{1,3}","D_{1,4}","D_{12,23}","D_{12,34}","D_{123,234}"])");
    std::vector<std::string> frozen;
    for (int v : ts.seed.quiver.frozen()) frozen.push_back(ts.names[static_cast<std::size_t>(v - 1)]);
    std::sort(frozen.begin(), frozen.end());
    expect(r, "frozen minors", nlohmann::json(frozen).dump(), R"(["D_{1,4}","D_{12,34}","D_{123,234}"])");
    auto g = generic_unitriangular(4);
    auto m = mutate(ts.seed, 1);
    const RationalFunction lhs = ts.seed.var(1) * m.var(1);
    const RationalFunction rhs(minor(g.matrix, {1}, {3}) + minor(g.matrix, {1, 2}, {2, 3}));
    expect(r, "D_{1,2} D_{2,3} = D_{1,3} + D_{12,23} via mu1", to_string(lhs, g.ring), to_string(rhs, g.ring));
  });
  return r;
}

Report matrix_report() {
  Report r{"matrix-realization", {}};
  guarded(r, "matrix", [&] {
    auto aff = Model::affine_sl2();
    Ring tz{{"t", "z"}};
    auto t = LaurentPoly::variable(2, 0);
    auto show = [&](const SymMatrix& m) {
      return "(" + to_string(m(1, 1), tz) + " " + to_string(m(1, 2), tz) + "; " + to_string(m(2, 1), tz) + " " +
             to_string(m(2, 2), tz) + ")";
    };
    expect(r, "x1(t)", show(one_param(aff, 1, t, 1)), "(1 t; 0 1)");
    expect(r, "x2(t)", show(one_param(aff, 2, t, 1)), "(1 0; t*z 1)");

    auto real = product_word(aff, kAffineWord);
    const Ring& R = real.ring;
    auto P = [&](const char* s) { return to_string(parse_laurent(s, R), R); };
    const auto& m = real.matrix;
    expect(r, "entry (1,1)", to_string(m(1, 1), R), P("1 + t2*t3*z"));
    expect(r, "entry (1,2)", to_string(m(1, 2), R), P("t1 + t3 + t1*t2*t3*z"));
    expect(r, "entry (2,1)", to_string(m(2, 1), R), P("(t2 + t4)*z + t2*t3*t4*z^2"));
    expect(r, "entry (2,2)", to_string(m(2, 2), R), P("1 + (t1*t2 + t1*t4 + t3*t4)*z + t1*t2*t3*t4*z^2"));

    auto co = coordinate_functions(real);
    Ring T = Ring::indexed("t", 4);
    for (auto [name, want] : std::vector<std::pair<std::string, std::string>>{{"a1", "t2*t3"},
                                                                              {"b0", "t1+t3"},
                                                                              {"b1", "t1*t2*t3"},
                                                                              {"c1", "t2+t4"},
                                                                              {"c2", "t2*t3*t4"},
                                                                              {"d1", "t1*t2+t1*t4+t3*t4"},
                                                                              {"d2", "t1*t2*t3*t4"}})
      expect(r, name + " = " + want, to_string(co.at(name), T), to_string(parse_laurent(want, T), T));

    auto g3 = generic_unitriangular(3);
    const auto& u = g3.matrix;
    auto d = minor(u, {1}, {2}) * minor(u, {2}, {3}) - minor(u, {1}, {3}) - minor(u, {1, 2}, {2, 3});
    expect(r, "D_{1,2} D_{2,3} - D_{1,3} - D_{12,23} on 3x3", to_string(d, g3.ring), "0");
  });
  return r;
}

Report quantum_extra_report() {
  Report r{"quantum-torus products", {}};
  guarded(r, "quantum", [&] {
    const auto& h = affine_homdims();
    auto L = SkewMatrix::from_homdims(h);
    auto Y = [](int i) { return QuantumTorusElement::generator(4, i); };
    auto ring = Ring::indexed("Y", 4);
    expect(r, "Y1 Y2 = q^-2 Y2 Y1", to_string(torus_mul(Y(1), Y(2), L), ring),
           to_string(torus_mul(Y(2), Y(1), L).scaled(q_pow(-2)), ring));
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs{
        {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{2, 1, 0, 0}, {0, 1, 1, 0}}, {{0, 0, 1, 2}, {1, 2, 0, 1}},
        {{1, 1, 1, 1}, {3, 0, 2, 0}}};
    for (const auto& [a, b] : pairs) {
      std::vector<int> sum(4);
      for (int i = 0; i < 4; ++i) sum[i] = a[i] + b[i];
      auto lhs = torus_mul(normalized_monomial(a, h), normalized_monomial(b, h), L);
      auto rhs = normalized_monomial(sum, h).scaled(q_pow(static_cast<int>(hom_pairing(a, b, h))));
      expect(r, "Y_R Y_S = q^[R,S] Y_{R+S} for R=" + nlohmann::json(a).dump() + ", S=" + nlohmann::json(b).dump(),
             to_string(lhs, ring), to_string(rhs, ring));
    }
  });
  return r;
}

Report service_report() {
  Report r{"cli-service", {}};
  guarded(r, "service", [&] {
    auto a3 = explore(make_preset("a3-bfz").seed);
    expect(r, "explore a3-bfz", std::to_string(a3.clusters) + "/" + std::to_string(a3.variables), "14/12");
    auto c = construct({{"cartan", "affine-a1"}, {"word", {1, 2, 1, 2}}});
    auto fig = quiver_of(4, {3, 4}, {{{1, 2, 2}}, {{2, 3, 2}}, {{3, 4, 2}}, {{3, 1, 1}}, {{4, 2, 1}}});
    expect(r, "seed-from-word affine-a1 1,2,1,2", q_str(c.seed.quiver), q_str(fig));
    SessionStore store;
    auto s = store.create({{"preset", "a3-bfz"}});
    auto after = store.mutate(s["id"].get<std::string>(), 1);
    expect(r, "a3-bfz session, mutate 1: variable", after["seed"]["variables"][0].get<std::string>(), "(x2+x3)/x1");
    expect(r, "a3-bfz session, mutate 1: alias", after["seed"]["aliases"][0].dump(), "\"D_{2,3}\"");
  });
  return r;
}

}  // namespace

std::vector<Report> golden_reports() {
  std::vector<Report> out{algebra_report(), cartan_report(), quiver_report(), seed_report(),
                          lie_report(),     matrix_report()};
  auto add = [&](const char* title, auto f) {
    try {
      Report rep = f();
      rep.title = title;
      out.push_back(std::move(rep));
    } catch (const std::exception& e) {
      out.push_back({title, {{"report", false, std::string("error: ") + e.what(), "no error"}}});
    }
  };
  add("factorization parameters", [] { return verify_eqnotCA(); });
  add("phi identities", [] { return verify_phi_identities(); });
  add("N'(w) invariance", [] { return verify_nprime_invariance(8); });
  add("Chamber Ansatz", [] { return chamber_ansatz(); });
  add("quantum example", [] { return verify_quantum_example(); });
  out.push_back(quantum_extra_report());
  out.push_back(service_report());
  return out;
}

}  // namespace mwb
