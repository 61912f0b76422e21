#include "mwb/verification.hpp"

#include <algorithm>
#include <cstdlib>

#include "mwb/lie_seeds.hpp"
#include "mwb/matrix_realization.hpp"
#include "mwb/seed.hpp"

namespace mwb {

namespace {

const CartanMatrix& affine() {
  static const CartanMatrix c = CartanMatrix::from_name("affine-a1");
  return c;
}

const WeylWord& affine_word() {
  static const WeylWord w{{1, 2, 1, 2}};
  return w;
}

constexpr std::size_t kArity = 7;  // b0 b1 b2 b3 d1 d2 d3

LaurentPoly b(int k) { return LaurentPoly::variable(kArity, static_cast<std::size_t>(k)); }
LaurentPoly d(int k) { return LaurentPoly::variable(kArity, static_cast<std::size_t>(3 + k)); }
LaurentPoly cst(long v) { return LaurentPoly::constant(kArity, v); }

IdentityCheck poly_check(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs,
                         const Ring& ring) {
  return {std::move(name), lhs == rhs, to_string(lhs, ring), to_string(rhs, ring)};
}

IdentityCheck rational_check(std::string name, const RationalFunction& lhs,
                             const RationalFunction& rhs, const Ring& ring) {
  return {std::move(name), lhs == rhs, to_string(lhs, ring), to_string(rhs, ring)};
}

// Images of b0..b3, d1..d3 as polynomials in t1..t4 at x_i(t).
std::vector<LaurentPoly> coordinates_at_xt() {
  auto real = product_word(Model::affine_sl2(), affine_word());
  auto coords = coordinate_functions(real);
  return {coords.at("b0"), coords.at("b1"), coords.at("b2"), coords.at("b3"),
          coords.at("d1"), coords.at("d2"), coords.at("d3")};
}

Ring t_ring() { return Ring::indexed("t", 4); }

// Mutates the seed (vars on Gamma_i) at 2 then 1 and returns (W1, W2).
std::pair<LaurentPoly, LaurentPoly> syzygy_pair(const std::vector<LaurentPoly>& v, const Ring& ring) {
  Seed s{build_gamma_quiver(affine(), affine_word()), {}, ring};
  for (const auto& p : v) s.vars.emplace_back(p);
  s = mutate(s, 2);
  const auto w2 = s.var(2);
  s = mutate(s, 1);
  const auto w1 = s.var(1);
  if (!w1.is_laurent() || !w2.is_laurent()) throw NotDivisible("syzygy variables are not polynomial");
  return {w1.laurent(), w2.laurent()};
}

}  // namespace

const PhiEntry& PhiCatalog::at(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw InvalidInput("no phi function named " + name);
}

PhiCatalog phi_catalog() {
  PhiCatalog cat{Ring{{"b0", "b1", "b2", "b3", "d1", "d2", "d3"}}, {}};
  const auto one = cst(1), zero = cst(0);

  std::vector<LaurentPoly> v_nw{b(0), -b(1), b(0) * b(2) - b(1) * b(1), b(1) * b(3) - b(2) * b(2)};
  std::vector<LaurentPoly> m_nw{b(0), -b(1), b(2), -b(3)};

  const auto v2 = determinant({{b(0), b(1)}, {one, d(1)}});
  std::vector<LaurentPoly> v_np{
      b(0), v2, determinant({{b(0), b(1), b(2)}, {one, d(1), d(2)}, {zero, b(0), b(1)}}),
      determinant({{b(0), b(1), b(2), b(3)},
                   {one, d(1), d(2), d(3)},
                   {zero, b(0), b(1), b(2)},
                   {zero, one, d(1), d(2)}})};
  std::vector<LaurentPoly> m_np{
      b(0), v2, determinant({{b(0), b(1), b(2)}, {one, d(1), d(2)}, {zero, one, d(1)}}),
      determinant({{b(0), b(1), b(2), b(3)},
                   {one, d(1), d(2), d(3)},
                   {zero, one, d(1), d(2)},
                   {zero, zero, one, d(1)}})};

  for (int k = 0; k < 4; ++k)
    cat.entries.push_back({"V" + std::to_string(k + 1), v_nw[k], v_np[k]});
  for (int k = 0; k < 4; ++k)
    cat.entries.push_back({"M" + std::to_string(k + 1), m_nw[k], m_np[k]});

  auto [w1_nw, w2_nw] = syzygy_pair(v_nw, cat.ring);
  auto [w1_np, w2_np] = syzygy_pair(v_np, cat.ring);
  cat.entries.push_back({"W1", w1_nw, w1_np});
  cat.entries.push_back({"W2", w2_nw, w2_np});
  cat.entries.push_back({"W3", v_nw[2], v_np[2]});
  cat.entries.push_back({"W4", v_nw[3], v_np[3]});
  return cat;
}

Report verify_eqnotCA() {
  Report rep{"factorization parameters from matrix coordinates", {}};
  auto real = product_word(Model::affine_sl2(), affine_word());
  auto c = coordinate_functions(real);
  const Ring ring = t_ring();
  auto t = [](int k) { return RationalFunction(LaurentPoly::variable(4, static_cast<std::size_t>(k - 1))); };
  const RationalFunction a1(c.at("a1"));
  const std::vector<std::pair<std::string, RationalFunction>> formulas{
      {"t4 = c2/a1", RationalFunction(c.at("c2")) / a1},
      {"t3 = (b0*a1 - b1)/a1", RationalFunction(c.at("b0") * c.at("a1") - c.at("b1")) / a1},
      {"t2 = (c1*a1 - c2)/a1", RationalFunction(c.at("c1") * c.at("a1") - c.at("c2")) / a1},
      {"t1 = b1/a1", RationalFunction(c.at("b1")) / a1},
  };
  for (std::size_t i = 0; i < formulas.size(); ++i)
    rep.checks.push_back(rational_check(formulas[i].first, t(4 - static_cast<int>(i)), formulas[i].second, ring));

  const std::vector<Rational> point{1, 2, 3, 4};
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const Rational lhs = 4 - static_cast<long>(i);
    const Rational rhs = evaluate(formulas[i].second, point);
    rep.checks.push_back({formulas[i].first + " at t=(1,2,3,4)", lhs == rhs, lhs.get_str(), rhs.get_str()});
  }
  return rep;
}

Report verify_phi_identities() {
  Report rep{"phi functions of the affine word", {}};
  const auto cat = phi_catalog();
  const auto& R = cat.ring;
  auto nw = [&](const char* n) { return cat.at(n).nw; };
  auto np = [&](const char* n) { return *cat.at(n).nplus; };

  rep.checks.push_back(poly_check("V1*M3 = V3 + V2^2", nw("V1") * nw("M3"),
                                  nw("V3") + nw("V2") * nw("V2"), R));
  rep.checks.push_back(poly_check("V2*M4 = V4 + M3^2", nw("V2") * nw("M4"),
                                  nw("V4") + nw("M3") * nw("M3"), R));
  rep.checks.push_back(poly_check("V1*M3 = V3 + V2^2 on N_+", np("V1") * np("M3"),
                                  np("V3") + np("V2") * np("V2"), R));
  rep.checks.push_back(poly_check("V2*M4 = V4 + M3^2 on N_+", np("V2") * np("M4"),
                                  np("V4") + np("M3") * np("M3"), R));

  // Mutations of the initial seed on Gamma_i.
  Seed s{build_gamma_quiver(affine(), affine_word()), {}, R};
  for (const char* n : {"V1", "V2", "V3", "V4"}) s.vars.emplace_back(nw(n));
  const auto expected_mu2 = parse_laurent("2*b0*b1*b2 - b1^3 - b0^2*b3", R);
  rep.checks.push_back(rational_check("mu2 of the initial seed", mutate(s, 2).var(2),
                                      RationalFunction(expected_mu2), R));
  rep.checks.push_back(rational_check(
      "(V1^2*V4 + V3^2)/V2",
      RationalFunction(nw("V1") * nw("V1") * nw("V4") + nw("V3") * nw("V3")) / RationalFunction(nw("V2")),
      RationalFunction(expected_mu2), R));
  const auto mu1 = mutate(s, 1);
  rep.checks.push_back(rational_check("mu1 of the initial seed = M3", mu1.var(1), RationalFunction(nw("M3")), R));
  rep.checks.push_back(rational_check("mu2 mu1 of the initial seed = M4", mutate(mu1, 2).var(2),
                                      RationalFunction(nw("M4")), R));

  rep.checks.push_back(poly_check("Delta(w1, w^-1 w1) = V3", parse_laurent("b0*b2 - b1^2", R), nw("V3"), R));
  rep.checks.push_back(poly_check("Delta(w2, w^-1 w2) = V4", parse_laurent("b1*b3 - b2^2", R), nw("V4"), R));

  // d1 = d2 = d3 = 0 recovers the N(w) forms.
  std::vector<LaurentPoly> at_d0{b(0), b(1), b(2), b(3), cst(0), cst(0), cst(0)};
  for (const auto& e : cat.entries)
    if (e.nplus) rep.checks.push_back(poly_check(e.name + " at d=0", substitute(*e.nplus, at_d0), e.nw, R));
  return rep;
}

Report verify_nprime_invariance(int truncation) {
  if (truncation < 7) throw InvalidInput("truncation degree must be at least 7");
  Report rep{"N'(w)-invariance of the N_+ forms", {}};
  const auto cat = phi_catalog();

  // Ring: b0..b3, a'_1..a'_T, c'_1..c'_T, b'_4..b'_T, z.
  const int T = truncation;
  Ring ring = Ring::indexed("b", 4, 0);
  for (const char* p : {"ap", "cp"})
    for (int k = 1; k <= T; ++k) ring.names.push_back(p + std::to_string(k));
  for (int k = 4; k <= T; ++k) ring.names.push_back("bp" + std::to_string(k));
  ring.names.push_back("z");
  const std::size_t n = ring.arity(), z = n - 1;
  const SymMatrix::Truncation tr{z, T};
  auto var = [&](const std::string& name) { return LaurentPoly::variable(n, *ring.index_of(name)); };
  auto zp = [&](int k) { return LaurentPoly::variable(n, z, k); };
  auto clip = [&](const LaurentPoly& p) { return truncate(p, z, T); };

  // Returns n' with the given a'-1, c', b' series and d' = (1 + b'c')/a'.
  auto nprime = [&](const LaurentPoly& A, const LaurentPoly& C, const LaurentPoly& Bp) {
    LaurentPoly inv = LaurentPoly::constant(n, 1), power = LaurentPoly::constant(n, 1);
    for (int m = 1; m <= T; ++m) {
      power = clip(power * -A);
      inv += power;
    }
    SymMatrix np(2, 2, n, tr);
    np.set(1, 1, LaurentPoly::constant(n, 1) + A);
    np.set(1, 2, Bp);
    np.set(2, 1, C);
    np.set(2, 2, clip((LaurentPoly::constant(n, 1) + clip(Bp * C)) * inv));
    return np;
  };

  SymMatrix x = SymMatrix::identity(2, n, tr);
  LaurentPoly B(n);
  for (int k = 0; k < 4; ++k) B += LaurentPoly::variable(n, static_cast<std::size_t>(k)) * zp(k);
  x.set(1, 2, B);

  LaurentPoly A(n), C(n), Bp(n);
  for (int k = 1; k <= T; ++k) {
    A += var("ap" + std::to_string(k)) * zp(k);
    C += var("cp" + std::to_string(k)) * zp(k);
    if (k >= 4) Bp += var("bp" + std::to_string(k)) * zp(k);
  }

  std::vector<std::size_t> drop_z(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) drop_z[i] = i;
  Ring shown = ring;
  shown.names.pop_back();

  const std::vector<std::pair<std::string, SymMatrix>> cases{
      {"identity", nprime(LaurentPoly(n), LaurentPoly(n), LaurentPoly(n))},
      {"c = c'_1 z", nprime(LaurentPoly(n), var("cp1") * zp(1), LaurentPoly(n))},
      {"generic", nprime(A, C, Bp)},
  };
  for (const auto& [label, np] : cases) {
    const auto det = clip(np(1, 1) * np(2, 2) - np(1, 2) * np(2, 1));
    rep.checks.push_back(poly_check("det n' = 1 (" + label + ")", project(det, drop_z),
                                    LaurentPoly::constant(n - 1, 1), shown));
    const SymMatrix y = x * np;
    // b_k and d_k of x n' as images of the catalog ring.
    std::vector<LaurentPoly> images;
    for (int k = 0; k < 4; ++k) images.push_back(coefficient_of(y(1, 2), z, k));
    for (int k = 1; k <= 3; ++k) images.push_back(coefficient_of(y(2, 2), z, k));
    std::vector<LaurentPoly> at_x;  // b_k of x itself, d_k = 0
    for (int k = 0; k < 4; ++k) at_x.push_back(LaurentPoly::variable(n, static_cast<std::size_t>(k)));
    for (int k = 1; k <= 3; ++k) at_x.push_back(LaurentPoly(n));
    for (const auto& e : cat.entries) {
      if (!e.nplus) continue;
      rep.checks.push_back(poly_check(e.name + " (" + label + ")",
                                      project(substitute(*e.nplus, images), drop_z),
                                      project(substitute(*e.nplus, at_x), drop_z), shown));
    }
  }
  return rep;
}

std::vector<std::vector<int>> phi_prime_exponents() {
  // phi'_{V_k} = phi_{W_k}/phi_{P(V_k)} with P(V1) = V3^3, P(V2) = V3^2 and
  // W3 = V3, W4 = V4; for the frozen k, phi'_{V_k} = 1/phi_{W_k}.
  return {{1, 0, -3, 0}, {0, 1, -2, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
}

std::vector<std::vector<int>> chamber_exponents(const CartanMatrix& c, const WeylWord& w,
                                                const std::vector<std::vector<int>>& phi_prime) {
  const auto p = word_positions(c.n(), w);
  if (static_cast<int>(phi_prime.size()) != p.r) throw InvalidInput("one phi' vector per position expected");
  const std::size_t dim = phi_prime.empty() ? 0 : phi_prime[0].size();
  std::vector<std::vector<int>> out;
  auto add = [&](std::vector<int>& acc, int pos, int factor) {
    if (pos < 1) return;  // V_0 = 0 contributes 1
    for (std::size_t i = 0; i < dim; ++i) acc[i] += factor * phi_prime[pos - 1][i];
  };
  for (int k = 1; k <= p.r; ++k) {
    std::vector<int> e(dim, 0);
    const int ik = p.letter[k];
    add(e, k, -1);
    add(e, p.minus_j[k][ik], -1);
    for (int j = 1; j <= c.n(); ++j)
      if (j != ik) add(e, p.minus_j[k][j], std::abs(c(ik, j)));
    out.push_back(std::move(e));
  }
  return out;
}

Report chamber_ansatz() {
  Report rep{"Chamber Ansatz for the affine word", {}};
  const auto cat = phi_catalog();
  const auto coords = coordinates_at_xt();
  const Ring ring = t_ring();
  auto at_xt = [&](const std::string& name) { return substitute(*cat.at(name).nplus, coords); };

  const std::vector<std::pair<std::string, std::string>> displayed{
      {"V1", "t3 + t1"},
      {"V2", "t4*(t3^2 + 2*t3*t1 + t1^2) + t2*t1^2"},
      {"V3", "t3*t2^2*t1^3"},
      {"V4", "t4*t3^2*t2^3*t1^4"},
      {"W1", "t3^3*t2^6*t1^8"},
      {"W2", "t3^2*t2^3*t1^4"},
  };
  for (const auto& [name, text] : displayed)
    rep.checks.push_back(poly_check("phi_" + name + "(x(t))", at_xt(name), parse_laurent(text, ring), ring));

  const auto exps = chamber_exponents(affine(), affine_word(), phi_prime_exponents());
  const std::vector<std::vector<int>> expected{{-1, 0, 3, 0}, {2, -1, -4, 0}, {-1, 2, 0, 0}, {0, -1, 0, 1}};
  for (std::size_t k = 0; k < exps.size(); ++k) {
    auto fmt = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return "[" + s + "]";
    };
    rep.checks.push_back({"C" + std::to_string(k + 1) + " exponents over phi_W", exps[k] == expected[k],
                          fmt(exps[k]), fmt(expected[k])});
  }

  std::vector<RationalFunction> w;
  for (const char* name : {"W1", "W2", "W3", "W4"}) w.emplace_back(at_xt(name));
  for (std::size_t k = 0; k < exps.size(); ++k) {
    RationalFunction value(LaurentPoly::constant(4, 1));
    for (std::size_t i = 0; i < 4; ++i) value *= w[i].pow(exps[k][i]);
    rep.checks.push_back(rational_check("t" + std::to_string(k + 1) + " = C" + std::to_string(k + 1) + "(x(t))",
                                        RationalFunction(LaurentPoly::variable(4, k)), value, ring));
  }
  return rep;
}

}  // namespace mwb
