#include "mwb/quantum.hpp"

#include <algorithm>

#include "mwb/lie_seeds.hpp"
#include "mwb/seed.hpp"

namespace mwb {

namespace {

bool is_unit(const LaurentPoly& c) {
  return c.is_monomial() && (c.leading().second == 1 || c.leading().second == -1);
}

long twist(const Monomial& a, const Monomial& b, const SkewMatrix& lambda) {
  long s = 0;
  const int r = static_cast<int>(a.arity());
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < i; ++j) s += static_cast<long>(a[i]) * b[j] * lambda(i + 1, j + 1);
  }
  return s;
}

std::vector<int> unit_vector(std::size_t r, int k) {
  std::vector<int> e(r, 0);
  e[k - 1] = 1;
  return e;
}

int norm_half(const CartanMatrix& c, const std::vector<int>& d) {
  long s = 0;
  for (int i = 1; i <= c.n(); ++i)
    for (int j = 1; j <= c.n(); ++j) s += static_cast<long>(d[i - 1]) * d[j - 1] * c(i, j);
  return static_cast<int>(s / 2);
}

}  // namespace

SkewMatrix::SkewMatrix(IntMatrix m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw InvalidInput("skew matrix must be square");
    for (std::size_t j = 0; j <= i; ++j)
      if (m_[i][j] != -m_[j][i]) throw InvalidInput("matrix is not skew-symmetric");
  }
}

SkewMatrix SkewMatrix::from_homdims(const IntMatrix& h) {
  const std::size_t n = h.size();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].size() != n) throw InvalidInput("homdim matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (h[i][j] < 0) throw InvalidInput("homdims must be nonnegative");
      m[i][j] = h[i][j] - h[j][i];
    }
  }
  return SkewMatrix(std::move(m));
}

const Ring& q_ring() {
  static const Ring r{{"q"}};
  return r;
}

LaurentPoly q_pow(int e) { return LaurentPoly::variable(1, 0, e); }

// ---- torus elements ---------------------------------------------------------

QuantumTorusElement QuantumTorusElement::monomial(const std::vector<int>& exps, const LaurentPoly& coeff) {
  QuantumTorusElement x(exps.size());
  x.add_term(Monomial(exps), coeff);
  return x;
}

QuantumTorusElement QuantumTorusElement::generator(std::size_t rank, int i) {
  if (i < 1 || i > static_cast<int>(rank)) throw IndexOutOfRange("generator index out of range");
  return monomial(unit_vector(rank, i));
}

QuantumTorusElement QuantumTorusElement::scalar(std::size_t rank, const LaurentPoly& coeff) {
  return monomial(std::vector<int>(rank, 0), coeff);
}

LaurentPoly QuantumTorusElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly(1) : it->second;
}

void QuantumTorusElement::check_rank(const QuantumTorusElement& o) const {
  if (rank_ != o.rank_) throw ArityMismatch("quantum torus ranks differ");
}

QuantumTorusElement& QuantumTorusElement::add_term(const Monomial& m, const LaurentPoly& c) {
  if (m.arity() != rank_) throw ArityMismatch("monomial rank differs from torus rank");
  if (c.arity() != 1) throw ArityMismatch("coefficients are Laurent polynomials in q");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

QuantumTorusElement& QuantumTorusElement::operator+=(const QuantumTorusElement& o) {
  check_rank(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QuantumTorusElement& QuantumTorusElement::operator-=(const QuantumTorusElement& o) {
  check_rank(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QuantumTorusElement QuantumTorusElement::scaled(const LaurentPoly& c) const {
  QuantumTorusElement out(rank_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

QuantumTorusElement torus_mul(const QuantumTorusElement& x, const QuantumTorusElement& y,
                              const SkewMatrix& lambda) {
  if (x.rank() != y.rank()) throw ArityMismatch("quantum torus ranks differ");
  if (lambda.size() != static_cast<int>(x.rank())) throw ArityMismatch("lambda has the wrong size");
  QuantumTorusElement out(x.rank());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out.add_term(a * b, ca * cb * q_pow(static_cast<int>(twist(a, b, lambda))));
  return out;
}

QuantumTorusElement torus_pow(const QuantumTorusElement& x, int e, const SkewMatrix& lambda) {
  if (e < 0) {
    if (x.terms().size() != 1 || !is_unit(x.terms().begin()->second))
      throw NotDivisible("only unit monomials are invertible in the torus");
    const auto& [a, c] = *x.terms().begin();
    std::vector<int> neg(a.exponents());
    for (int& v : neg) v = -v;
    // (Y^a)^-1 = q^{tw(a,a)} Y^-a
    auto inv = QuantumTorusElement::monomial(
        neg, c.pow(-1) * q_pow(static_cast<int>(twist(a, a, lambda))));
    return torus_pow(inv, -e, lambda);
  }
  auto out = QuantumTorusElement::scalar(x.rank(), q_pow(0));
  for (int i = 0; i < e; ++i) out = torus_mul(out, x, lambda);
  return out;
}

std::optional<QuantumTorusElement> try_left_div(const QuantumTorusElement& p,
                                                const QuantumTorusElement& d,
                                                const SkewMatrix& lambda) {
  if (d.is_zero()) throw DivisionByZero("division by the zero torus element");
  if (p.rank() != d.rank()) throw ArityMismatch("quantum torus ranks differ");
  const std::size_t r = p.rank();
  QuantumTorusElement quot(r), rem = p;
  if (p.is_zero()) return quot;

  // Any quotient has exponents inside [min p - max d, max p - min d].
  auto bounds = [r](const QuantumTorusElement& x, bool lo) {
    std::vector<int> v(r, 0);
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
      for (std::size_t i = 0; i < r; ++i)
        v[i] = first ? m[i] : (lo ? std::min(v[i], m[i]) : std::max(v[i], m[i]));
      first = false;
    }
    return v;
  };
  const auto pmin = bounds(p, true), pmax = bounds(p, false);
  const auto dmin = bounds(d, true), dmax = bounds(d, false);
  const auto& [dm, dc] = *d.terms().rbegin();

  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    const Monomial m = rm / dm;
    for (std::size_t i = 0; i < r; ++i)
      if (m[i] < pmin[i] - dmax[i] || m[i] > pmax[i] - dmin[i]) return std::nullopt;
    auto c = try_exact_div(rc, dc * q_pow(static_cast<int>(twist(dm, m, lambda))));
    if (!c) return std::nullopt;
    QuantumTorusElement t(r);
    t.add_term(m, *c);
    quot += t;
    rem -= torus_mul(d, t, lambda);
  }
  return quot;
}

long alpha(const std::vector<int>& a, const IntMatrix& h) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) s += static_cast<long>(a[i]) * a[j] * h[i][j];
    s += static_cast<long>(a[i]) * (a[i] - 1) / 2 * h[i][i];
  }
  return s;
}

long hom_pairing(const std::vector<int>& a, const std::vector<int>& b, const IntMatrix& h) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += static_cast<long>(a[i]) * b[j] * h[i][j];
  return s;
}

QuantumTorusElement normalized_monomial(const std::vector<int>& a, const IntMatrix& homdims) {
  if (homdims.size() != a.size()) throw ArityMismatch("exponent vector and homdims differ in size");
  return QuantumTorusElement::monomial(a, q_pow(static_cast<int>(-alpha(a, homdims))));
}

LaurentPoly specialize_q1(const QuantumTorusElement& x) {
  LaurentPoly out(x.rank());
  const std::vector<Rational> one{1};
  for (const auto& [m, c] : x.terms()) out.add_term(m, evaluate(c, one).get_num());
  return out;
}

std::string to_string(const QuantumTorusElement& x, const Ring& ring) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit_monomial = m.is_one();
    std::string body = unit_monomial ? "" : to_string(LaurentPoly::term(m), ring);
    bool negative = false;
    std::string coeff;
    if (c.is_monomial()) {
      const auto& [qm, qc] = c.leading();
      negative = qc < 0;
      const Integer mag = abs(qc);
      if (mag != 1) coeff = mag.get_str();
      if (qm[0] != 0) {
        std::string qs = qm[0] == 1 ? "q" : "q^" + std::to_string(qm[0]);
        coeff = coeff.empty() ? qs : coeff + "*" + qs;
      }
    } else {
      coeff = "(" + to_compact_string(c, q_ring()) + ")";
    }
    std::string term;
    if (coeff.empty()) term = unit_monomial ? "1" : body;
    else term = unit_monomial ? coeff : coeff + "*" + body;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

nlohmann::json to_json(const QuantumTorusElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back({{"coeff", to_compact_string(it->second, q_ring())}, {"exps", it->first.exponents()}});
  return terms;
}

// ---- seeds ------------------------------------------------------------------

int QuantumSeed::self_hom(int k) const { return norm_half(cartan, dims.at(k - 1)); }

QuantumSeed make_quantum_seed(const Quiver& q, const IntMatrix& homdims, const CartanMatrix& c,
                              const IntMatrix& dims) {
  const int r = q.n();
  if (static_cast<int>(homdims.size()) != r || static_cast<int>(dims.size()) != r)
    throw InvalidInput("homdims and dims need one row per vertex");
  for (const auto& d : dims)
    if (static_cast<int>(d.size()) != c.n()) throw InvalidInput("dimension vector has the wrong length");
  const SkewMatrix lambda = SkewMatrix::from_homdims(homdims);
  QuantumSeed s{q, lambda, lambda, c, dims, {}, Ring::indexed("Y", static_cast<std::size_t>(r))};
  for (int k = 1; k <= r; ++k) {
    if (s.self_hom(k) != homdims[k - 1][k - 1])
      throw Incompatible("[V_" + std::to_string(k) + ",V_" + std::to_string(k) +
                         "] differs from half the norm of its dimension vector");
    s.vars.push_back(QuantumTorusElement::generator(static_cast<std::size_t>(r), k));
  }
  const auto b = q.exchange_matrix();
  for (int j : q.mutable_vertices())
    for (int k = 1; k <= r; ++k) {
      long sum = 0;
      for (int l = 1; l <= r; ++l) sum += static_cast<long>(b(l, j)) * lambda(l, k);
      if ((k != j && sum != 0) || (k == j && sum <= 0))
        throw Incompatible("exchange matrix and lambda are not compatible at vertex " + std::to_string(j));
    }
  return s;
}

QuantumSeed word_quantum_seed(const CartanMatrix& c, const WeylWord& w, const IntMatrix& homdims) {
  IntMatrix dims;
  for (const auto& g : gamma_weights(c, w)) dims.push_back(g.coords);
  return make_quantum_seed(build_gamma_quiver(c, w), homdims, c, dims);
}

const IntMatrix& affine_homdims() {
  static const IntMatrix h{{1, 0, 1, 0}, {2, 1, 2, 1}, {3, 2, 4, 2}, {4, 3, 6, 4}};
  return h;
}

IntMatrix homdims_from_lambda(const CartanMatrix& c, const IntMatrix& dims, const SkewMatrix& lambda) {
  const std::size_t r = dims.size();
  if (lambda.size() != static_cast<int>(r)) throw InvalidInput("lambda and dims differ in size");
  IntMatrix h(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long form = 0;
      for (int a = 1; a <= c.n(); ++a)
        for (int b = 1; b <= c.n(); ++b) form += static_cast<long>(dims[i].at(a - 1)) * dims[j].at(b - 1) * c(a, b);
      const long twice = form + lambda(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      if (twice % 2 != 0 || twice < 0) throw InvalidInput("lambda is inconsistent with the dimension vectors");
      h[i][j] = static_cast<int>(twice / 2);
    }
  return h;
}

bool q_commutation_holds(const QuantumSeed& s) {
  const int r = s.quiver.n();
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      auto lhs = torus_mul(s.var(i), s.var(j), s.lambda0);
      auto rhs = torus_mul(s.var(j), s.var(i), s.lambda0).scaled(q_pow(s.lambda(i, j)));
      if (lhs != rhs) return false;
    }
  return true;
}

QuantumSeed quantum_mutate(const QuantumSeed& s, int k) {
  const int r = s.quiver.n();
  if (k < 1 || k > r) throw IndexOutOfRange("vertex out of range");
  if (s.quiver.is_frozen(k)) throw FrozenVertex("vertex " + std::to_string(k) + " is frozen");
  const auto b = s.quiver.exchange_matrix();
  const auto rank = static_cast<std::size_t>(r);

  std::vector<int> bp(rank, 0), bm(rank, 0);
  for (int i = 1; i <= r; ++i) {
    bp[i - 1] = std::max(b(i, k), 0);
    bm[i - 1] = std::max(-b(i, k), 0);
  }

  const std::size_t n = s.dims[0].size();
  std::vector<int> dp(n, 0), dm(n, 0);
  for (int i = 1; i <= r; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      dp[a] += bp[i - 1] * s.dims[i - 1][a];
      dm[a] += bm[i - 1] * s.dims[i - 1][a];
    }
  if (dp != dm) throw Incompatible("exchange terms have different dimension vectors");
  std::vector<int> dnew(n);
  for (std::size_t a = 0; a < n; ++a) dnew[a] = dp[a] - s.dims[k - 1][a];
  const int hnew = norm_half(s.cartan, dnew);

  // X_k * Y' = sum over both terms of q^{e/2} prod_{j != k} X_j^{a_j}.
  QuantumTorusElement numerator(rank);
  for (const auto* bv : {&bp, &bm}) {
    std::vector<int> a = *bv;
    a[k - 1] = -1;
    long twice = 0;
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) twice -= static_cast<long>(a[i - 1]) * a[j - 1] * s.lambda(i, j);
      twice += static_cast<long>(a[i - 1]) * s.self_hom(i);
    }
    for (int j = 1; j < k; ++j) twice += 2L * a[j - 1] * s.lambda(k, j);
    twice -= hnew;
    if (twice % 2 != 0) throw Incompatible("mutation needs a half-integer power of q");
    auto term = QuantumTorusElement::scalar(rank, q_pow(static_cast<int>(twice / 2)));
    for (int j = 1; j <= r; ++j)
      if (j != k && a[j - 1] > 0) term = torus_mul(term, torus_pow(s.var(j), a[j - 1], s.lambda0), s.lambda0);
    numerator += term;
  }
  auto fresh = try_left_div(numerator, s.var(k), s.lambda0);
  if (!fresh) throw NotDivisible("new quantum variable is not in the initial torus");

  IntMatrix lam = s.lambda.entries();
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    long v = -s.lambda(k, j);
    for (int i = 1; i <= r; ++i) v += static_cast<long>(bp[i - 1]) * s.lambda(i, j);
    lam[k - 1][j - 1] = static_cast<int>(v);
    lam[j - 1][k - 1] = static_cast<int>(-v);
  }

  QuantumSeed out = s;
  out.quiver = s.quiver.mutate(k);
  out.lambda = SkewMatrix(std::move(lam));
  out.dims[k - 1] = dnew;
  out.vars[k - 1] = std::move(*fresh);
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    auto lhs = torus_mul(out.var(k), out.var(j), s.lambda0);
    auto rhs = torus_mul(out.var(j), out.var(k), s.lambda0).scaled(q_pow(out.lambda(k, j)));
    if (lhs != rhs)
      throw Incompatible("new variable does not q-commute with variable " + std::to_string(j));
  }
  return out;
}

nlohmann::json to_json(const QuantumSeed& s) {
  nlohmann::json vars = nlohmann::json::array(), strings = nlohmann::json::array();
  for (const auto& v : s.vars) {
    vars.push_back(to_json(v));
    strings.push_back(to_string(v, s.ring));
  }
  return {{"quiver", to_json(s.quiver)},
          {"lambda", s.lambda.entries()},
          {"lambda0", s.lambda0.entries()},
          {"B", s.quiver.exchange_matrix().b},
          {"dims", s.dims},
          {"variables", strings},
          {"variable_terms", vars},
          {"rules",
           {{"variable", "Y'_k = q^{-[T'_k,T'_k]/2} (M(-e_k + [b_k]_+) + M(-e_k + [-b_k]_+)), "
                         "M(a) = q^{-1/2 sum_{i<j} a_i a_j lambda_ij + 1/2 sum_i a_i [T_i,T_i]} X_1^{a_1}...X_r^{a_r}"},
            {"lambda", "lambda'_{kj} = -lambda_{kj} + sum_i [b_ik]_+ lambda_ij"},
            {"dims", "d'_k = sum_i [b_ik]_+ d_i - d_k"}}}};
}

Report verify_quantum_example() {
  Report rep{"quantum exchange relations for the affine word", {}};
  const auto c = CartanMatrix::from_name("affine-a1");
  const WeylWord w{{1, 2, 1, 2}};
  const auto& h = affine_homdims();
  const SkewMatrix L({{0, -2, -2, -4}, {2, 0, 0, -2}, {2, 0, 0, -4}, {4, 2, 4, 0}});
  const auto lam = SkewMatrix::from_homdims(h);
  auto show = [](const SkewMatrix& m) { return nlohmann::json(m.entries()).dump(); };
  rep.checks.push_back({"lambda from homdims = L", lam == L, show(lam), show(L)});

  const auto s0 = word_quantum_seed(c, w, h);
  const auto& R = s0.ring;
  auto Y = [&](int i) { return QuantumTorusElement::generator(4, i); };
  auto mul = [&](const QuantumTorusElement& a, const QuantumTorusElement& b) { return torus_mul(a, b, L); };

  const auto s1 = quantum_mutate(s0, 1);
  const auto lhs1 = mul(Y(1), s1.var(1));
  const auto rhs1 = mul(Y(2), Y(2)).scaled(q_pow(-2)) + Y(3);
  rep.checks.push_back({"Y_V1 Y_T1 = q^-2 Y_V2^2 + Y_V3", lhs1 == rhs1, to_string(lhs1, R), to_string(rhs1, R)});

  const auto s2 = quantum_mutate(s1, 2);
  const auto lhs2 = mul(Y(2), s2.var(2));
  const auto rhs2 = mul(s1.var(1), s1.var(1)).scaled(q_pow(-2)) + Y(4);
  rep.checks.push_back({"Y_V2 Y_T2 = q^-2 Y_T1^2 + Y_V4", lhs2 == rhs2, to_string(lhs2, R), to_string(rhs2, R)});

  rep.checks.push_back({"new clusters q-commute", q_commutation_holds(s1) && q_commutation_holds(s2),
                        "", ""});

  for (int k : {1, 2}) {
    const auto back = quantum_mutate(quantum_mutate(s0, k), k);
    const bool same = back.vars == s0.vars && back.lambda == s0.lambda && back.dims == s0.dims;
    rep.checks.push_back({"mu" + std::to_string(k) + " mu" + std::to_string(k) + " = id", same,
                          to_string(back.var(k), R), to_string(s0.var(k), R)});
  }

  // q = 1 against the classical engine on Gamma_i.
  Seed classical = initial_seed(s0.quiver, R);
  auto quantum = s0;
  for (int k : {1, 2}) {
    classical = mutate(classical, k);
    quantum = quantum_mutate(quantum, k);
    for (int j = 1; j <= 4; ++j) {
      const RationalFunction q1(specialize_q1(quantum.var(j)));
      rep.checks.push_back({"q=1 after mu" + std::to_string(k) + ", variable " + std::to_string(j),
                            q1 == classical.var(j), to_string(q1, R), to_string(classical.var(j), R)});
    }
  }
  return rep;
}

}  // namespace mwb
