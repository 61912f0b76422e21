#include "mwb/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mwb {

// ---- Monomial ---------------------------------------------------------------

long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
  std::vector<int> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("monomial arity mismatch");
  std::vector<int> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

// ---- Ring -------------------------------------------------------------------

Ring Ring::indexed(std::string_view prefix, std::size_t count, int start) {
  Ring r;
  r.names.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    r.names.push_back(std::string(prefix) + std::to_string(start + static_cast<int>(i)));
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

// ---- LaurentPoly ------------------------------------------------------------

LaurentPoly LaurentPoly::constant(std::size_t arity, const Integer& c) {
  LaurentPoly p(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index, int power) {
  if (index >= arity) throw IndexOutOfRange("variable index out of range");
  std::vector<int> e(arity, 0);
  e[index] = power;
  return term(Monomial(std::move(e)));
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.arity());
  p.add_term(m, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    for (int e : m.exponents())
      if (e < 0) return false;
  return true;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Monomial LaurentPoly::min_exponents() const {
  std::vector<int> lo = terms_.begin()->first.exponents();
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) lo[i] = std::min(lo[i], m[i]);
  return Monomial(std::move(lo));
}

Monomial LaurentPoly::max_exponents() const {
  std::vector<int> hi = terms_.begin()->first.exponents();
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) hi[i] = std::max(hi[i], m[i]);
  return Monomial(std::move(hi));
}

LaurentPoly& LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.arity() != arity_) throw ArityMismatch("term arity mismatch");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void LaurentPoly::check_arity(const LaurentPoly& o) const {
  if (o.arity_ != arity_)
    throw ArityMismatch("arity mismatch: " + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  LaurentPoly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || abs(leading().second) != 1)
      throw NotDivisible("negative power of a non-unit");
    const auto& [m, c] = leading();
    std::vector<int> inv(arity_);
    for (std::size_t i = 0; i < arity_; ++i) inv[i] = -m[i] * (-e);
    Integer sign = (c < 0 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
    return term(Monomial(std::move(inv)), sign);
  }
  LaurentPoly result = constant(arity_, 1);
  LaurentPoly base = *this;
  unsigned k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

// ---- division ---------------------------------------------------------------

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.arity() != den.arity()) throw ArityMismatch("exact_div arity mismatch");
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const std::size_t n = num.arity();
  LaurentPoly quotient(n);
  if (num.is_zero()) return quotient;

  // Newton polytopes add under multiplication, so every exponent of the
  // quotient lies in this box. Lex order is a monomial order on Z^n, so each
  // step strictly lowers the remainder's leading term; the box bounds the
  // number of steps.
  const Monomial nlo = num.min_exponents(), nhi = num.max_exponents();
  const Monomial dlo = den.min_exponents(), dhi = den.max_exponents();
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = nlo[i] - dlo[i];
    hi[i] = nhi[i] - dhi[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const auto& [dlead, dcoef] = den.leading();
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = rem.leading();
    Monomial step = rlead / dlead;
    for (std::size_t i = 0; i < n; ++i)
      if (step[i] < lo[i] || step[i] > hi[i]) return std::nullopt;
    if (!mpz_divisible_p(rcoef.get_mpz_t(), dcoef.get_mpz_t())) return std::nullopt;
    Integer c = rcoef / dcoef;
    quotient.add_term(step, c);
    LaurentPoly sub(n);
    for (const auto& [m, dc] : den.terms()) sub.add_term(m * step, dc * c);
    rem -= sub;
  }
  return quotient;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw NotDivisible("no exact Laurent quotient");
  return std::move(*q);
}

// ---- evaluation and re-indexing ----------------------------------------------

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("negative exponent on a variable assigned 0");
    return 1 / rational_pow(base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational evaluate(const LaurentPoly& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) throw ArityMismatch("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) t *= rational_pow(point[i], m[i]);
    total += t;
  }
  return total;
}

LaurentPoly truncate(const LaurentPoly& p, std::size_t var, int max_degree) {
  LaurentPoly r(p.arity());
  for (const auto& [m, c] : p.terms())
    if (m[var] <= max_degree) r.add_term(m, c);
  return r;
}

LaurentPoly coefficient_of(const LaurentPoly& p, std::size_t var, int power) {
  LaurentPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != power) continue;
    std::vector<int> e = m.exponents();
    e[var] = 0;
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

LaurentPoly project(const LaurentPoly& p, std::span<const std::size_t> keep) {
  LaurentPoly r(keep.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(keep.size());
    int kept_total = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      e[i] = m[keep[i]];
      kept_total += std::abs(e[i]);
    }
    int all_total = 0;
    for (int x : m.exponents()) all_total += std::abs(x);
    if (kept_total != all_total) throw InvalidInput("projection drops a variable in use");
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

LaurentPoly embed(const LaurentPoly& p, std::size_t arity, std::span<const std::size_t> map) {
  if (map.size() != p.arity()) throw ArityMismatch("embedding map has wrong size");
  LaurentPoly r(arity);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(arity, 0);
    for (std::size_t i = 0; i < map.size(); ++i) e.at(map[i]) += m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images) {
  if (images.size() != p.arity()) throw ArityMismatch("substitution has wrong number of images");
  if (images.empty()) return p;
  const std::size_t target = images[0].arity();
  std::vector<std::map<int, LaurentPoly>> cache(images.size());
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it == cache[i].end()) it = cache[i].emplace(e, images[i].pow(e)).first;
    return it->second;
  };
  LaurentPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) t *= power(i, m[i]);
    r += t;
  }
  return r;
}

// ---- RationalFunction -------------------------------------------------------

RationalFunction::RationalFunction(std::size_t arity)
    : num_(arity), den_(LaurentPoly::constant(arity, 1)) {}

RationalFunction::RationalFunction(LaurentPoly p)
    : num_(std::move(p)), den_(LaurentPoly::constant(num_.arity(), 1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.arity() != den_.arity()) throw ArityMismatch("numerator/denominator arity mismatch");
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  const std::size_t n = num_.arity();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(n, 1);
    return;
  }
  if (auto q = try_exact_div(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly::constant(n, 1);
    return;
  }
  // Keep the denominator a polynomial with no monomial factor and a positive
  // leading coefficient; these rescalings are units of the Laurent ring.
  Monomial shift = den_.min_exponents();
  LaurentPoly unit = LaurentPoly::term(Monomial(n) / shift, den_.leading().second < 0 ? -1 : 1);
  num_ *= unit;
  den_ *= unit;
}

const LaurentPoly& RationalFunction::laurent() const {
  if (!is_laurent()) throw NotDivisible("rational function is not a Laurent polynomial");
  return num_;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_)
    *this = RationalFunction(num_ + o.num_, den_);
  else
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e >= 0) return RationalFunction(num_.pow(e), den_.pow(e));
  if (is_zero()) throw DivisionByZero("negative power of zero");
  return RationalFunction(den_.pow(-e), num_.pow(-e));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.arity() != b.arity()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational evaluate(const RationalFunction& f, std::span<const Rational> point) {
  Rational d = evaluate(f.den(), point);
  if (d == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
  return evaluate(f.num(), point) / d;
}

RationalFunction substitute(const LaurentPoly& p, std::span<const RationalFunction> images) {
  if (images.size() != p.arity()) throw ArityMismatch("substitution has wrong number of images");
  if (images.empty()) return RationalFunction(p);
  const std::size_t target = images[0].arity();
  // Collect over a common denominator per term to avoid repeated reduction.
  RationalFunction r(target);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly num = LaurentPoly::constant(target, c);
    LaurentPoly den = LaurentPoly::constant(target, 1);
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] > 0) {
        num *= images[i].num().pow(m[i]);
        den *= images[i].den().pow(m[i]);
      } else if (m[i] < 0) {
        num *= images[i].den().pow(-m[i]);
        den *= images[i].num().pow(-m[i]);
      }
    }
    r += RationalFunction(std::move(num), std::move(den));
  }
  return r;
}

// ---- rendering --------------------------------------------------------------

namespace {

std::vector<const LaurentPoly::TermMap::value_type*> canonical_order(const LaurentPoly& p) {
  std::vector<const LaurentPoly::TermMap::value_type*> order;
  order.reserve(p.size());
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    long da = a->first.degree(), db = b->first.degree();
    if (da != db) return da < db;
    return b->first < a->first;
  });
  return order;
}

std::string monomial_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names.at(i);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string render(const LaurentPoly& p, const Ring& ring, bool spaced) {
  if (ring.arity() != p.arity()) throw ArityMismatch("ring does not match polynomial arity");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto* t : canonical_order(p)) {
    const auto& [m, c] = *t;
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    first = false;
    std::string mono = monomial_string(m, ring);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p, const Ring& ring) { return render(p, ring, true); }

std::string to_compact_string(const LaurentPoly& p, const Ring& ring) {
  return render(p, ring, false);
}

std::string to_fraction_string(const LaurentPoly& p, const Ring& ring) {
  if (p.is_zero() || p.is_polynomial()) return to_compact_string(p, ring);
  const Monomial lo = p.min_exponents();
  std::vector<int> d(lo.arity());
  int factors = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = lo[i] < 0 ? -lo[i] : 0;
    if (d[i] != 0) ++factors;
  }
  Monomial denom(std::move(d));
  LaurentPoly numerator = p * LaurentPoly::term(denom);
  std::string num = to_compact_string(numerator, ring);
  if (numerator.size() > 1) num = "(" + num + ")";
  std::string den = monomial_string(denom, ring);
  if (factors > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_string(const RationalFunction& f, const Ring& ring) {
  if (f.is_laurent()) return to_fraction_string(f.num(), ring);
  return "(" + to_compact_string(f.num(), ring) + ")/(" + to_compact_string(f.den(), ring) + ")";
}

// ---- parsing ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r(ring_.arity());
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    RationalFunction t = product();
    r = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        r += product();
      else if (accept('-'))
        r -= product();
      else
        return r;
    }
  }

  RationalFunction product() {
    RationalFunction r = power();
    for (;;) {
      if (accept('*'))
        r *= power();
      else if (accept('/'))
        r /= power();
      else
        return r;
    }
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction(
          LaurentPoly::constant(ring_.arity(), Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_.index_of(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return RationalFunction(LaurentPoly::variable(ring_.arity(), *idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

LaurentPoly parse_laurent(std::string_view text, const Ring& ring) {
  RationalFunction r = parse_rational(text, ring);
  if (!r.is_laurent()) throw ParseError("expression is not a Laurent polynomial");
  return r.num();
}

nlohmann::json to_json_terms(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* t : canonical_order(p))
    arr.push_back({{"coeff", t->second.get_str()}, {"exps", t->first.exponents()}});
  return arr;
}

LaurentPoly from_json_terms(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("term list must be a JSON array");
  LaurentPoly p(arity);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
      throw ParseError("term must have 'coeff' and 'exps'");
    std::vector<int> e = t.at("exps").get<std::vector<int>>();
    if (e.size() != arity) throw ArityMismatch("term exponent vector has wrong arity");
    Integer c;
    const auto& cj = t.at("coeff");
    if (cj.is_string()) {
      if (c.set_str(cj.get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
    } else if (cj.is_number_integer()) {
      c = Integer(std::to_string(cj.get<long long>()));
    } else {
      throw ParseError("coefficient must be a string or integer");
    }
    p.add_term(Monomial(std::move(e)), c);
  }
  return p;
}

}  // namespace mwb
