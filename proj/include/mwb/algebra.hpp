#pragma once

// Exact multivariate Laurent polynomials over arbitrary-precision integers,
// rational functions built from them, and the textual/JSON forms used by the
// rest of the workbench.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "mwb/errors.hpp"

namespace mwb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a Laurent monomial. Ordered lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  long degree() const;
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Variable names for rendering and parsing. Index i names variable i.
struct Ring {
  std::vector<std::string> names;

  /// prefix + (start .. start+count-1), e.g. x1..xn.
  static Ring indexed(std::string_view prefix, std::size_t count, int start = 1);

  std::size_t arity() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const Ring&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

  static LaurentPoly constant(std::size_t arity, const Integer& c);
  /// x_index (0-based) raised to `power`.
  static LaurentPoly variable(std::size_t arity, std::size_t index, int power = 1);
  static LaurentPoly term(const Monomial& m, const Integer& c = 1);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;

  /// Largest term in lexicographic order. Precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }

  /// Coordinatewise minimum / maximum exponent. Precondition: nonzero.
  Monomial min_exponents() const;
  Monomial max_exponents() const;

  LaurentPoly& add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  /// Non-negative powers of anything; negative powers of monomials with unit
  /// coefficient.
  LaurentPoly pow(int e) const;

  bool operator==(const LaurentPoly& o) const = default;

 private:
  void check_arity(const LaurentPoly& o) const;

  std::size_t arity_ = 0;
  TermMap terms_;
};

/// Exact Laurent quotient: returns q with q * den == num. Throws NotDivisible
/// when no such q exists and DivisionByZero when den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Exact value at a rational point. Throws DivisionByZero when a variable
/// carrying a negative exponent is assigned zero.
Rational evaluate(const LaurentPoly& p, std::span<const Rational> point);

/// Drops every term whose exponent in `var` exceeds `max_degree`.
LaurentPoly truncate(const LaurentPoly& p, std::size_t var, int max_degree);

/// Coefficient of var^power, as a polynomial in the remaining variables
/// (same arity, exponent of `var` zeroed).
LaurentPoly coefficient_of(const LaurentPoly& p, std::size_t var, int power);

/// Re-indexes into a smaller ring: keep[i] is the source index of target
/// variable i. Every dropped variable must have exponent zero.
LaurentPoly project(const LaurentPoly& p, std::span<const std::size_t> keep);

/// Re-indexes into a larger ring: target index of source variable i is map[i].
LaurentPoly embed(const LaurentPoly& p, std::size_t arity, std::span<const std::size_t> map);

/// Substitutes images[i] for variable i. Negative exponents require monomial
/// images with unit coefficient; otherwise NotDivisible.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images);

class RationalFunction {
 public:
  explicit RationalFunction(std::size_t arity = 0);
  RationalFunction(LaurentPoly p);  // NOLINT: Laurent polynomials embed
  RationalFunction(LaurentPoly num, LaurentPoly den);

  std::size_t arity() const { return num_.arity(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly::constant(den_.arity(), 1); }
  /// Precondition: is_laurent().
  const LaurentPoly& laurent() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);
  RationalFunction pow(int e) const;

  /// Decided by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

Rational evaluate(const RationalFunction& f, std::span<const Rational> point);

/// General substitution; images may be arbitrary rational functions.
RationalFunction substitute(const LaurentPoly& p, std::span<const RationalFunction> images);

// ---- text and JSON ----------------------------------------------------------

/// Canonical rendering: terms by ascending total degree, ties by descending
/// exponent vector, e.g. "-2*b0*b1 + b2^3" or "x1^-1*x2".
std::string to_string(const LaurentPoly& p, const Ring& ring);
/// Canonical rendering without spaces.
std::string to_compact_string(const LaurentPoly& p, const Ring& ring);
/// Clears the monomial denominator, e.g. "(x2+x3)/x1".
std::string to_fraction_string(const LaurentPoly& p, const Ring& ring);
std::string to_string(const RationalFunction& f, const Ring& ring);

/// Accepts integers, ring variables, + - * / ^ (integer exponents, possibly
/// negative) and parentheses. Every canonical and fraction rendering parses.
RationalFunction parse_rational(std::string_view text, const Ring& ring);
/// As parse_rational, requiring a Laurent polynomial result.
LaurentPoly parse_laurent(std::string_view text, const Ring& ring);

/// [{"coeff":"-2","exps":[1,1,0,0]}, ...] in canonical term order.
nlohmann::json to_json_terms(const LaurentPoly& p);
LaurentPoly from_json_terms(const nlohmann::json& j, std::size_t arity);

}  // namespace mwb
