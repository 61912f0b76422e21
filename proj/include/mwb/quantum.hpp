#pragma once

// Quantum tori over a skew-commutation matrix, normalized monomials Y_R and
// quantum seed mutation. Coefficients live in Z[q, q^-1], stored as one-variable
// Laurent polynomials in q.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwb/algebra.hpp"
#include "mwb/cartan.hpp"
#include "mwb/quiver.hpp"
#include "mwb/report.hpp"

namespace mwb {

using IntMatrix = std::vector<std::vector<int>>;

/// Skew-symmetric integer matrix, 1-based access.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  /// Throws InvalidInput unless square and skew-symmetric.
  explicit SkewMatrix(IntMatrix m);
  /// homdims - transpose(homdims).
  static SkewMatrix from_homdims(const IntMatrix& homdims);

  int size() const { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_.at(i - 1).at(j - 1); }
  const IntMatrix& entries() const { return m_; }
  bool operator==(const SkewMatrix&) const = default;

 private:
  IntMatrix m_;
};

/// Ring with the single variable q.
const Ring& q_ring();
/// q^e as a coefficient.
LaurentPoly q_pow(int e);

/// Finite sum of c(q) Y_1^{a_1}...Y_r^{a_r} (ordered monomials).
class QuantumTorusElement {
 public:
  using TermMap = std::map<Monomial, LaurentPoly>;

  explicit QuantumTorusElement(std::size_t rank = 0) : rank_(rank) {}
  static QuantumTorusElement monomial(const std::vector<int>& exps, const LaurentPoly& coeff = q_pow(0));
  static QuantumTorusElement generator(std::size_t rank, int i);  // Y_i, 1-based
  static QuantumTorusElement scalar(std::size_t rank, const LaurentPoly& coeff);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coefficient(const Monomial& m) const;

  QuantumTorusElement& add_term(const Monomial& m, const LaurentPoly& c);
  QuantumTorusElement& operator+=(const QuantumTorusElement& o);
  QuantumTorusElement& operator-=(const QuantumTorusElement& o);
  friend QuantumTorusElement operator+(QuantumTorusElement a, const QuantumTorusElement& b) { return a += b; }
  friend QuantumTorusElement operator-(QuantumTorusElement a, const QuantumTorusElement& b) { return a -= b; }
  /// Multiplies every coefficient by c (central).
  QuantumTorusElement scaled(const LaurentPoly& c) const;

  bool operator==(const QuantumTorusElement&) const = default;

 private:
  void check_rank(const QuantumTorusElement& o) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

/// Product with Y^a Y^b = q^{sum_{i>j} a_i b_j lambda_ij} Y^{a+b}.
QuantumTorusElement torus_mul(const QuantumTorusElement& x, const QuantumTorusElement& y,
                              const SkewMatrix& lambda);
/// Non-negative powers; x^-1 for single terms with unit coefficient.
QuantumTorusElement torus_pow(const QuantumTorusElement& x, int e, const SkewMatrix& lambda);

/// Q with d * Q = p, or nullopt when no such torus element exists.
std::optional<QuantumTorusElement> try_left_div(const QuantumTorusElement& p,
                                                const QuantumTorusElement& d,
                                                const SkewMatrix& lambda);

/// alpha(R) = sum_{i<j} a_i a_j [V_i,V_j] + sum_i a_i(a_i-1)/2 [V_i,V_i].
long alpha(const std::vector<int>& a, const IntMatrix& homdims);
/// [R,S] = sum_{i,j} a_i b_j [V_i,V_j].
long hom_pairing(const std::vector<int>& a, const std::vector<int>& b, const IntMatrix& homdims);
/// Y_R = q^{-alpha(R)} Y_1^{a_1} ... Y_r^{a_r}.
QuantumTorusElement normalized_monomial(const std::vector<int>& a, const IntMatrix& homdims);

/// q = 1: a commutative Laurent polynomial in Y_1..Y_r.
LaurentPoly specialize_q1(const QuantumTorusElement& x);

/// Canonical rendering, terms by descending exponent vector, e.g.
/// "q^-2*Y1^-1*Y2^2 + Y1^-1*Y3".
std::string to_string(const QuantumTorusElement& x, const Ring& ring);
nlohmann::json to_json(const QuantumTorusElement& x);

struct QuantumSeed {
  Quiver quiver;               // exchange matrix B
  SkewMatrix lambda0;          // commutation of the initial torus
  SkewMatrix lambda;           // commutation of the current cluster
  CartanMatrix cartan;         // symmetric form for [R,R] = (dim R, dim R)/2
  IntMatrix dims;              // dimension vectors of the current cluster modules
  std::vector<QuantumTorusElement> vars;  // in the initial torus
  Ring ring;                   // Y1..Yr

  const QuantumTorusElement& var(int k) const { return vars.at(k - 1); }
  /// [T_k, T_k] = (d_k, d_k)/2.
  int self_hom(int k) const;
};

/// Initial quantum seed. Checks skew-symmetry, that [V_k,V_k] equals half the
/// norm of dims[k], and compatibility: for mutable j, sum_l b_lj lambda_lk is
/// zero for k != j and positive for k = j. Throws Incompatible otherwise.
QuantumSeed make_quantum_seed(const Quiver& q, const IntMatrix& homdims, const CartanMatrix& c,
                              const IntMatrix& dims);

/// Seed on Gamma_i with dims gamma_k.
QuantumSeed word_quantum_seed(const CartanMatrix& c, const WeylWord& w, const IntMatrix& homdims);

/// [V_i,V_j] for the affine word (1,2,1,2).
const IntMatrix& affine_homdims();

/// For Ext-orthogonal modules [V_i,V_j] + [V_j,V_i] = (d_i, d_j), so the
/// homdims are ((d_i,d_j) + lambda_ij)/2. Throws InvalidInput on odd sums.
IntMatrix homdims_from_lambda(const CartanMatrix& c, const IntMatrix& dims, const SkewMatrix& lambda);

/// New variable q^{-h/2}(M(-e_k + b_+) + M(-e_k + b_-)) with M the
/// bar-invariant monomial in the current cluster, h = [T'_k,T'_k];
/// lambda'_{kj} = -lambda_{kj} + sum_i [b_ik]_+ lambda_ij.
/// Throws FrozenVertex, IndexOutOfRange, or Incompatible (half-integer q power,
/// dimension mismatch, failed q-commutation of the new cluster).
QuantumSeed quantum_mutate(const QuantumSeed& s, int k);

/// Every pair of current variables q-commutes as lambda prescribes.
bool q_commutation_holds(const QuantumSeed& s);

nlohmann::json to_json(const QuantumSeed& s);

/// The affine quantum seed: L, both exchange relations, involution, q = 1 agreement.
Report verify_quantum_example();

}  // namespace mwb
