#pragma once

// Symbolic matrix realizations of N_+: unitriangular matrices for type A_n and
// 2x2 matrices over z-truncated polynomials for affine sl2, and their minors.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwb/algebra.hpp"
#include "mwb/cartan.hpp"

namespace mwb {

class SymMatrix {
 public:
  struct Truncation {
    std::size_t var;  // index of z in the ring
    int degree;       // terms with z^k, k > degree, are dropped
    bool operator==(const Truncation&) const = default;
  };

  SymMatrix(int rows, int cols, std::size_t arity, std::optional<Truncation> trunc = std::nullopt);
  static SymMatrix identity(int n, std::size_t arity, std::optional<Truncation> trunc = std::nullopt);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t arity() const { return arity_; }
  const std::optional<Truncation>& truncation() const { return trunc_; }

  /// 1-based.
  const LaurentPoly& operator()(int i, int j) const;
  void set(int i, int j, LaurentPoly v);

  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  bool operator==(const SymMatrix&) const = default;

 private:
  LaurentPoly clip(LaurentPoly p) const;

  int rows_, cols_;
  std::size_t arity_;
  std::optional<SymMatrix::Truncation> trunc_;
  std::vector<LaurentPoly> e_;
};

/// Laplace expansion; optional z-truncation applied at every product.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m,
                        std::optional<SymMatrix::Truncation> trunc = std::nullopt);

/// Minor with 1-based row and column sets. Throws InvalidInput on size mismatch.
LaurentPoly minor(const SymMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct Model {
  enum class Kind { TypeA, AffineSl2 };
  Kind kind;
  int n;  // rank; 2 for affine sl2
  int truncation = 8;

  static Model type_a(int n) { return {Kind::TypeA, n, 0}; }
  static Model affine_sl2(int truncation = 8) { return {Kind::AffineSl2, 2, truncation}; }
  int size() const { return kind == Kind::TypeA ? n + 1 : 2; }
};

/// Symbolic product x_{i_r}(t_r) ... x_{i_1}(t_1) with its ring
/// t1..tr (followed by z for the affine model).
struct Realization {
  Ring ring;
  SymMatrix matrix;
};

/// x_i(t) with t any ring element; z_var is the index of z (affine only).
SymMatrix one_param(const Model& model, int i, const LaurentPoly& t, std::size_t z_var = 0);
Realization product_word(const Model& model, const WeylWord& w);

/// Coefficients a_k, b_k, c_k, d_k (k <= truncation) of an affine matrix as
/// polynomials in the remaining variables (z projected away).
std::map<std::string, LaurentPoly> coordinate_functions(const Realization& r);

/// Generic (n x n) unitriangular matrix in variables u12, u13, ..., u_{n-1,n}.
Realization generic_unitriangular(int n);

/// "D_{12,23}" naming of flag minors.
std::string minor_name(const std::vector<int>& rows, const std::vector<int>& cols);

/// Rows {1..i_k} and columns s_{i_1}...s_{i_k}({1..i_k}) for a type-A word.
std::pair<std::vector<int>, std::vector<int>> flag_minor_sets(const WeylWord& w, int k);

}  // namespace mwb
