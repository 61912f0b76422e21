#pragma once

// Symmetric generalized Cartan matrices and Weyl group words acting on the
// root and weight lattices.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mwb/errors.hpp"

namespace mwb {

class CartanMatrix {
 public:
  /// Validates c_ii = 2, symmetric nonpositive off-diagonal, connected graph.
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  /// "A3", "D4", "E6".."E8", "affine-a1" (also "A1~").
  static CartanMatrix from_name(std::string_view name);

  int n() const { return static_cast<int>(c_.size()); }
  /// 1-based entry c_ij.
  int operator()(int i, int j) const { return c_.at(i - 1).at(j - 1); }
  const std::vector<std::vector<int>>& entries() const { return c_; }
  bool operator==(const CartanMatrix&) const = default;

 private:
  std::vector<std::vector<int>> c_;
};

/// Coordinates in the simple-root basis.
struct RootVector {
  std::vector<int> coords;
  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;
};

/// Coordinates in the fundamental-weight basis.
struct WeightVector {
  std::vector<int> coords;
  bool operator==(const WeightVector&) const = default;
};

RootVector simple_root(const CartanMatrix& c, int i);
WeightVector fundamental_weight(const CartanMatrix& c, int i);
/// alpha_i = sum_j c_ji varpi_j.
WeightVector to_weight(const CartanMatrix& c, const RootVector& v);

/// s_i(v) = v - v(h_i) alpha_i.
RootVector reflect(const CartanMatrix& c, int i, const RootVector& v);
WeightVector reflect(const CartanMatrix& c, int i, const WeightVector& v);

/// Letters i_1..i_r; the element is w = s_{i_r} ... s_{i_1}.
struct WeylWord {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  /// 1-based letter i_k.
  int operator[](int k) const { return letters.at(k - 1); }
  bool operator==(const WeylWord&) const = default;
};

WeylWord parse_word(std::string_view text);  // "1,2,1,2"
std::string format_word(const WeylWord& w);

void check_letters(const CartanMatrix& c, const WeylWord& w);
bool is_reduced(const CartanMatrix& c, const WeylWord& w);
/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}). Throws NotReduced.
std::vector<RootVector> inversion_roots(const CartanMatrix& c, const WeylWord& w);
/// gamma_k = varpi_{i_k} - s_{i_1} ... s_{i_k}(varpi_{i_k}), in root coordinates.
std::vector<RootVector> gamma_weights(const CartanMatrix& c, const WeylWord& w);

/// Position bookkeeping for a word of length r over n letters. Every table is
/// 1-based; the sentinels 0 and r+1 stand for "none before" / "none after".
struct PositionTables {
  int r = 0;
  int n = 0;
  std::vector<int> minus, plus, kmin, kmax;  // indexed by k in 1..r
  std::vector<std::vector<int>> minus_j;     // [k][j], k in 1..r+1
  std::vector<std::vector<int>> plus_j;      // [k][j], k in 0..r
  std::vector<std::vector<int>> before;      // k[j], k in 1..r+1
  std::vector<int> t;                        // t_j
  std::vector<int> letter;                   // i_k

  int row_size(int j) const { return t.at(j); }
  /// Vertices on row j in increasing label order.
  std::vector<int> row(int j) const;
};

PositionTables word_positions(int n, const WeylWord& w);

nlohmann::json to_json(const CartanMatrix& c);
CartanMatrix cartan_from_json(const nlohmann::json& j);

}  // namespace mwb
