#pragma once

// Quivers with frozen vertices, quiver mutation, exchange matrices,
// isomorphism keys and Dynkin recognition. Vertices are 1-based.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwb/errors.hpp"

namespace mwb {

struct ExchangeMatrix {
  /// b[i][j] (0-based storage) = #arrows j->i minus #arrows i->j.
  std::vector<std::vector<int>> b;

  int n() const { return static_cast<int>(b.size()); }
  int operator()(int i, int j) const { return b.at(i - 1).at(j - 1); }
  bool operator==(const ExchangeMatrix&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n, const std::vector<int>& frozen = {});

  int n() const { return n_; }
  bool is_frozen(int v) const;
  std::vector<int> frozen() const;
  std::vector<int> mutable_vertices() const;

  /// Number of arrows i->j.
  int arrows(int i, int j) const;
  /// Adds m arrows i->j, cancelling against existing arrows j->i.
  Quiver& add_arrows(int i, int j, int m = 1);

  /// Fomin-Zelevinsky mutation at a mutable vertex. Arrows between frozen
  /// vertices are neither created nor removed.
  Quiver mutate(int k) const;

  ExchangeMatrix exchange_matrix() const;
  static Quiver from_exchange_matrix(const ExchangeMatrix& b, const std::vector<int>& frozen);

  /// Induced subquiver on `vertices` (relabelled 1..m in the given order).
  Quiver induced(const std::vector<int>& vertices) const;
  /// Relabels vertex v as perm[v-1].
  Quiver relabel(const std::vector<int>& perm) const;
  /// Every arrow reversed.
  Quiver opposite() const;

  bool operator==(const Quiver&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<bool> frozen_;
  std::vector<std::vector<int>> mult_;
};

/// Standard matrix mutation. With `frozen` given, entries between two frozen
/// indices are left untouched, matching Quiver::mutate.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, const std::vector<int>& frozen = {});

/// Equal for quivers isomorphic via a bijection that fixes every frozen vertex
/// and permutes mutable ones. Arrows between frozen vertices are ignored.
/// Exhaustive up to 10 mutable vertices, refinement heuristic beyond.
std::string canonical_key(const Quiver& q);

/// "A3", "D4", "E6".. when the mutable part's underlying graph is a
/// connected simply-laced Dynkin diagram.
std::optional<std::string> dynkin_type(const Quiver& q);

nlohmann::json to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

}  // namespace mwb
