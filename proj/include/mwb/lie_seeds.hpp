#pragma once

// Seeds attached to reduced words: the quiver Gamma_i, the distinguished
// mutation sequence with interval-module bookkeeping, and type-A seeds whose
// variables are flag minors.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwb/cartan.hpp"
#include "mwb/quiver.hpp"
#include "mwb/seed.hpp"

namespace mwb {

/// Vertices 1..r; |c_{i_s,i_t}| arrows s->t when t^+ >= s^+ > t > s and
/// i_s != i_t; an arrow s->s^- when s^- > 0; frozen = {k : k^+ = r+1}.
Quiver build_gamma_quiver(const CartanMatrix& c, const WeylWord& w);

/// M[l,k] = V_l / V_{k^-}; zero when l = 0 or k > l.
struct IntervalLabel {
  int l = 0;
  int k = 0;

  bool is_zero() const { return l < 1 || k > l; }
  std::string str() const;
  auto operator<=>(const IntervalLabel&) const = default;
};

struct SequenceStep {
  int step;    // k in 1..r
  int vertex;  // vertex mutated
};

std::vector<SequenceStep> distinguished_sequence(const CartanMatrix& c, const WeylWord& w);
std::vector<int> distinguished_vertices(const CartanMatrix& c, const WeylWord& w);

struct TraceRecord {
  int step = 0;
  int vertex = 0;
  IntervalLabel old_label, new_label;
  /// Partners with multiplicity; the quiver-side and interval-side lists are
  /// both recorded (they agree, otherwise SequenceMismatch is thrown).
  std::vector<std::pair<IntervalLabel, int>> in_partners;   // b_jk < 0
  std::vector<std::pair<IntervalLabel, int>> out_partners;  // b_jk > 0
};

struct LabeledRun {
  Quiver initial_quiver;
  Quiver final_quiver;
  std::vector<IntervalLabel> initial_labels;  // V_k = M[k, k_min], index k-1
  std::vector<IntervalLabel> final_labels;
  std::vector<IntervalLabel> t_labels;        // T_k per definition
  std::vector<TraceRecord> trace;
  /// Final labels are a permutation of the T_k.
  bool final_matches_t = false;
  /// Every M[l,k] with k <= l on one row appears exactly once over the run.
  bool coverage = false;
};

/// Throws SequenceMismatch when quiver-predicted exchange partners differ
/// from the interval prediction at some step.
LabeledRun run_labeled_sequence(const CartanMatrix& c, const WeylWord& w);

/// Vertex v of the final quiver goes to the k with final label T_k. Under
/// this numbering the mutable part of the final quiver is that of Gamma_i.
std::vector<int> t_numbering(const LabeledRun& run);

/// Vertex permutation reversing every row: the k-th vertex of row j (in label
/// order) goes to the (t_j + 1 - k)-th.
std::vector<int> row_reversal(int n, const WeylWord& w);

struct TypeASeed {
  Seed seed;                       // variables are polynomials in u_ij
  std::vector<std::string> names;  // "D_{12,23}"
  std::vector<std::pair<std::vector<int>, std::vector<int>>> sets;
};

/// Seed on Gamma_i for a reduced word in type A_n; vertex k carries the flag
/// minor with rows {1..i_k} and columns s_{i_1}...s_{i_k}({1..i_k}) of a
/// generic unitriangular (n+1)x(n+1) matrix.
TypeASeed seed_from_word_typeA(int n, const WeylWord& w);

nlohmann::json to_json(const TraceRecord& t);
nlohmann::json to_json(const LabeledRun& r);

}  // namespace mwb
