#include "mwb/lie_seeds.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mwb/matrix_realization.hpp"

namespace mwb {

Quiver build_gamma_quiver(const CartanMatrix& c, const WeylWord& w) {
  if (!is_reduced(c, w)) throw NotReduced("word " + format_word(w) + " is not reduced");
  const auto p = word_positions(c.n(), w);
  const int r = p.r;
  std::vector<int> frozen;
  for (int k = 1; k <= r; ++k)
    if (p.plus[k] == r + 1) frozen.push_back(k);
  Quiver q(r, frozen);
  for (int s = 1; s <= r; ++s) {
    for (int t = s + 1; t <= r; ++t) {
      if (w[s] == w[t]) continue;
      if (p.plus[t] >= p.plus[s] && p.plus[s] > t) {
        const int m = -c(w[s], w[t]);
        if (m > 0) q.add_arrows(s, t, m);
      }
    }
    if (p.minus[s] > 0) q.add_arrows(s, p.minus[s]);
  }
  return q;
}

std::string IntervalLabel::str() const {
  if (is_zero()) return "0";
  return "M[" + std::to_string(l) + "," + std::to_string(k) + "]";
}

std::vector<SequenceStep> distinguished_sequence(const CartanMatrix& c, const WeylWord& w) {
  if (!is_reduced(c, w)) throw NotReduced("word " + format_word(w) + " is not reduced");
  const auto p = word_positions(c.n(), w);
  std::vector<SequenceStep> out;
  for (int k = 1; k <= p.r; ++k) {
    const int i = p.letter[k];
    const int count = p.t[i] - 1 - p.before[k][i];
    // Row vertices in increasing label order: the rightmost vertex first.
    const auto row = p.row(i);
    for (int m = 0; m < count; ++m) out.push_back({k, row[static_cast<std::size_t>(m)]});
  }
  return out;
}

std::vector<int> distinguished_vertices(const CartanMatrix& c, const WeylWord& w) {
  std::vector<int> v;
  for (const auto& s : distinguished_sequence(c, w)) v.push_back(s.vertex);
  return v;
}

namespace {

using Partners = std::vector<std::pair<IntervalLabel, int>>;

Partners normalize(std::map<IntervalLabel, int> m) {
  Partners out;
  for (auto& [label, mult] : m)
    if (!label.is_zero() && mult > 0) out.push_back({label, mult});
  return out;
}

std::string show(const Partners& p) {
  std::string s = "{";
  for (const auto& [l, m] : p) s += l.str() + (m > 1 ? "^" + std::to_string(m) : "") + " ";
  return s + "}";
}

}  // namespace

LabeledRun run_labeled_sequence(const CartanMatrix& c, const WeylWord& w) {
  const auto p = word_positions(c.n(), w);
  const int r = p.r;
  LabeledRun run;
  run.initial_quiver = build_gamma_quiver(c, w);
  for (int k = 1; k <= r; ++k) {
    run.initial_labels.push_back({k, p.kmin[k]});
    run.t_labels.push_back(p.plus[k] == r + 1 ? IntervalLabel{k, p.kmin[k]}
                                              : IntervalLabel{p.kmax[k], p.plus[k]});
  }

  Quiver q = run.initial_quiver;
  auto labels = run.initial_labels;
  std::multiset<IntervalLabel> seen(labels.begin(), labels.end());

  for (const auto& st : distinguished_sequence(c, w)) {
    const int v = st.vertex;
    const IntervalLabel old = labels[v - 1];
    // Current label M[d^-, b]: d = (d^-)^+, b^+ = b^+.
    const int dm = old.l, b = old.k;
    const int d = p.plus[dm], bp = p.plus[b];
    const int i = p.letter[v];

    std::map<IntervalLabel, int> quiver_in, quiver_out, interval_in, interval_out;
    const auto bm = q.exchange_matrix();
    for (int j = 1; j <= r; ++j) {
      if (bm(j, v) < 0) quiver_in[labels[j - 1]] += -bm(j, v);
      if (bm(j, v) > 0) quiver_out[labels[j - 1]] += bm(j, v);
    }
    interval_in[{dm, bp}] += 1;
    interval_in[{d, b}] += 1;
    for (int j = 1; j <= c.n(); ++j) {
      if (j == i || c(i, j) == 0) continue;
      // d^-(j) = max{s < d : i_s = j}, b^+(j) = min{s > b : i_s = j}.
      interval_out[{p.minus_j[d][j], p.plus_j[b][j]}] += -c(i, j);
    }

    TraceRecord rec;
    rec.step = st.step;
    rec.vertex = v;
    rec.old_label = old;
    rec.new_label = {d, bp};
    rec.in_partners = normalize(quiver_in);
    rec.out_partners = normalize(quiver_out);
    const auto exp_in = normalize(interval_in), exp_out = normalize(interval_out);
    if (rec.in_partners != exp_in || rec.out_partners != exp_out)
      throw SequenceMismatch("step " + std::to_string(st.step) + " at vertex " +
                             std::to_string(v) + ": quiver partners " + show(rec.in_partners) +
                             " / " + show(rec.out_partners) + ", interval partners " +
                             show(exp_in) + " / " + show(exp_out));
    q = q.mutate(v);
    labels[v - 1] = rec.new_label;
    seen.insert(rec.new_label);
    run.trace.push_back(std::move(rec));
  }

  run.final_quiver = q;
  run.final_labels = labels;
  {
    auto a = labels, b = run.t_labels;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    run.final_matches_t = a == b;
  }
  std::multiset<IntervalLabel> expected;
  for (int l = 1; l <= r; ++l)
    for (int k = 1; k <= l; ++k)
      if (p.letter[k] == p.letter[l]) expected.insert({l, k});
  run.coverage = seen == expected;
  return run;
}

std::vector<int> t_numbering(const LabeledRun& run) {
  std::vector<int> perm;
  for (const auto& label : run.final_labels) {
    auto it = std::find(run.t_labels.begin(), run.t_labels.end(), label);
    if (it == run.t_labels.end()) throw SequenceMismatch("final label " + label.str() + " is not a T_k");
    perm.push_back(static_cast<int>(it - run.t_labels.begin()) + 1);
  }
  return perm;
}

std::vector<int> row_reversal(int n, const WeylWord& w) {
  const auto p = word_positions(n, w);
  std::vector<int> perm(static_cast<std::size_t>(p.r));
  for (int j = 1; j <= n; ++j) {
    const auto row = p.row(j);
    for (std::size_t a = 0; a < row.size(); ++a) perm[row[a] - 1] = row[row.size() - 1 - a];
  }
  return perm;
}

TypeASeed seed_from_word_typeA(int n, const WeylWord& w) {
  const auto c = CartanMatrix::from_name("A" + std::to_string(n));
  Quiver q = build_gamma_quiver(c, w);
  auto real = generic_unitriangular(n + 1);
  TypeASeed out{Seed{q, {}, real.ring}, {}, {}};
  for (int k = 1; k <= w.length(); ++k) {
    auto sets = flag_minor_sets(w, k);
    out.seed.vars.emplace_back(minor(real.matrix, sets.first, sets.second));
    out.names.push_back(minor_name(sets.first, sets.second));
    out.sets.push_back(std::move(sets));
  }
  return out;
}

nlohmann::json to_json(const TraceRecord& t) {
  auto partners = [](const Partners& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [l, m] : ps) a.push_back({{"label", l.str()}, {"multiplicity", m}});
    return a;
  };
  return {{"step", t.step},
          {"vertex", t.vertex},
          {"old_label", t.old_label.str()},
          {"new_label", t.new_label.str()},
          {"in_partners", partners(t.in_partners)},
          {"out_partners", partners(t.out_partners)}};
}

nlohmann::json to_json(const LabeledRun& r) {
  auto strs = [](const std::vector<IntervalLabel>& ls) {
    std::vector<std::string> v;
    for (const auto& l : ls) v.push_back(l.str());
    return v;
  };
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : r.trace) trace.push_back(to_json(t));
  return {{"initial_quiver", to_json(r.initial_quiver)},
          {"final_quiver", to_json(r.final_quiver)},
          {"initial_labels", strs(r.initial_labels)},
          {"final_labels", strs(r.final_labels)},
          {"t_labels", strs(r.t_labels)},
          {"final_matches_t", r.final_matches_t},
          {"coverage", r.coverage},
          {"trace", trace}};
}

}  // namespace mwb
