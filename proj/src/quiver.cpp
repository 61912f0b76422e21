#include "mwb/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mwb {

Quiver::Quiver(int n, const std::vector<int>& frozen)
    : n_(n), frozen_(n, false), mult_(n, std::vector<int>(n, 0)) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  for (int v : frozen) {
    check_vertex(v);
    frozen_[v - 1] = true;
  }
}

void Quiver::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw IndexOutOfRange("vertex out of range: " + std::to_string(v) + " not in 1.." + std::to_string(n_));
}

bool Quiver::is_frozen(int v) const {
  check_vertex(v);
  return frozen_[v - 1];
}

std::vector<int> Quiver::frozen() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (frozen_[v - 1]) out.push_back(v);
  return out;
}

std::vector<int> Quiver::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (!frozen_[v - 1]) out.push_back(v);
  return out;
}

int Quiver::arrows(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return mult_[i - 1][j - 1];
}

Quiver& Quiver::add_arrows(int i, int j, int m) {
  check_vertex(i);
  check_vertex(j);
  if (m < 0) throw InvalidInput("arrow multiplicity must be nonnegative");
  if (i == j && m > 0) throw InvalidInput("loops are not allowed");
  int& fwd = mult_[i - 1][j - 1];
  int& back = mult_[j - 1][i - 1];
  const int cancel = std::min(m, back);
  back -= cancel;
  fwd += m - cancel;
  return *this;
}

Quiver Quiver::mutate(int k) const {
  check_vertex(k);
  if (frozen_[k - 1]) throw FrozenVertex("vertex " + std::to_string(k) + " is frozen");
  Quiver out = *this;
  const int kk = k - 1;
  for (int i = 0; i < n_; ++i) {
    if (i == kk || mult_[i][kk] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (j == kk || j == i || mult_[kk][j] == 0) continue;
      if (frozen_[i] && frozen_[j]) continue;
      int m = 0;
      if (__builtin_mul_overflow(mult_[i][kk], mult_[kk][j], &m) ||
          __builtin_add_overflow(out.mult_[i][j], m, &m))
        throw InvalidInput("arrow multiplicity overflow");
      out.add_arrows(i + 1, j + 1, mult_[i][kk] * mult_[kk][j]);
    }
  }
  for (int i = 0; i < n_; ++i) {
    out.mult_[i][kk] = mult_[kk][i];
    out.mult_[kk][i] = mult_[i][kk];
  }
  return out;
}

ExchangeMatrix Quiver::exchange_matrix() const {
  ExchangeMatrix e{std::vector<std::vector<int>>(n_, std::vector<int>(n_, 0))};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e.b[i][j] = mult_[j][i] - mult_[i][j];
  return e;
}

Quiver Quiver::from_exchange_matrix(const ExchangeMatrix& b, const std::vector<int>& frozen) {
  Quiver q(b.n(), frozen);
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j) {
      if (b.b[i][j] != -b.b[j][i]) throw InvalidInput("exchange matrix must be skew-symmetric");
      if (b.b[i][j] > 0) q.mult_[j][i] = b.b[i][j];
    }
  return q;
}

Quiver Quiver::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  std::vector<int> fr;
  for (int a = 0; a < m; ++a)
    if (is_frozen(vertices[a])) fr.push_back(a + 1);
  Quiver q(m, fr);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.mult_[a][b] = mult_[vertices[a] - 1][vertices[b] - 1];
  return q;
}

Quiver Quiver::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidInput("relabeling has wrong size");
  std::vector<int> fr;
  for (int v = 1; v <= n_; ++v)
    if (frozen_[v - 1]) fr.push_back(perm[v - 1]);
  Quiver q(n_, fr);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q.mult_[perm[i] - 1][perm[j] - 1] = mult_[i][j];
  return q;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q.mult_[i][j] = mult_[j][i];
  return q;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, const std::vector<int>& frozen) {
  const int n = b.n();
  if (k < 1 || k > n) throw IndexOutOfRange("mutation index out of range");
  std::vector<bool> fr(n, false);
  for (int v : frozen) fr.at(v - 1) = true;
  ExchangeMatrix out = b;
  const int kk = k - 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        out.b[i][j] = -b.b[i][j];
      } else if (!(fr[i] && fr[j])) {
        const int bik = b.b[i][kk], bkj = b.b[kk][j];
        const int sgn = (bik > 0) - (bik < 0);
        out.b[i][j] = b.b[i][j] + sgn * std::max(bik * bkj, 0);
      }
    }
  return out;
}

namespace {

// Arrows relevant for isomorphism: everything except frozen-frozen pairs.
int relevant(const Quiver& q, int i, int j) {
  if (q.is_frozen(i) && q.is_frozen(j)) return 0;
  return q.arrows(i, j);
}

// Iterated colour refinement of mutable vertices; frozen vertices keep their
// own label as colour, so the refinement is invariant under allowed bijections.
std::vector<long> refine_colours(const Quiver& q, const std::vector<int>& mut) {
  const int n = q.n();
  std::vector<long> colour(n + 1, 0);
  for (int v = 1; v <= n; ++v) colour[v] = q.is_frozen(v) ? -v : 0;
  for (int round = 0; round < n + 1; ++round) {
    std::map<std::vector<long>, long> ids;
    std::vector<std::vector<long>> sig(n + 1);
    for (int v : mut) {
      std::vector<long> s{colour[v]};
      std::vector<std::pair<long, std::pair<int, int>>> nbrs;
      for (int u = 1; u <= n; ++u) {
        if (u == v) continue;
        int out = relevant(q, v, u), in = relevant(q, u, v);
        if (out || in) nbrs.push_back({colour[u], {out, in}});
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (auto& [c, oi] : nbrs) {
        s.push_back(c);
        s.push_back(oi.first);
        s.push_back(oi.second);
      }
      sig[v] = std::move(s);
      ids.emplace(sig[v], 0);
    }
    long next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<long> updated = colour;
    for (int v : mut) updated[v] = ids[sig[v]];
    bool same_partition = true;
    for (int a : mut)
      for (int b : mut)
        if ((colour[a] == colour[b]) != (updated[a] == updated[b])) same_partition = false;
    colour = std::move(updated);
    if (same_partition && round > 0) break;
  }
  return colour;
}

std::string encode(const Quiver& q, const std::vector<int>& order) {
  // order[p] = original vertex placed at position p (mutable ones first, then
  // frozen in label order).
  std::string s = std::to_string(q.n()) + "|";
  for (int v : q.frozen()) s += std::to_string(v) + ",";
  s += "|";
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b) {
      int m = relevant(q, order[a], order[b]);
      s += std::to_string(m);
      s += ' ';
    }
  return s;
}

}  // namespace

std::string canonical_key(const Quiver& q) {
  const auto mut = q.mutable_vertices();
  const auto fro = q.frozen();
  auto colour = refine_colours(q, mut);

  // Sort mutable vertices by colour, then permute within colour classes.
  std::vector<int> base = mut;
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < base.size();) {
    std::size_t j = i;
    while (j < base.size() && colour[base[j]] == colour[base[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  auto assemble = [&](const std::vector<int>& m) {
    std::vector<int> order = m;
    order.insert(order.end(), fro.begin(), fro.end());
    std::string key = encode(q, order);
    // Colour classes are isomorphism-invariant; including them keeps keys of
    // non-isomorphic quivers apart even on the heuristic path.
    key += "|";
    for (int v : m) key += std::to_string(colour[v]) + ",";
    return key;
  };
  if (mut.size() > 10) return assemble(base);

  std::string best;
  bool have = false;
  std::vector<int> cur = base;
  for (auto& [lo, hi] : cells) std::sort(cur.begin() + lo, cur.begin() + hi);
  // Odometer over the product of permutations of every cell.
  for (;;) {
    std::string key = assemble(cur);
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [lo, hi] = cells[c];
      if (std::next_permutation(cur.begin() + lo, cur.begin() + hi)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

std::optional<std::string> dynkin_type(const Quiver& q) {
  const auto mut = q.mutable_vertices();
  const int m = static_cast<int>(mut.size());
  if (m == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(m);
  int edges = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int e = q.arrows(mut[a], mut[b]) + q.arrows(mut[b], mut[a]);
      if (e > 1) return std::nullopt;
      if (e == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
    }
  if (edges != m - 1) return std::nullopt;
  std::vector<bool> seen(m, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != m) return std::nullopt;

  std::vector<int> branch;
  for (int v = 0; v < m; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return "A" + std::to_string(m);
  if (branch.size() > 1) return std::nullopt;

  const int centre = branch[0];
  std::vector<int> arms;
  for (int start : adj[centre]) {
    int len = 1, prev = centre, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(m);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(m);
  return std::nullopt;
}

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (int i = 1; i <= q.n(); ++i)
    for (int j = 1; j <= q.n(); ++j)
      if (q.arrows(i, j) > 0) arrows.push_back({i, j, q.arrows(i, j)});
  return {{"n", q.n()}, {"frozen", q.frozen()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<int> frozen = j.value("frozen", std::vector<int>{});
    Quiver q(n, frozen);
    for (const auto& a : j.value("arrows", nlohmann::json::array())) {
      if (!a.is_array() || a.size() < 2 || a.size() > 3)
        throw InvalidInput("arrow must be [src,dst] or [src,dst,multiplicity]");
      int m = a.size() == 3 ? a[2].get<int>() : 1;
      if (q.arrows(a[1].get<int>(), a[0].get<int>()) > 0)
        throw InvalidInput("quiver JSON contains a 2-cycle");
      q.add_arrows(a[0].get<int>(), a[1].get<int>(), m);
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed quiver JSON: ") + e.what());
  }
}

}  // namespace mwb
