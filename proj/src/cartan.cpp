#include "mwb/cartan.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace mwb {

namespace {

std::vector<std::vector<int>> identity2(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  return c;
}

void link(std::vector<std::vector<int>>& c, int i, int j, int m = 1) {
  c[i - 1][j - 1] = -m;
  c[j - 1][i - 1] = -m;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : c_(std::move(entries)) {
  const std::size_t n = c_.size();
  if (n == 0) throw InvalidInput("Cartan matrix must be nonempty");
  for (const auto& row : c_)
    if (row.size() != n) throw InvalidInput("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c_[i][j] != c_[j][i]) throw InvalidInput("Cartan matrix must be symmetric");
      if (c_[i][j] > 0) throw InvalidInput("off-diagonal Cartan entries must be <= 0");
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && c_[i][j] != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidInput("Cartan matrix graph must be connected");
}

CartanMatrix CartanMatrix::from_name(std::string_view name) {
  if (name == "affine-a1" || name == "A1~") return CartanMatrix({{2, -2}, {-2, 2}});
  if (name.size() < 2) throw InvalidInput("unknown Cartan type '" + std::string(name) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || n < 1)
    throw InvalidInput("unknown Cartan type '" + std::string(name) + "'");
  auto c = identity2(n);
  switch (name[0]) {
    case 'A':
      for (int i = 1; i < n; ++i) link(c, i, i + 1);
      break;
    case 'D':
      if (n < 4) throw InvalidInput("D_n needs n >= 4");
      for (int i = 1; i < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InvalidInput("E_n needs 6 <= n <= 8");
      // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(c, 1, 3);
      link(c, 2, 4);
      for (int i = 3; i < n; ++i) link(c, i, i + 1);
      break;
    default:
      throw InvalidInput("unknown Cartan type '" + std::string(name) + "'");
  }
  return CartanMatrix(std::move(c));
}

RootVector simple_root(const CartanMatrix& c, int i) {
  if (i < 1 || i > c.n()) throw IndexOutOfRange("simple root index out of range");
  RootVector v{std::vector<int>(c.n(), 0)};
  v.coords[i - 1] = 1;
  return v;
}

WeightVector fundamental_weight(const CartanMatrix& c, int i) {
  if (i < 1 || i > c.n()) throw IndexOutOfRange("weight index out of range");
  WeightVector v{std::vector<int>(c.n(), 0)};
  v.coords[i - 1] = 1;
  return v;
}

WeightVector to_weight(const CartanMatrix& c, const RootVector& v) {
  WeightVector w{std::vector<int>(c.n(), 0)};
  for (int j = 1; j <= c.n(); ++j)
    for (int k = 1; k <= c.n(); ++k) w.coords[j - 1] += v.coords[k - 1] * c(k, j);
  return w;
}

RootVector reflect(const CartanMatrix& c, int i, const RootVector& v) {
  if (i < 1 || i > c.n()) throw IndexOutOfRange("reflection index out of range");
  if (static_cast<int>(v.coords.size()) != c.n()) throw ArityMismatch("root vector size");
  int pairing = 0;
  for (int k = 1; k <= c.n(); ++k) pairing += v.coords[k - 1] * c(k, i);
  RootVector r = v;
  r.coords[i - 1] -= pairing;
  return r;
}

WeightVector reflect(const CartanMatrix& c, int i, const WeightVector& v) {
  if (i < 1 || i > c.n()) throw IndexOutOfRange("reflection index out of range");
  if (static_cast<int>(v.coords.size()) != c.n()) throw ArityMismatch("weight vector size");
  const int pairing = v.coords[i - 1];
  WeightVector r = v;
  for (int j = 1; j <= c.n(); ++j) r.coords[j - 1] -= pairing * c(i, j);
  return r;
}

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad letter '" + tok + "' in word");
    w.letters.push_back(v);
  }
  return w;
}

std::string format_word(const WeylWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

void check_letters(const CartanMatrix& c, const WeylWord& w) {
  for (int l : w.letters)
    if (l < 1 || l > c.n())
      throw IndexOutOfRange("letter " + std::to_string(l) + " out of range 1.." +
                            std::to_string(c.n()));
}

namespace {

std::vector<RootVector> betas(const CartanMatrix& c, const WeylWord& w) {
  check_letters(c, w);
  std::vector<RootVector> out;
  for (int k = 1; k <= w.length(); ++k) {
    RootVector b = simple_root(c, w[k]);
    for (int s = k - 1; s >= 1; --s) b = reflect(c, w[s], b);
    out.push_back(std::move(b));
  }
  return out;
}

bool positive(const RootVector& v) {
  bool nonzero = false;
  for (int x : v.coords) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

bool is_reduced(const CartanMatrix& c, const WeylWord& w) {
  auto bs = betas(c, w);
  std::set<RootVector> seen;
  for (const auto& b : bs)
    if (!positive(b) || !seen.insert(b).second) return false;
  return true;
}

std::vector<RootVector> inversion_roots(const CartanMatrix& c, const WeylWord& w) {
  if (!is_reduced(c, w)) throw NotReduced("word " + format_word(w) + " is not reduced");
  return betas(c, w);
}

std::vector<RootVector> gamma_weights(const CartanMatrix& c, const WeylWord& w) {
  if (!is_reduced(c, w)) throw NotReduced("word " + format_word(w) + " is not reduced");
  const int n = c.n();
  std::vector<RootVector> out;
  for (int k = 1; k <= w.length(); ++k) {
    // Track s(varpi_j) as varpi_j + beta with beta in the root lattice.
    const int j = w[k];
    std::vector<int> beta(n, 0);
    for (int s = k; s >= 1; --s) {
      const int i = w[s];
      int pairing = (i == j) ? 1 : 0;
      for (int m = 1; m <= n; ++m) pairing += beta[m - 1] * c(m, i);
      beta[i - 1] -= pairing;
    }
    for (int& x : beta) x = -x;
    out.push_back(RootVector{std::move(beta)});
  }
  return out;
}

std::vector<int> PositionTables::row(int j) const {
  std::vector<int> v;
  for (int k = 1; k <= r; ++k)
    if (letter[k] == j) v.push_back(k);
  return v;
}

PositionTables word_positions(int n, const WeylWord& w) {
  PositionTables p;
  p.r = w.length();
  p.n = n;
  const int r = p.r;
  p.letter.assign(r + 2, 0);
  for (int k = 1; k <= r; ++k) {
    if (w[k] < 1 || w[k] > n) throw IndexOutOfRange("letter out of range");
    p.letter[k] = w[k];
  }
  p.minus.assign(r + 2, 0);
  p.plus.assign(r + 2, r + 1);
  p.kmin.assign(r + 2, 0);
  p.kmax.assign(r + 2, 0);
  p.minus_j.assign(r + 2, std::vector<int>(n + 1, 0));
  p.plus_j.assign(r + 2, std::vector<int>(n + 1, r + 1));
  p.before.assign(r + 2, std::vector<int>(n + 1, 0));
  p.t.assign(n + 1, 0);

  for (int k = 1; k <= r + 1; ++k)
    for (int j = 1; j <= n; ++j) {
      if (k >= 2) {
        p.before[k][j] = p.before[k - 1][j] + (p.letter[k - 1] == j ? 1 : 0);
        p.minus_j[k][j] = p.letter[k - 1] == j ? k - 1 : p.minus_j[k - 1][j];
      }
    }
  for (int k = r; k >= 0; --k)
    for (int j = 1; j <= n; ++j)
      p.plus_j[k][j] = (k + 1 <= r && p.letter[k + 1] == j) ? k + 1 : p.plus_j[k + 1][j];
  for (int j = 1; j <= n; ++j) p.t[j] = p.before[r + 1][j];
  for (int k = 1; k <= r; ++k) {
    const int i = p.letter[k];
    p.minus[k] = p.minus_j[k][i];
    p.plus[k] = p.plus_j[k][i];
    auto row = p.row(i);
    p.kmin[k] = row.front();
    p.kmax[k] = row.back();
  }
  return p;
}

nlohmann::json to_json(const CartanMatrix& c) { return c.entries(); }

CartanMatrix cartan_from_json(const nlohmann::json& j) {
  if (j.is_string()) return CartanMatrix::from_name(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("cartan must be a name or a matrix");
  return CartanMatrix(j.get<std::vector<std::vector<int>>>());
}

}  // namespace mwb
