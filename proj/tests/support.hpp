#pragma once

#include <array>
#include <functional>
#include <random>
#include <vector>

#include "mwb/algebra.hpp"

namespace mwb::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

// Small random Laurent polynomial; exponents in [lo, hi], coefficients in [-5, 5].
inline LaurentPoly random_poly(std::size_t arity, int terms, int lo = -2, int hi = 3) {
  LaurentPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(arity);
    for (auto& x : e) x = uniform(lo, hi);
    p.add_term(Monomial(e), uniform(-5, 5));
  }
  return p;
}

inline LaurentPoly x(std::size_t arity, std::size_t i) { return LaurentPoly::variable(arity, i - 1); }
inline LaurentPoly c(std::size_t arity, long v) { return LaurentPoly::constant(arity, v); }

}  // namespace mwb::testing

#include "mwb/cartan.hpp"

namespace mwb::testing {

// Grows a word letter by letter, keeping only extensions that stay reduced.
inline WeylWord random_reduced_word(const CartanMatrix& c, int max_len) {
  WeylWord w;
  int attempts = 0;
  while (w.length() < max_len && attempts < 50) {
    WeylWord next = w;
    next.letters.push_back(uniform(1, c.n()));
    if (is_reduced(c, next)) {
      w = std::move(next);
      attempts = 0;
    } else {
      ++attempts;
    }
  }
  return w;
}

}  // namespace mwb::testing

#include "mwb/quiver.hpp"

namespace mwb::testing {

inline Quiver random_quiver(int n, int max_mult, int n_frozen) {
  std::vector<int> frozen;
  for (int v = n - n_frozen + 1; v <= n; ++v) frozen.push_back(v);
  Quiver q(n, frozen);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int m = uniform(-max_mult, max_mult);
      if (uniform(0, 2) == 0) m = 0;
      if (m > 0) q.add_arrows(i, j, m);
      if (m < 0) q.add_arrows(j, i, -m);
    }
  return q;
}

inline Quiver quiver_of(int n, std::vector<int> frozen, std::vector<std::array<int, 3>> arrows) {
  Quiver q(n, frozen);
  for (auto [s, t, m] : arrows) q.add_arrows(s, t, m);
  return q;
}

}  // namespace mwb::testing
