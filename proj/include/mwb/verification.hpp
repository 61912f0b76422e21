#pragma once

// Identity checks for the affine sl2 example w = s2 s1 s2 s1: the phi catalog,
// exchange relations, N'(w)-invariance and the Chamber Ansatz.

#include <optional>
#include <string>
#include <vector>

#include "mwb/algebra.hpp"
#include "mwb/cartan.hpp"
#include "mwb/report.hpp"

namespace mwb {

/// The phi functions of w = s2 s1 s2 s1 over the ring b0..b3, d1..d3.
struct PhiEntry {
  std::string name;     // "V1", "M3", "W1", ...
  LaurentPoly nw;       // on N(w): polynomial in b0..b3
  std::optional<LaurentPoly> nplus;  // on N_+: in b_k and d_k
};

struct PhiCatalog {
  Ring ring;  // b0 b1 b2 b3 d1 d2 d3
  std::vector<PhiEntry> entries;
  const PhiEntry& at(const std::string& name) const;
};

/// V1..V4, M1..M4 from their closed forms; W1, W2 obtained by mutating the
/// initial seed at 2 then 1 (W3 = V3, W4 = V4).
PhiCatalog phi_catalog();

Report verify_eqnotCA();
Report verify_phi_identities();
Report verify_nprime_invariance(int truncation = 8);
Report chamber_ansatz();

/// Exponent vectors of phi'_{V_k} over the phi_{W} basis, for the
/// affine word, with the projective cover data P(V1) = V3^3, P(V2) = V3^2.
std::vector<std::vector<int>> phi_prime_exponents();
/// Exponent vectors of C_1..C_r over phi_W from phi' exponents and the word.
std::vector<std::vector<int>> chamber_exponents(const CartanMatrix& c, const WeylWord& w,
                                                const std::vector<std::vector<int>>& phi_prime);

}  // namespace mwb
