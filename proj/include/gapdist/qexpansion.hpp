#pragma once

#include <vector>

#include "gapdist/bigint.hpp"

namespace gapdist {

/// Truncated q-expansion with exact integer coefficients a(0..n_max).
struct QExpansion {
  std::vector<BigInt> coeffs;  // coeffs[n] = a(n), size n_max + 1
  int n_max = 0;
  int weight = 0;

  const BigInt& a(int n) const { return coeffs[static_cast<std::size_t>(n)]; }
};

namespace qexp {

/// Product of two expansions, truncated to n_max.
QExpansion mul(const QExpansion& f, const QExpansion& g, int n_max);

/// f^e truncated to n_max (e >= 0).
QExpansion pow(const QExpansion& f, int e, int n_max);

/// Delta = q * prod_{n>=1} (1-q^n)^24, exact to n_max. a(1) = 1.
QExpansion delta(int n_max);

/// Normalized Eisenstein series, weight 4 or 6:
///   E4 = 1 + 240 sum sigma_3(n) q^n,   E6 = 1 - 504 sum sigma_5(n) q^n.
QExpansion eisenstein(int weight, int n_max);

/// Dedekind eta product prod_{n>=1} (1-q^n) via the pentagonal number
/// theorem, to n_max.
QExpansion eta_product(int n_max);

}  // namespace qexp
}  // namespace gapdist
