#include "gapdist/qexpansion.hpp"

#include <stdexcept>

namespace gapdist {
namespace qexp {

QExpansion mul(const QExpansion& f, const QExpansion& g, int n_max) {
  QExpansion r;
  r.n_max = n_max;
  r.weight = f.weight + g.weight;
  r.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  const int fn = std::min(f.n_max, n_max);
  for (int i = 0; i <= fn; ++i) {
    if (f.coeffs[i].is_zero()) continue;
    const int gn = std::min(g.n_max, n_max - i);
    for (int j = 0; j <= gn; ++j) {
      if (g.coeffs[j].is_zero()) continue;
      r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
  }
  return r;
}

QExpansion pow(const QExpansion& f, int e, int n_max) {
  QExpansion r;
  r.n_max = n_max;
  r.weight = 0;
  r.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  r.coeffs[0] = BigInt(1);
  QExpansion base = f;
  while (e != 0) {
    if (e & 1) r = mul(r, base, n_max);
    e >>= 1;
    if (e != 0) base = mul(base, base, n_max);
  }
  return r;
}

QExpansion eta_product(int n_max) {
  QExpansion r;
  r.n_max = n_max;
  r.weight = 0;
  r.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  // prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
  for (long long k = 0;; ++k) {
    long long e1 = k * (3 * k - 1) / 2;
    long long e2 = k * (3 * k + 1) / 2;
    if (e1 > n_max && e2 > n_max) break;
    const BigInt s((k % 2 == 0) ? 1 : -1);
    if (e1 <= n_max) r.coeffs[e1] += s;
    if (k > 0 && e2 <= n_max) r.coeffs[e2] += s;
  }
  return r;
}

QExpansion delta(int n_max) {
  if (n_max < 1) throw std::invalid_argument("qexp::delta: n_max must be >= 1");
  QExpansion eta24 = pow(eta_product(n_max), 24, n_max);
  QExpansion r;
  r.n_max = n_max;
  r.weight = 12;
  r.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (int n = 1; n <= n_max; ++n) r.coeffs[n] = eta24.coeffs[n - 1];
  return r;
}

QExpansion eisenstein(int weight, int n_max) {
  if (weight != 4 && weight != 6) {
    throw std::invalid_argument("qexp::eisenstein: weight must be 4 or 6");
  }
  const int k = weight - 1;
  const long long scale = (weight == 4) ? 240 : -504;
  QExpansion r;
  r.n_max = n_max;
  r.weight = weight;
  r.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  r.coeffs[0] = BigInt(1);
  // sigma_k via the divisor-to-multiple sieve; values stay within int64
  // for the sizes used here (n_max a few hundred).
  std::vector<long long> sigma(static_cast<std::size_t>(n_max) + 1, 0);
  for (long long d = 1; d <= n_max; ++d) {
    long long dk = 1;
    for (int i = 0; i < k; ++i) dk *= d;
    for (long long n = d; n <= n_max; n += d) sigma[n] += dk;
  }
  for (int n = 1; n <= n_max; ++n) r.coeffs[n] = BigInt(scale * sigma[n]);
  return r;
}

}  // namespace qexp
}  // namespace gapdist
