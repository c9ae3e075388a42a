#include "gapdist/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gapdist/common.hpp"
#include "gapdist/measures.hpp"
#include "gapdist/weyl.hpp"

namespace gapdist::discrepancy {

double target_measure(const FourierDensity& mu, const Interval& i) {
  double s = mu.coeffs[0] * i.length();
  for (int m = 1; m <= mu.m_max(); ++m) {
    if (mu.coeffs[m] == 0.0) continue;
    const double pm = 0.5 * kTwoPi * m;  // pi m
    s += mu.coeffs[m] / pm * (std::sin(kTwoPi * m * i.beta) - std::sin(kTwoPi * m * i.alpha));
  }
  return s;
}

DiscrepancyReport erdos_turan_bound(std::span<const AngleMultiset> as,
                                    std::span<const FourierDensity> targets,
                                    const Interval& i, int m_order, std::int64_t cap) {
  const int r = static_cast<int>(as.size());
  if (r < 1) throw std::invalid_argument("erdos_turan_bound: need at least one family");
  if (static_cast<int>(targets.size()) != r) {
    throw std::invalid_argument("erdos_turan_bound: family/target count mismatch");
  }
  if (m_order < 1) throw std::invalid_argument("erdos_turan_bound: M must be >= 1");
  double prod_sizes = 1.0;
  for (const auto& a : as) {
    if (a.size() == 0) throw std::invalid_argument("erdos_turan_bound: empty family");
    prod_sizes *= static_cast<double>(a.size());
  }
  if (prod_sizes > static_cast<double>(cap)) {
    throw CapExceeded(
        "erdos_turan_bound: full product exceeds cap; use gap_family's seeded "
        "Monte-Carlo mode (no bound guarantee) instead");
  }

  const auto gaps = weyl::gap_family(as, SignPattern::all_plus(r), cap, /*seed=*/0);
  const FourierDensity mu = measures::convolve(targets);

  DiscrepancyReport rep;
  rep.interval = i;
  rep.m_order = m_order;
  rep.empirical = weyl::empirical_interval_measure(gaps, i);
  rep.target = target_measure(mu, i);
  rep.lhs = std::abs(rep.empirical - rep.target);

  const double m1 = static_cast<double>(m_order) + 1.0;
  rep.bound_terms.resize(static_cast<std::size_t>(m_order));
  rep.rhs = 1.0 / m1;
  for (int m = 1; m <= m_order; ++m) {
    std::complex<double> sum_prod{1.0, 0.0};
    double coeff_prod = 1.0;
    for (int j = 0; j < r; ++j) {
      sum_prod *= weyl::weyl_sum(as[j], m);
      coeff_prod *= targets[j].coeff(m);
    }
    const double deviation = std::abs(sum_prod - prod_sizes * coeff_prod) / prod_sizes;
    const double weight = 1.0 / m1 + std::min(i.length(), 1.0 / (0.5 * kTwoPi * m));
    // The -m term equals the +m term by conjugate symmetry, hence the 2.
    const double term = 2.0 * weight * deviation;
    rep.bound_terms[static_cast<std::size_t>(m - 1)] = term;
    rep.rhs += term;
  }
  rep.satisfied = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

int choose_m(double log_family_size, double log_q, double c) {
  if (!(log_family_size > 0.0)) {
    throw std::invalid_argument("choose_m: log_family_size must be > 0");
  }
  if (!(log_q > 0.0)) throw std::invalid_argument("choose_m: log_q must be > 0");
  if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("choose_m: need 0 < c <= 1");
  return std::max(1, static_cast<int>(std::floor(c * log_family_size / log_q)));
}

double star_discrepancy(const AngleMultiset& a, const FourierDensity& mu, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("star_discrepancy: grid_n must be >= 2");
  if (a.size() == 0) throw std::invalid_argument("star_discrepancy: empty multiset");
  std::vector<double> sorted(a.values.data(), a.values.data() + a.size());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (int j = 1; j <= grid_n; ++j) {
    const double edge = static_cast<double>(j) / grid_n;
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), edge) - sorted.begin();
    const double emp = static_cast<double>(count) / n;
    const double tgt = target_measure(mu, Interval(0.0, std::min(edge, 1.0)));
    worst = std::max(worst, std::abs(emp - tgt));
  }
  return worst;
}

}  // namespace gapdist::discrepancy
