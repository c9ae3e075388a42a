#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gapdist/angle_multiset.hpp"
#include "gapdist/fourier_density.hpp"

namespace gapdist {

/// Both sides of the effective gap-equidistribution bound for one interval,
/// with the per-m decomposition of the right-hand side.
struct DiscrepancyReport {
  Interval interval;
  double empirical = 0.0;  // fraction of gap tuples landing in the interval
  double target = 0.0;     // integral of the convolved target over the interval
  double lhs = 0.0;        // |empirical - target|
  int m_order = 0;         // M
  std::vector<double> bound_terms;  // term for |m| = 1..M (both signs folded in)
  double rhs = 0.0;                 // 1/(M+1) + sum of bound_terms
  bool satisfied = false;           // lhs <= rhs + 1e-12
};

namespace discrepancy {

/// Integral of mu over [alpha, beta] through the analytic antiderivative of
/// its Fourier series.
double target_measure(const FourierDensity& mu, const Interval& i);

/// Evaluates the effective bound for the all-plus gap family of `as`
/// against the convolution of `targets`. The full Cartesian product must
/// fit under `cap` (CapExceeded otherwise; subsampled families carry no
/// guarantee and are handled by the caller via gap_family directly).
/// Sign choices other than + are expressed by negating the corresponding
/// input multiset beforehand.
DiscrepancyReport erdos_turan_bound(std::span<const AngleMultiset> as,
                                    std::span<const FourierDensity> targets,
                                    const Interval& i, int m_order,
                                    std::int64_t cap = 1 << 20);

/// M = max(1, floor(c * log_family_size / log_q)).
int choose_m(double log_family_size, double log_q, double c);

/// max over j = 1..grid_n of |empirical([0, j/grid_n]) - mu([0, j/grid_n])|.
double star_discrepancy(const AngleMultiset& a, const FourierDensity& mu, int grid_n);

}  // namespace discrepancy
}  // namespace gapdist
