#pragma once

#include <cstdint>
#include <vector>

#include "gapdist/angle_multiset.hpp"

namespace gapdist {

/// Sorted presentation of a multiset with its circular gap structure:
/// consecutive differences plus the wraparound gap back to 1 + x_1.
struct GapSpectrum {
  std::vector<double> sorted_points;
  std::vector<double> gaps;           // size = #points, last is the wraparound
  std::vector<double> distinct_gaps;  // deduplicated under tolerance 1e-12
  int count = 0;                      // = distinct_gaps.size()
};

/// Outcome of the random-subset gap-count experiment.
struct SubsetGapReport {
  int trials = 0;
  int effective_trials = 0;  // trials that drew at least 2 elements
  double max_ratio = 0.0;    // worst observed count / bound
  int worst_subset_size = 0;
  int worst_count = 0;
  bool all_within = true;
};

namespace seq {

/// { frac(alpha n) : 1 <= n <= N } in n-order. alpha is taken at its exact
/// double value and the fractional parts are computed exactly in 128-bit
/// integer arithmetic, so equal gaps stay equal to within one rounding.
AngleMultiset kronecker_multiset(double alpha, std::int64_t n);

/// Sorts, appends the wraparound gap and deduplicates gap lengths under the
/// 1e-12 tolerance.
GapSpectrum gap_spectrum(const AngleMultiset& a);

/// Per trial, draws a random subset (each element kept with probability
/// 1/2), computes its distinct-gap count and compares against
/// 2 sqrt(2 * subset_size) + 1.
SubsetGapReport subset_gap_bound_check(const AngleMultiset& a, std::uint64_t subset_seed,
                                       int trials);

/// True when alpha is indistinguishable from a rational with denominator
/// <= max_denominator (continued-fraction expansion terminates early).
bool looks_rational(double alpha, std::int64_t max_denominator);

inline constexpr double kGapTolerance = 1e-12;

}  // namespace seq
}  // namespace gapdist
