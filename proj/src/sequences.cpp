#include "gapdist/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gapdist/common.hpp"

namespace gapdist::seq {

namespace {

// Exact fractional parts of n * alpha for the double alpha = mant * 2^-shift.
struct ExactAlpha {
  __int128 mant = 0;  // signed 53-bit mantissa scaled to an integer
  int shift = 0;      // frac(n*alpha) = (n*mant mod 2^shift) / 2^shift
  bool usable = false;

  explicit ExactAlpha(double alpha) {
    int e = 0;
    const double f = std::frexp(alpha, &e);  // alpha = f * 2^e, |f| in [0.5,1)
    const double scaled = std::ldexp(f, 53);
    mant = static_cast<__int128>(static_cast<long long>(scaled));
    shift = 53 - e;
    usable = shift >= 1 && shift <= 120;
  }

  double frac_times(std::int64_t n) const {
    const __int128 mod = static_cast<__int128>(1) << shift;
    __int128 r = (static_cast<__int128>(n) * mant) % mod;
    if (r < 0) r += mod;
    const double hi = static_cast<double>(static_cast<long long>(r >> 64));
    const double lo = static_cast<double>(static_cast<unsigned long long>(r));
    double v = std::ldexp(hi * 18446744073709551616.0 + lo, -shift);
    if (v >= 1.0) v = std::nextafter(1.0, 0.0);  // r within one ulp of 2^shift
    return v;
  }
};

}  // namespace

AngleMultiset kronecker_multiset(double alpha, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker_multiset: N must be >= 1");
  if (!std::isfinite(alpha)) throw std::invalid_argument("kronecker_multiset: alpha not finite");
  const ExactAlpha ea(alpha);
  Eigen::ArrayXd vals(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    // shift out of range means n*alpha is far below 1 (or an exact integer);
    // plain double evaluation is then already exact to well under the gap
    // tolerance.
    vals[i - 1] = (ea.usable && alpha != 0.0) ? ea.frac_times(i)
                                              : frac(static_cast<double>(i) * alpha);
  }
  AngleMultiset a;
  a.values = std::move(vals);
  a.symmetrized = false;
  a.source = "kronecker(alpha=" + std::to_string(alpha) + ",N=" + std::to_string(n) + ")";
  return a;
}

GapSpectrum gap_spectrum(const AngleMultiset& a) {
  if (a.size() == 0) throw std::invalid_argument("gap_spectrum: empty multiset");
  GapSpectrum g;
  g.sorted_points.assign(a.values.data(), a.values.data() + a.size());
  std::sort(g.sorted_points.begin(), g.sorted_points.end());
  const std::size_t n = g.sorted_points.size();
  g.gaps.resize(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.gaps[i] = g.sorted_points[i + 1] - g.sorted_points[i];
  }
  g.gaps[n - 1] = 1.0 + g.sorted_points[0] - g.sorted_points[n - 1];

  std::vector<double> sorted_gaps = g.gaps;
  std::sort(sorted_gaps.begin(), sorted_gaps.end());
  for (double v : sorted_gaps) {
    if (g.distinct_gaps.empty() || v - g.distinct_gaps.back() > kGapTolerance) {
      g.distinct_gaps.push_back(v);
    }
  }
  g.count = static_cast<int>(g.distinct_gaps.size());
  return g;
}

SubsetGapReport subset_gap_bound_check(const AngleMultiset& a, std::uint64_t subset_seed,
                                       int trials) {
  if (a.size() < 2) throw std::invalid_argument("subset_gap_bound_check: need >= 2 values");
  if (trials < 1) throw std::invalid_argument("subset_gap_bound_check: trials must be >= 1");
  const CounterRng rng{subset_seed};
  SubsetGapReport rep;
  rep.trials = trials;
  const auto n = static_cast<std::uint64_t>(a.size());
  for (int t = 0; t < trials; ++t) {
    std::vector<double> subset;
    for (std::uint64_t j = 0; j < n; ++j) {
      if (rng.bits_at(static_cast<std::uint64_t>(t) * n + j) & 1u) {
        subset.push_back(a.values[static_cast<Eigen::Index>(j)]);
      }
    }
    if (subset.size() < 2) continue;
    ++rep.effective_trials;
    AngleMultiset sub;
    sub.values = Eigen::Map<const Eigen::ArrayXd>(subset.data(),
                                                  static_cast<Eigen::Index>(subset.size()));
    const GapSpectrum gs = gap_spectrum(sub);
    const double bound = 2.0 * std::sqrt(2.0 * static_cast<double>(subset.size())) + 1.0;
    const double ratio = static_cast<double>(gs.count) / bound;
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.worst_subset_size = static_cast<int>(subset.size());
      rep.worst_count = gs.count;
    }
    if (gs.count > bound) rep.all_within = false;
  }
  return rep;
}

bool looks_rational(double alpha, std::int64_t max_denominator) {
  // Continued-fraction walk on the double value; stop when the remainder is
  // below resolution or the convergent denominator outgrows the data.
  double x = std::abs(alpha);
  std::int64_t q_prev = 0, q = 1;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(x);
    const double r = x - fl;
    if (r < 1e-12) return q <= max_denominator;
    const double a_next = 1.0 / r;
    if (a_next * static_cast<double>(q) > 4.0e18) return false;
    const auto an = static_cast<std::int64_t>(std::floor(a_next));
    const std::int64_t q_next = an * q + q_prev;
    if (q_next > max_denominator) return false;
    q_prev = q;
    q = q_next;
    x = a_next;
  }
  return false;
}

}  // namespace gapdist::seq
