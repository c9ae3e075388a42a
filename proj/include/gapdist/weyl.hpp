#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gapdist/angle_multiset.hpp"
#include "gapdist/fourier_density.hpp"

namespace gapdist {

/// The +-1 choices attached to the r factors of a gap family.
struct SignPattern {
  std::vector<int> signs;

  explicit SignPattern(std::vector<int> s);
  static SignPattern all_plus(int r);
  /// Parse from a string like "+-+".
  static SignPattern parse(const std::string& s);
  int size() const { return static_cast<int>(signs.size()); }
};

/// Sparse coefficient map m -> c_m. Lookups of absent indices are an error,
/// which keeps truncation decisions explicit at call sites.
using CoeffMap = std::map<int, std::complex<double>>;

namespace weyl {

/// Unnormalized Weyl sum S_A(m) = sum_{t in A} e(m t).
std::complex<double> weyl_sum(const AngleMultiset& a, int m);

/// S_A(m) / #A. Throws on an empty multiset.
std::complex<double> empirical_weyl_limit(const AngleMultiset& a, int m);

/// Union of A and its negation mod 1; doubles the size and marks the result
/// symmetrized. Fixed points of t -> -t are kept with multiplicity.
AngleMultiset symmetrize(const AngleMultiset& a);

/// Multiset { frac(sum_j s_j x_j) } over the Cartesian product of the
/// factors, in lexicographic product order (first factor slowest). When the
/// product size exceeds `cap`, `cap` tuples are drawn uniformly with
/// replacement from the seeded counter stream instead.
AngleMultiset gap_family(std::span<const AngleMultiset> as, const SignPattern& signs,
                         std::int64_t cap, std::uint64_t seed);

/// Product law for Weyl limits: C_m = prod_j c_m^{(j)}. A factor map that
/// does not define index m is an error.
std::complex<double> product_limit(std::span<const CoeffMap> cs, int m);

/// Coefficient map view of a density (all |m| <= m_max present).
CoeffMap coeff_map(const FourierDensity& d);

/// Empirical coefficient map of a multiset for |m| <= m_max.
CoeffMap empirical_coeff_map(const AngleMultiset& a, int m_max);

/// Cesaro square-mean (1/V) sum_{m=1..V} |c_m|^2. All of 1..V must be
/// present in the map.
double wiener_schoenberg_statistic(const CoeffMap& c, int v);
double wiener_schoenberg_statistic(const FourierDensity& d, int v);

/// (# of t in A with alpha <= t <= beta) / #A, endpoints inclusive.
double empirical_interval_measure(const AngleMultiset& a, const Interval& i);

}  // namespace weyl
}  // namespace gapdist
