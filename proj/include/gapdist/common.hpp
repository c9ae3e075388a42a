#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapdist {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Raised when a requested precision (q-expansion length, quadrature depth)
/// cannot support the computation.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a floating-point stage fails its own consistency checks
/// (eigenvalue residuals, imaginary parts that should vanish, ...).
struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by cdf/quantile/sample when the truncated series dips below
/// the negativity tolerance and cannot be treated as a probability density.
struct NotAProbabilityDensity : std::runtime_error {
  explicit NotAProbabilityDensity(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a full Cartesian gap product would exceed the configured cap.
struct CapExceeded : std::invalid_argument {
  explicit CapExceeded(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Fractional part x - floor(x), result always in [0,1).
inline double frac(double x) {
  double f = x - std::floor(x);
  return (f >= 1.0) ? f - 1.0 : (f < 0.0 ? f + 1.0 : f);
}

/// e(t) = exp(2*pi*i*t) for a value already known to be a phase in turns.
inline std::complex<double> unit_phase(double turns) {
  const double a = kTwoPi * frac(turns);
  return {std::cos(a), std::sin(a)};
}

/// e(m*t) with the product m*t reduced mod 1 before scaling by 2*pi.
/// The fma recovers the rounding error of m*t so the phase is accurate
/// even for large |m*t|.
inline std::complex<double> unit_phase_scaled(long long m, double t) {
  const double md = static_cast<double>(m);
  const double p = md * t;
  const double err = std::fma(md, t, -p);
  const double a = kTwoPi * (frac(p) + err);
  return {std::cos(a), std::sin(a)};
}

namespace detail {
template <class F>
std::complex<double> pairwise_sum_impl(std::size_t lo, std::size_t hi, const F& f) {
  if (hi - lo <= 16) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum_impl(lo, mid, f) + pairwise_sum_impl(mid, hi, f);
}
}  // namespace detail

/// Pairwise (tree) reduction of f(0..n-1). The summation order is fixed,
/// so results do not depend on how callers might shard the work.
template <class F>
std::complex<double> pairwise_sum(std::size_t n, const F& f) {
  if (n == 0) return {0.0, 0.0};
  return detail::pairwise_sum_impl(0, n, f);
}

/// splitmix64 mix function.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based uniform stream: value i of the stream identified by `seed`.
/// Stateless, so draws may be evaluated in any order (or in parallel) and
/// still reproduce bit-identically.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t bits_at(std::uint64_t i) const {
    return splitmix64(seed + 0x632BE59BD9B4E019ULL * (i + 1));
  }
  /// Uniform double in [0,1).
  double u01_at(std::uint64_t i) const {
    return static_cast<double>(bits_at(i) >> 11) * 0x1.0p-53;
  }
  /// Uniform integer in [0, n).
  std::uint64_t index_at(std::uint64_t i, std::uint64_t n) const {
    return bits_at(i) % n;
  }
};

}  // namespace gapdist
