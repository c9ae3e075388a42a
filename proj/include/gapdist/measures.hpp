#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

#include "gapdist/angle_multiset.hpp"
#include "gapdist/fourier_density.hpp"

namespace gapdist::measures {

/// Uniform probability density (c_0 = 1, everything else zero). m_max only
/// widens the stored zero band, which is convenient when convolving.
FourierDensity uniform_density(int m_max = 0);

/// Sato-Tate measure transported to the angle coordinate and symmetrized:
/// density 1 - cos(4*pi*x), i.e. c_0 = 1, c_{+-2} = -1/2.
FourierDensity sato_tate_density(int m_max);

/// Vertical Sato-Tate density for a prime power q > 1:
///   c_0 = 1, c_m = (1/2)(q^{-|m|/2} - q^{-(|m|-2)/2}) for even m != 0,
///   c_m = 0 for odd m,
/// with the closed form 4(q+1) sin^2(2 pi x) / ((q^{1/2}+q^{-1/2})^2
/// - 4 cos^2(2 pi x)) rescaled to unit mass (the scale is fixed by
/// quadrature at construction; the raw form integrates to 2).
FourierDensity vertical_sato_tate_density(double q, int m_max);

/// Density value at x (1-periodic). Uses the closed form when present,
/// otherwise the truncated Fourier sum.
double eval_density(const FourierDensity& d, double x);

/// Truncated Fourier sum at x, ignoring any closed form.
double eval_series(const FourierDensity& d, double x);

/// Convolution on the circle: coefficientwise product, m_max = min of the
/// inputs. No closed form is attached to the result (see notes on the
/// pair-correlation formula in pair_correlation_closed_form).
FourierDensity convolve(std::span<const FourierDensity> ds);
FourierDensity convolve(const FourierDensity& a, const FourierDensity& b);

/// The printed pair-correlation expression
///   [2(1+cos 4 pi x)(1 - 1/p^2) + (4/p)(1/p^2 - cos 4 pi x)]
///   / [1 + 1/p^4 - (2/p^2) cos 4 pi x]
/// evaluated verbatim (unnormalized; it integrates to 2 over a period).
double pair_correlation_closed_form(double p, double x);

/// Cumulative distribution of the truncated series from -1/2 to x,
/// x in [-1/2, 1/2]. Requires the series to be nonnegative on the check
/// grid (throws NotAProbabilityDensity otherwise).
double cdf(const FourierDensity& d, double x);

/// Inverse cdf by monotone bisection to 1e-12; u in [0,1].
double quantile(const FourierDensity& d, double u);

/// n inverse-transform samples of d mapped to [0,1), fully reproducible
/// given (n, seed): sample i uses value i of the seeded counter stream.
AngleMultiset sample(const FourierDensity& d, std::int64_t n, std::uint64_t seed);

/// int_0^1 f(x) e(-m x) dx by the composite midpoint rule on 2^14 points
/// (spectrally accurate for smooth periodic f). Real part only; see the
/// complex variant for general integrands.
double numeric_fourier_coeff(const std::function<double(double)>& f, int m);
std::complex<double> numeric_fourier_coeff_complex(
    const std::function<double(double)>& f, int m);

/// Number of quadrature points used by numeric_fourier_coeff and the
/// density nonnegativity check grid size.
inline constexpr int kQuadraturePoints = 1 << 14;
inline constexpr int kDensityCheckGrid = 4096;
inline constexpr double kNegativityTol = -1e-9;

}  // namespace gapdist::measures
