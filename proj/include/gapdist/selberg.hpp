#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace gapdist {

/// Finite Fourier expansion sum_{|m| <= M} coeffs[m] e(m x).
struct TrigPolynomial {
  int degree = 0;
  Eigen::ArrayXcd coeffs;  // index m + degree, size 2*degree + 1

  std::complex<double> coeff(int m) const {
    return (m < -degree || m > degree) ? std::complex<double>{0.0, 0.0}
                                       : coeffs[m + degree];
  }
  double eval(double x) const;
};

namespace selberg {

/// Fejer kernel of order M (degree M-1):
///   sum_{|n|<M} (1 - |n|/M) e(nx) = (1/M) (sin(pi M x)/sin(pi x))^2,
/// with the removable singularity at integer x evaluated as M.
double fejer(int m_order, double x);

/// M-th order Beurling polynomial, the trigonometric majorant of the
/// sawtooth frac(x) - 1/2 of degree <= M+1 (its top harmonic cancels, so
/// the effective degree is M). Built from the Vaaler interpolation formula
/// plus the Fejer correction term.
double beurling(int m_order, double x);

/// Selberg majorant of the indicator of [a,b]:
///   S+(x) = b - a + B*(x - b) + B*(a - x).
double selberg_plus(int m_order, double a, double b, double x);

/// Selberg minorant: S-(x) = b - a - B*(b - x) - B*(x - a).
/// (The sign pattern is the one that actually minorizes; see the tests.)
double selberg_minus(int m_order, double a, double b, double x);

/// Fourier coefficient of S+- for [a,b] at index m, computed by the 2^14
/// point quadrature of the evaluator. `sign` is +1 or -1. Indices beyond
/// the polynomial degree return 0 and set *beyond_degree when provided.
std::complex<double> selberg_coeff(int m_order, double a, double b, int m, int sign,
                                   bool* beyond_degree = nullptr);

/// All coefficients 0..max_m of S+- from one shared quadrature grid pass
/// (same rule as selberg_coeff, amortized).
std::vector<std::complex<double>> selberg_coeff_batch(int m_order, double a, double b,
                                                      int max_m, int sign);

/// Exact Fourier coefficient of the indicator of [a,b]:
///   b - a at m = 0, otherwise (e(-m a) - e(-m b)) / (2 pi i m).
std::complex<double> chi_hat(double a, double b, int m);

/// Fejer kernel as a TrigPolynomial (exact coefficients).
TrigPolynomial fejer_poly(int m_order);

/// S+- for [a,b] as a TrigPolynomial with coefficients through M+1,
/// obtained by quadrature.
TrigPolynomial selberg_poly(int m_order, double a, double b, int sign);

}  // namespace selberg
}  // namespace gapdist
