#include "gapdist/selberg.hpp"

#include <cmath>
#include <stdexcept>

#include "gapdist/common.hpp"
#include "gapdist/measures.hpp"

namespace gapdist {

double TrigPolynomial::eval(double x) const {
  std::complex<double> s{0.0, 0.0};
  for (int m = -degree; m <= degree; ++m) {
    s += coeff(m) * unit_phase_scaled(m, x);
  }
  return s.real();
}

namespace selberg {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double fejer(int m_order, double x) {
  if (m_order < 1) throw std::invalid_argument("fejer: M must be >= 1");
  const double md = static_cast<double>(m_order);
  const double r = x - std::round(x);  // both sines are |.|-periodic mod 1 here
  if (std::abs(r) < 1e-7) {
    // sin(pi M r)/sin(pi r) -> M, expanded to second order for stability.
    const double pr = kPi * r;
    const double ratio = md * (1.0 - pr * pr * (md * md - 1.0) / 6.0);
    return ratio * ratio / md;
  }
  const double num = std::sin(kPi * md * r);
  const double den = std::sin(kPi * r);
  return num * num / (den * den * md);
}

double beurling(int m_order, double x) {
  if (m_order < 1) throw std::invalid_argument("beurling: M must be >= 1");
  const double m1 = static_cast<double>(m_order) + 1.0;
  double s = 0.0;
  for (int n = 1; n <= m_order; ++n) {
    s += (n / m1 - 0.5) * fejer(m_order + 1, x - n / m1);
  }
  s /= m1;
  s += std::sin(kTwoPi * m1 * x) / (kTwoPi * m1);
  const double fej = fejer(m_order + 1, x);
  s -= fej * std::sin(kTwoPi * x) / kTwoPi;
  s += fej / (2.0 * m1);
  return s;
}

double selberg_plus(int m_order, double a, double b, double x) {
  if (a > b) throw std::invalid_argument("selberg_plus: need a <= b");
  return b - a + beurling(m_order, x - b) + beurling(m_order, a - x);
}

double selberg_minus(int m_order, double a, double b, double x) {
  if (a > b) throw std::invalid_argument("selberg_minus: need a <= b");
  return b - a - beurling(m_order, b - x) - beurling(m_order, x - a);
}

namespace {

std::vector<std::complex<double>> coeffs_from_grid(const std::vector<double>& samples,
                                                   int max_m) {
  const int n = static_cast<int>(samples.size());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) {
    out[m] = pairwise_sum(samples.size(), [&](std::size_t j) {
               const double x = (static_cast<double>(j) + 0.5) / n;
               return samples[j] * unit_phase_scaled(-m, x);
             }) /
             static_cast<double>(n);
  }
  return out;
}

std::vector<double> sample_selberg(int m_order, double a, double b, int sign) {
  const int n = measures::kQuadraturePoints;
  std::vector<double> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double x = (j + 0.5) / static_cast<double>(n);
    samples[j] = sign > 0 ? selberg_plus(m_order, a, b, x)
                          : selberg_minus(m_order, a, b, x);
  }
  return samples;
}

}  // namespace

std::vector<std::complex<double>> selberg_coeff_batch(int m_order, double a, double b,
                                                      int max_m, int sign) {
  if (m_order < 1) throw std::invalid_argument("selberg_coeff_batch: M must be >= 1");
  if (a > b) throw std::invalid_argument("selberg_coeff_batch: need a <= b");
  return coeffs_from_grid(sample_selberg(m_order, a, b, sign), max_m);
}

std::complex<double> selberg_coeff(int m_order, double a, double b, int m, int sign,
                                   bool* beyond_degree) {
  if (beyond_degree) *beyond_degree = false;
  if (std::abs(m) > m_order + 1) {
    if (beyond_degree) *beyond_degree = true;
    return {0.0, 0.0};
  }
  auto f = [&](double x) {
    return sign > 0 ? selberg_plus(m_order, a, b, x) : selberg_minus(m_order, a, b, x);
  };
  return measures::numeric_fourier_coeff_complex(f, m);
}

std::complex<double> chi_hat(double a, double b, int m) {
  if (m == 0) return {b - a, 0.0};
  const std::complex<double> diff = unit_phase_scaled(-m, a) - unit_phase_scaled(-m, b);
  return diff / std::complex<double>(0.0, kTwoPi * m);
}

TrigPolynomial fejer_poly(int m_order) {
  if (m_order < 1) throw std::invalid_argument("fejer_poly: M must be >= 1");
  TrigPolynomial p;
  p.degree = m_order - 1;
  p.coeffs = Eigen::ArrayXcd::Zero(2 * p.degree + 1);
  for (int n = -p.degree; n <= p.degree; ++n) {
    p.coeffs[n + p.degree] = 1.0 - std::abs(n) / static_cast<double>(m_order);
  }
  return p;
}

TrigPolynomial selberg_poly(int m_order, double a, double b, int sign) {
  TrigPolynomial p;
  p.degree = m_order + 1;
  p.coeffs = Eigen::ArrayXcd::Zero(2 * p.degree + 1);
  const auto coeffs = selberg_coeff_batch(m_order, a, b, p.degree, sign);
  for (int m = 0; m <= p.degree; ++m) {
    p.coeffs[p.degree + m] = coeffs[m];
    p.coeffs[p.degree - m] = std::conj(coeffs[m]);
  }
  return p;
}

}  // namespace selberg
}  // namespace gapdist
