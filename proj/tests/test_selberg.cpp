#include <doctest.h>

#include <cmath>

#include "gapdist/common.hpp"
#include "gapdist/measures.hpp"
#include "gapdist/selberg.hpp"

using namespace gapdist;

TEST_CASE("fejer kernel") {
  for (int m : {1, 2, 5, 9}) {
    CHECK(selberg::fejer(m, 0.0) == doctest::Approx(static_cast<double>(m)).epsilon(1e-12));
    CHECK(selberg::fejer(m, 1.0) == doctest::Approx(static_cast<double>(m)).epsilon(1e-12));
  }
  CHECK(selberg::fejer(2, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(selberg::fejer(2, 0.25) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(selberg::fejer(0, 0.1), std::invalid_argument);

  // Series form agrees with the closed form.
  CounterRng rng{11};
  for (int t = 0; t < 50; ++t) {
    const double x = rng.u01_at(t);
    const int m = 1 + static_cast<int>(rng.index_at(1000 + t, 12));
    double series = 0.0;
    for (int n = -(m - 1); n <= m - 1; ++n) {
      series += (1.0 - std::abs(n) / static_cast<double>(m)) * std::cos(kTwoPi * n * x);
    }
    CHECK(selberg::fejer(m, x) == doctest::Approx(series).epsilon(1e-10));
  }

  // Nonnegativity (it is a square).
  for (int t = 0; t < 200; ++t) {
    CHECK(selberg::fejer(7, t / 200.0) >= 0.0);
  }
}

TEST_CASE("beurling polynomial degree and sawtooth majorization") {
  for (int m_order : {3, 9}) {
    // Quadrature coefficients vanish beyond degree M+1.
    for (int m = m_order + 2; m <= m_order + 5; ++m) {
      const auto c = measures::numeric_fourier_coeff_complex(
          [&](double x) { return selberg::beurling(m_order, x); }, m);
      CHECK(std::abs(c) < 1e-8);
    }
    // Majorant of the sawtooth frac(x) - 1/2.
    for (int j = 0; j < 2000; ++j) {
      const double x = (j + 0.5) / 2000.0 - 0.5;
      CHECK(selberg::beurling(m_order, x) >= frac(x) - 0.5 - 1e-12);
    }
  }
  CHECK_THROWS_AS(selberg::beurling(0, 0.1), std::invalid_argument);

  // Mean distance from the sawtooth shrinks with the degree (reported).
  double prev = 1.0;
  for (int m_order : {2, 8, 32}) {
    const double gap = measures::numeric_fourier_coeff(
        [&](double x) { return selberg::beurling(m_order, x) - (frac(x) - 0.5); }, 0);
    MESSAGE("beurling mean sgn gap, M=", m_order, ": ", gap);
    CHECK(gap < prev);
    CHECK(gap > 0.0);
    prev = gap;
  }
}

TEST_CASE("selberg sandwich on a grid") {
  const int m_order = 9;
  const double a = 0.2, b = 0.6;
  double min_gap_plus = 1.0, min_gap_minus = 1.0;
  for (int j = 0; j < 10000; ++j) {
    const double x = (j + 0.5) / 10000.0;
    const double chi = (a <= x && x <= b) ? 1.0 : 0.0;
    const double sp = selberg::selberg_plus(m_order, a, b, x);
    const double sm = selberg::selberg_minus(m_order, a, b, x);
    min_gap_plus = std::min(min_gap_plus, sp - chi);
    min_gap_minus = std::min(min_gap_minus, chi - sm);
    CHECK(sp - sm >= -1e-12);
  }
  CHECK(min_gap_plus >= -1e-9);
  CHECK(min_gap_minus >= -1e-9);

  CHECK_THROWS_AS(selberg::selberg_plus(3, 0.7, 0.2, 0.5), std::invalid_argument);
}

TEST_CASE("selberg mean values and L1 gap") {
  const int m_order = 9;
  bool beyond = false;
  const auto p0 = selberg::selberg_coeff(m_order, 0.0, 0.5, 0, +1, &beyond);
  CHECK_FALSE(beyond);
  CHECK(p0.real() == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(std::abs(p0.imag()) < 1e-12);
  const auto m0 = selberg::selberg_coeff(m_order, 0.0, 0.5, 0, -1);
  CHECK(m0.real() == doctest::Approx(0.4).epsilon(1e-10));

  // L1 distance of the majorant from the indicator: exactly 1/(M+1); the
  // indicator part integrates analytically, the polynomial by quadrature.
  const double s_plus_mass = measures::numeric_fourier_coeff(
      [&](double x) { return selberg::selberg_plus(m_order, 0.2, 0.6, x); }, 0);
  CHECK(s_plus_mass - 0.4 <= 1.0 / (m_order + 1) + 1e-8);
  CHECK(s_plus_mass - 0.4 == doctest::Approx(1.0 / (m_order + 1)).epsilon(1e-8));

  // Beyond-degree indices report zero with the flag set.
  const auto far = selberg::selberg_coeff(m_order, 0.2, 0.6, m_order + 2, +1, &beyond);
  CHECK(beyond);
  CHECK(far == std::complex<double>{0.0, 0.0});
}

TEST_CASE("selberg coefficient bound") {
  const int m_order = 9;
  const double a = 0.2, b = 0.6;
  for (int sign : {+1, -1}) {
    const auto coeffs = selberg::selberg_coeff_batch(m_order, a, b, m_order, sign);
    for (int m = 1; m <= m_order; ++m) {
      const double bound = 1.0 / (m_order + 1) + std::min(b - a, 1.0 / (0.5 * kTwoPi * m));
      CHECK(std::abs(coeffs[m]) <= bound + 1e-10);
    }
  }
}

TEST_CASE("chi_hat") {
  CHECK(selberg::chi_hat(0.2, 0.6, 0).real() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(selberg::chi_hat(0.2, 0.6, 0).imag() == 0.0);
  CHECK(std::abs(selberg::chi_hat(0.0, 0.5, 2)) < 1e-15);
  CHECK(std::abs(selberg::chi_hat(0.2, 0.6, 5)) <=
        std::min(0.4, 1.0 / (0.5 * kTwoPi * 5)) + 1e-12);

  // Quadrature cross-check and the (d) bound for random intervals.
  CounterRng rng{23};
  for (int t = 0; t < 10; ++t) {
    double a = rng.u01_at(2 * t), b = rng.u01_at(2 * t + 1);
    if (a > b) std::swap(a, b);
    const int m = 1 + static_cast<int>(rng.index_at(3000 + t, 12));
    const auto numeric = measures::numeric_fourier_coeff_complex(
        [&](double x) { return (a <= x && x <= b) ? 1.0 : 0.0; }, m);
    CHECK(std::abs(numeric - selberg::chi_hat(a, b, m)) < 1e-3);  // jump-limited rule
    CHECK(std::abs(selberg::chi_hat(a, b, m)) <=
          std::min(b - a, 1.0 / (0.5 * kTwoPi * m)) + 1e-12);
  }
}

TEST_CASE("trig polynomial round trip and evaluation") {
  const auto fp = selberg::fejer_poly(4);
  CHECK(fp.degree == 3);
  for (int t = 0; t < 20; ++t) {
    const double x = t / 20.0;
    CHECK(fp.eval(x) == doctest::Approx(selberg::fejer(4, x)).epsilon(1e-10));
  }

  const auto sp = selberg::selberg_poly(5, 0.1, 0.55, +1);
  CHECK(sp.degree == 6);
  for (int t = 0; t < 20; ++t) {
    const double x = (t + 0.3) / 20.0;
    CHECK(sp.eval(x) == doctest::Approx(selberg::selberg_plus(5, 0.1, 0.55, x)).epsilon(1e-8));
  }

  // The top harmonic of the degree-(M+1) band cancels between the
  // sin(2 pi (M+1) x) term and the kernel product term.
  CHECK(std::abs(sp.coeff(6)) < 1e-12);
  CHECK(std::abs(sp.coeff(-6)) < 1e-12);
}
