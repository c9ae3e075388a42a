#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>

namespace gapdist {

/// Closed-form evaluator attached to a density, identified by kind.
/// `scale` is the normalization constant that makes the closed form a
/// probability density; it is always determined by quadrature, never assumed.
struct ClosedForm {
  enum class Kind { VerticalSatoTate };
  Kind kind = Kind::VerticalSatoTate;
  double q = 0.0;
  double scale = 1.0;

  double operator()(double x) const;
  std::string kind_name() const;
};

/// Real even density on the circle stored through its Fourier coefficients
/// c_m for 0 <= m <= m_max (c_{-m} = c_m is implicit, so the symmetry
/// invariant holds by construction). mass() = c_0.
struct FourierDensity {
  Eigen::ArrayXd coeffs;  // coeffs[m] = c_m, size m_max + 1
  std::optional<ClosedForm> closed_form;

  int m_max() const { return static_cast<int>(coeffs.size()) - 1; }
  double mass() const { return coeffs[0]; }

  /// c_m with the even symmetry applied; zero outside the stored band.
  double coeff(int m) const {
    const int a = m < 0 ? -m : m;
    return a <= m_max() ? coeffs[a] : 0.0;
  }
};

/// Subinterval [alpha, beta] of [0,1].
struct Interval {
  double alpha = 0.0;
  double beta = 0.0;

  Interval() = default;
  Interval(double a, double b) : alpha(a), beta(b) {
    if (!(0.0 <= a && a <= b && b <= 1.0)) {
      throw std::invalid_argument("Interval: need 0 <= alpha <= beta <= 1");
    }
  }
  double length() const { return beta - alpha; }
  bool contains(double x) const { return alpha <= x && x <= beta; }
};

}  // namespace gapdist
