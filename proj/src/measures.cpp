#include "gapdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gapdist/common.hpp"

namespace gapdist {

double ClosedForm::operator()(double x) const {
  switch (kind) {
    case Kind::VerticalSatoTate: {
      const double s = std::sin(kTwoPi * x);
      const double c = std::cos(kTwoPi * x);
      const double root = std::sqrt(q);
      const double denom = (root + 1.0 / root) * (root + 1.0 / root) - 4.0 * c * c;
      return scale * 4.0 * (q + 1.0) * s * s / denom;
    }
  }
  return 0.0;
}

std::string ClosedForm::kind_name() const {
  switch (kind) {
    case Kind::VerticalSatoTate:
      return "vertical_sato_tate";
  }
  return "unknown";
}

namespace measures {

FourierDensity uniform_density(int m_max) {
  if (m_max < 0) throw std::invalid_argument("uniform_density: m_max must be >= 0");
  FourierDensity d;
  d.coeffs = Eigen::ArrayXd::Zero(m_max + 1);
  d.coeffs[0] = 1.0;
  return d;
}

FourierDensity sato_tate_density(int m_max) {
  if (m_max < 2) throw std::invalid_argument("sato_tate_density: m_max must be >= 2");
  FourierDensity d;
  d.coeffs = Eigen::ArrayXd::Zero(m_max + 1);
  d.coeffs[0] = 1.0;
  d.coeffs[2] = -0.5;
  return d;
}

FourierDensity vertical_sato_tate_density(double q, int m_max) {
  if (!(q > 1.0)) throw std::invalid_argument("vertical_sato_tate_density: q must be > 1");
  if (m_max < 2) throw std::invalid_argument("vertical_sato_tate_density: m_max must be >= 2");
  FourierDensity d;
  d.coeffs = Eigen::ArrayXd::Zero(m_max + 1);
  d.coeffs[0] = 1.0;
  for (int m = 2; m <= m_max; m += 2) {
    d.coeffs[m] = 0.5 * (std::pow(q, -0.5 * m) - std::pow(q, -0.5 * (m - 2)));
  }
  ClosedForm cf;
  cf.kind = ClosedForm::Kind::VerticalSatoTate;
  cf.q = q;
  cf.scale = 1.0;
  const double raw_mass = numeric_fourier_coeff([&cf](double x) { return cf(x); }, 0);
  cf.scale = 1.0 / raw_mass;  // comes out as 1/2 for every q > 1
  d.closed_form = cf;
  return d;
}

double eval_series(const FourierDensity& d, double x) {
  double s = d.coeffs[0];
  for (int m = 1; m <= d.m_max(); ++m) {
    if (d.coeffs[m] == 0.0) continue;
    s += 2.0 * d.coeffs[m] * std::cos(kTwoPi * m * frac(x));
  }
  return s;
}

double eval_density(const FourierDensity& d, double x) {
  if (d.closed_form) return (*d.closed_form)(frac(x));
  return eval_series(d, x);
}

FourierDensity convolve(std::span<const FourierDensity> ds) {
  if (ds.empty()) throw std::invalid_argument("convolve: empty density list");
  int m_max = ds[0].m_max();
  for (const auto& d : ds) m_max = std::min(m_max, d.m_max());
  FourierDensity r;
  r.coeffs = Eigen::ArrayXd::Ones(m_max + 1);
  for (const auto& d : ds) r.coeffs *= d.coeffs.head(m_max + 1);
  return r;
}

FourierDensity convolve(const FourierDensity& a, const FourierDensity& b) {
  const FourierDensity ds[] = {a, b};
  return convolve(std::span<const FourierDensity>(ds, 2));
}

double pair_correlation_closed_form(double p, double x) {
  if (!(p > 1.0)) throw std::invalid_argument("pair_correlation_closed_form: p must be > 1");
  const double w = std::cos(2.0 * kTwoPi * x);  // cos(4 pi x)
  const double p2 = p * p;
  const double num = 2.0 * (1.0 + w) * (1.0 - 1.0 / p2) + (4.0 / p) * (1.0 / p2 - w);
  const double den = 1.0 + 1.0 / (p2 * p2) - (2.0 / p2) * w;
  return num / den;
}

namespace {

// Running integral of the Fourier series from -1/2:
//   cdf(x) = c_0 (x + 1/2) + sum_{m>=1} c_m/(pi m) sin(2 pi m x).
// Evaluated with a rotation recurrence so inverse sampling stays cheap.
struct CdfEvaluator {
  explicit CdfEvaluator(const FourierDensity& d) : c0(d.coeffs[0]) {
    amp.resize(d.m_max());
    for (int m = 1; m <= d.m_max(); ++m) {
      amp[m - 1] = d.coeffs[m] / (0.5 * kTwoPi * m);
    }
  }

  double operator()(double x) const {
    double s = c0 * (x + 0.5);
    const double c1 = std::cos(kTwoPi * x);
    const double s1 = std::sin(kTwoPi * x);
    double cm = c1, sm = s1;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      s += amp[i] * sm;
      const double cn = cm * c1 - sm * s1;
      sm = sm * c1 + cm * s1;
      cm = cn;
    }
    return s;
  }

  double c0;
  std::vector<double> amp;
};

// Bracket-seeded monotone bisection to width 1e-13.
struct CdfInverter {
  explicit CdfInverter(const FourierDensity& d) : eval(d) {
    table.resize(kTableSize + 1);
    for (int j = 0; j <= kTableSize; ++j) {
      table[j] = eval(-0.5 + static_cast<double>(j) / kTableSize);
    }
  }

  double operator()(double u) const {
    auto it = std::lower_bound(table.begin(), table.end(), u);
    int j = static_cast<int>(it - table.begin());
    double lo = -0.5 + (j > 0 ? (j - 1) : 0) / static_cast<double>(kTableSize);
    double hi = -0.5 + std::min(j + 1, kTableSize) / static_cast<double>(kTableSize);
    for (int it2 = 0; it2 < 60 && hi - lo > 1e-13; ++it2) {
      const double mid = 0.5 * (lo + hi);
      if (eval(mid) < u) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  static constexpr int kTableSize = 1024;
  CdfEvaluator eval;
  std::vector<double> table;
};

void require_probability_series(const FourierDensity& d, const char* who) {
  for (int j = 0; j < kDensityCheckGrid; ++j) {
    const double x = -0.5 + (j + 0.5) / kDensityCheckGrid;
    if (eval_series(d, x) < kNegativityTol) {
      throw NotAProbabilityDensity(std::string(who) +
                                   ": truncated series dips below -1e-9 on the check grid");
    }
  }
}

}  // namespace

double cdf(const FourierDensity& d, double x) {
  if (!(x >= -0.5 - 1e-12 && x <= 0.5 + 1e-12)) {
    throw std::invalid_argument("cdf: x must lie in [-1/2, 1/2]");
  }
  require_probability_series(d, "cdf");
  return CdfEvaluator(d)(std::clamp(x, -0.5, 0.5));
}

double quantile(const FourierDensity& d, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("quantile: u must lie in [0,1]");
  require_probability_series(d, "quantile");
  return CdfInverter(d)(u);
}

AngleMultiset sample(const FourierDensity& d, std::int64_t n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample: n must be >= 0");
  require_probability_series(d, "sample");
  const CdfInverter inv(d);
  CounterRng rng{seed};
  Eigen::ArrayXd vals(n);
  for (std::int64_t i = 0; i < n; ++i) {
    vals[i] = frac(inv(rng.u01_at(static_cast<std::uint64_t>(i))));
  }
  AngleMultiset a;
  a.values = std::move(vals);
  a.symmetrized = false;
  a.source = "sample(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
  return a;
}

std::complex<double> numeric_fourier_coeff_complex(
    const std::function<double(double)>& f, int m) {
  const int n = kQuadraturePoints;
  return pairwise_sum(n, [&](std::size_t j) {
           const double x = (static_cast<double>(j) + 0.5) / n;
           return f(x) * unit_phase_scaled(-m, x);
         }) /
         static_cast<double>(n);
}

double numeric_fourier_coeff(const std::function<double(double)>& f, int m) {
  return numeric_fourier_coeff_complex(f, m).real();
}

}  // namespace measures
}  // namespace gapdist
