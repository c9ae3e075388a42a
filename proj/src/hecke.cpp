#include "gapdist/hecke.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gapdist/common.hpp"

namespace gapdist {

BigInt HeckeMatrix::trace() const {
  BigInt t(0);
  for (int i = 0; i < dim; ++i) t += entry(i, i);
  return t;
}

namespace hecke {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Weight left for the Eisenstein part of Delta^i E4^a E6^b; solvable with
// a >= 0, b in {0,1} exactly when w is even, nonnegative and not 2.
bool eisenstein_exponents(int w, int* a, int* b) {
  if (w < 0 || w % 2 != 0 || w == 2) return false;
  if (w % 4 == 0) {
    *a = w / 4;
    *b = 0;
  } else {
    *a = (w - 6) / 4;
    *b = 1;
  }
  return *a >= 0;
}

int dim_by_basis_count(int k) {
  if (k % 2 != 0 || k < 12) return 0;
  int count = 0;
  int a = 0, b = 0;
  for (int i = 1; 12 * i <= k; ++i) {
    if (eisenstein_exponents(k - 12 * i, &a, &b)) ++count;
  }
  return count;
}

}  // namespace

int dim_cusp_forms(int k) {
  int s = 0;
  if (k % 2 == 0 && k >= 12 && k != 14) {
    s = k / 12 - (k % 12 == 2 ? 1 : 0);
  }
  const int counted = dim_by_basis_count(k);
  if (s != counted) {
    throw NumericalFailure("dim_cusp_forms: closed formula disagrees with basis count at k=" +
                           std::to_string(k));
  }
  return s;
}

std::vector<QExpansion> cusp_basis(int k, int n_max) {
  if (k % 2 != 0) throw std::invalid_argument("cusp_basis: weight must be even");
  const int s = dim_cusp_forms(k);
  if (s == 0) return {};
  if (n_max < s) throw PrecisionError("cusp_basis: n_max below the basis dimension");

  const QExpansion dlt = qexp::delta(n_max);
  const QExpansion e4 = qexp::eisenstein(4, n_max);
  const QExpansion e6 = qexp::eisenstein(6, n_max);

  // Power ladders, built once per call.
  int max_a = 0;
  std::vector<int> ea(static_cast<std::size_t>(s) + 1), eb(static_cast<std::size_t>(s) + 1);
  for (int i = 1; i <= s; ++i) {
    if (!eisenstein_exponents(k - 12 * i, &ea[i], &eb[i])) {
      throw NumericalFailure("cusp_basis: no monomial of weight " + std::to_string(k - 12 * i));
    }
    max_a = std::max(max_a, ea[i]);
  }
  std::vector<QExpansion> e4_pow(static_cast<std::size_t>(max_a) + 1);
  e4_pow[0] = qexp::pow(e4, 0, n_max);
  for (int a = 1; a <= max_a; ++a) e4_pow[a] = qexp::mul(e4_pow[a - 1], e4, n_max);

  // Monomials g_i = Delta^i E4^a E6^b start at q^i with leading coefficient
  // 1, so the coefficient matrix over columns 1..s is unitriangular and the
  // echelon reduction below needs no division.
  std::vector<QExpansion> g(static_cast<std::size_t>(s) + 1);
  QExpansion delta_pow = dlt;
  for (int i = 1; i <= s; ++i) {
    QExpansion m = qexp::mul(delta_pow, e4_pow[ea[i]], n_max);
    if (eb[i] == 1) m = qexp::mul(m, e6, n_max);
    m.weight = k;
    g[i] = std::move(m);
    if (i < s) delta_pow = qexp::mul(delta_pow, dlt, n_max);
  }

  std::vector<QExpansion> basis(static_cast<std::size_t>(s) + 1);
  for (int i = s; i >= 1; --i) {
    QExpansion f = g[i];
    for (int j = i + 1; j <= s; ++j) {
      const BigInt c = f.coeffs[j];
      if (c.is_zero()) continue;
      for (int n = j; n <= n_max; ++n) f.coeffs[n] -= c * basis[j].coeffs[n];
    }
    for (int j = 1; j <= s; ++j) {
      if (f.coeffs[j] != BigInt(j == i ? 1 : 0)) {
        throw NumericalFailure("cusp_basis: echelon property violated");
      }
    }
    basis[i] = std::move(f);
  }
  return {basis.begin() + 1, basis.end()};
}

HeckeMatrix hecke_matrix_from_basis(std::span<const QExpansion> basis, int k, int p) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_matrix: p must be prime");
  const int s = static_cast<int>(basis.size());
  HeckeMatrix m;
  m.weight = k;
  m.prime = p;
  m.dim = s;
  if (s == 0) return m;
  const int n_max = basis[0].n_max;
  if (n_max < s * p) throw PrecisionError("hecke_matrix: n_max must be >= dim * p");
  const BigInt pk1 = BigInt::pow(static_cast<std::uint32_t>(p), static_cast<unsigned>(k - 1));
  m.entries.assign(static_cast<std::size_t>(s) * s, BigInt(0));
  for (int col = 0; col < s; ++col) {
    const QExpansion& f = basis[col];
    for (int row = 0; row < s; ++row) {
      const int n = row + 1;
      BigInt v = f.a(p * n);
      if (n % p == 0) v += pk1 * f.a(n / p);
      m.entries[static_cast<std::size_t>(row) * s + col] = v;
    }
  }
  return m;
}

int default_n_max(int k, int p) {
  return std::max(2 * dim_cusp_forms(k) * p, 64);
}

HeckeMatrix hecke_matrix(int k, int p, int n_max) {
  return hecke_matrix_from_basis(cusp_basis(k, n_max), k, p);
}

namespace {

// Parlett-Reinsch balancing with power-of-two scale factors (exact
// similarity in floating point).
void balance(Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if ((c + r) < 0.95 * s && f != 1.0) {
        converged = false;
        a.col(i) *= f;
        a.row(i) /= f;
      }
    }
  }
}

}  // namespace

HeckeSpectrum spectrum_from_matrix(const HeckeMatrix& m) {
  HeckeSpectrum sp;
  sp.weight = m.weight;
  sp.prime = m.prime;
  sp.dim = m.dim;
  sp.matrix = m;
  if (m.dim == 0) return sp;

  const double half_weight_log2 =
      0.5 * (m.weight - 1) * std::log2(static_cast<double>(m.prime));
  Eigen::MatrixXd b(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      long e2 = 0;
      const double mant = m.entry(i, j).frexp2(e2);
      const double scaled = mant * std::exp2(static_cast<double>(e2) - half_weight_log2);
      if (!std::isfinite(scaled)) {
        throw PrecisionError("eigenangles: normalized matrix entry overflows double");
      }
      b(i, j) = scaled;
    }
  }

  Eigen::MatrixXd bal = b;
  balance(bal);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(bal);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("eigenangles: dense eigensolver did not converge");
  }

  const double norm_b = bal.norm();
  for (int i = 0; i < m.dim; ++i) {
    const std::complex<double> lam = solver.eigenvalues()[i];
    if (std::abs(lam.imag()) > 1e-8 * std::max(1.0, std::abs(lam))) {
      throw NumericalFailure("eigenangles: eigenvalue has non-negligible imaginary part");
    }
    const Eigen::VectorXcd v = solver.eigenvectors().col(i);
    const double resid = (bal * v - lam * v).norm() / v.norm();
    if (resid > 1e-6 * std::max(1.0, norm_b)) {
      throw NumericalFailure("eigenangles: eigenpair residual above tolerance");
    }
    sp.normalized.push_back(lam.real());
  }
  std::sort(sp.normalized.begin(), sp.normalized.end());

  // Sum of eigenvalues must reproduce the exact trace (compared in the
  // normalized scale).
  long te = 0;
  const double tm = m.trace().frexp2(te);
  const double trace_norm = tm * std::exp2(static_cast<double>(te) - half_weight_log2);
  double sum = 0.0;
  for (double v : sp.normalized) sum += v;
  if (std::abs(sum - trace_norm) > 1e-6 * std::max(1.0, std::abs(trace_norm))) {
    throw NumericalFailure("eigenangles: eigenvalue sum disagrees with exact trace");
  }

  const double scale = std::pow(static_cast<double>(m.prime), 0.5 * (m.weight - 1));
  for (double v : sp.normalized) {
    if (std::abs(v) > 2.0 + 1e-9) {
      throw NumericalFailure("eigenangles: normalized eigenvalue outside [-2,2]");
    }
    sp.eigenvalues.push_back(v * scale);
    const double theta = std::acos(std::clamp(v / 2.0, -1.0, 1.0));
    sp.angles.push_back(theta);
    sp.fractional.push_back(theta / kTwoPi);
  }
  return sp;
}

HeckeSpectrum eigenangles(int k, int p, int n_max) {
  return spectrum_from_matrix(hecke_matrix(k, p, n_max));
}

HeckeSpectrum eigenangles(int k, int p) { return eigenangles(k, p, default_n_max(k, p)); }

double chebyshev_identity_check(double theta, int m) {
  if (m < 2) throw std::invalid_argument("chebyshev_identity_check: m must be >= 2");
  if (!(theta >= 0.0 && theta <= 3.14159265358979323847)) {
    throw std::invalid_argument("chebyshev_identity_check: theta must lie in [0, pi]");
  }
  const double lhs = 2.0 * std::cos(m * theta);
  const double st = std::sin(theta);
  double xm = 0.0, xm2 = 0.0;
  if (std::abs(st) >= 1e-4) {
    xm = std::sin((m + 1) * theta) / st;
    xm2 = std::sin((m - 1) * theta) / st;
  } else {
    // Limit form at theta near 0 or pi: evaluate X through its recurrence
    // X_j = y X_{j-1} - X_{j-2}, y = 2 cos(theta); X_j(+-2) = (+-1)^j (j+1).
    const double y = 2.0 * std::cos(theta);
    double a = 1.0, b = y;  // X_0, X_1
    for (int j = 2; j <= m; ++j) {
      const double c = y * b - a;
      a = b;
      b = c;
      if (j == m - 2) xm2 = c;
    }
    if (m == 2) xm2 = 1.0;  // X_0
    if (m == 3) xm2 = y;    // X_1
    xm = b;
  }
  return std::abs(lhs - (xm - xm2));
}

AngleMultiset eigenangle_family(std::span<const int> k_list, int p) {
  if (!is_prime(p)) throw std::invalid_argument("eigenangle_family: p must be prime");
  std::vector<double> vals;
  std::string ks;
  for (int k : k_list) {
    if (k % 2 != 0) throw std::invalid_argument("eigenangle_family: weights must be even");
    if (!ks.empty()) ks += ",";
    ks += std::to_string(k);
    if (dim_cusp_forms(k) == 0) continue;
    const HeckeSpectrum sp = eigenangles(k, p);
    vals.insert(vals.end(), sp.fractional.begin(), sp.fractional.end());
  }
  AngleMultiset a;
  a.values = Eigen::Map<const Eigen::ArrayXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
  a.symmetrized = false;
  a.source = "hecke(k=[" + ks + "],p=" + std::to_string(p) + ")";
  return a;
}

}  // namespace hecke
}  // namespace gapdist
