#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gapdist/angle_multiset.hpp"
#include "gapdist/bigint.hpp"
#include "gapdist/qexpansion.hpp"

namespace gapdist {

/// Matrix of T_p on the echelonized cusp-form basis of S_k(SL_2(Z)),
/// entries exact. entry(row, col) is the coefficient of basis element `row`
/// in T_p applied to basis element `col`.
struct HeckeMatrix {
  int weight = 0;
  int prime = 0;
  int dim = 0;
  std::vector<BigInt> entries;  // row-major, dim x dim

  const BigInt& entry(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * dim + col];
  }
  BigInt trace() const;
};

/// Spectrum of T_p on S_k(SL_2(Z)): exact matrix plus the floating-point
/// eigendata in every coordinate system used downstream. Eigenvalues are
/// sorted ascending.
struct HeckeSpectrum {
  static constexpr int level = 1;  // only the full modular group is covered
  int weight = 0;
  int prime = 0;
  int dim = 0;
  HeckeMatrix matrix;
  std::vector<double> eigenvalues;  // a_i(p)
  std::vector<double> normalized;   // a_i(p) / p^{(k-1)/2}, in [-2,2]
  std::vector<double> angles;       // theta_i in [0, pi]
  std::vector<double> fractional;   // theta_i / (2 pi) in [0, 1/2]
};

namespace hecke {

/// Delta = q prod (1-q^n)^24 (exact; the tau oracle).
inline QExpansion delta_qexp(int n_max) { return qexp::delta(n_max); }

/// Normalized Eisenstein series of weight 4 or 6.
inline QExpansion eisenstein_qexp(int weight, int n_max) {
  return qexp::eisenstein(weight, n_max);
}

/// dim S_k(SL_2(Z)): 0 for odd k, k < 12 or k = 14, else floor(k/12) minus
/// one when k = 2 mod 12. Cross-validated against the count of monomial
/// basis elements Delta^i E4^a E6^b on every call.
int dim_cusp_forms(int k);

/// Echelonized integral basis f_1..f_s with a_{f_i}(j) = delta_{ij} for
/// 1 <= i, j <= s, built from Delta^i E4^a E6^b monomials (the monomial
/// matrix is unitriangular, so the reduction stays in exact integers).
std::vector<QExpansion> cusp_basis(int k, int n_max);

/// Matrix of T_p in the echelon basis via
///   a_{T_p f}(n) = a_f(p n) + p^{k-1} a_f(n/p).
/// Requires n_max >= dim * p.
HeckeMatrix hecke_matrix(int k, int p, int n_max);
HeckeMatrix hecke_matrix_from_basis(std::span<const QExpansion> basis, int k, int p);

/// Default q-expansion precision for a (k, p) pair.
int default_n_max(int k, int p);

/// Numerical spectrum of the exact matrix: eigenvalues of the normalized
/// operator T_p / p^{(k-1)/2} from a balanced dense solve, converted to
/// angles. Residuals above 1e-6 * ||A|| or imaginary parts above 1e-8
/// raise NumericalFailure.
HeckeSpectrum eigenangles(int k, int p, int n_max);
HeckeSpectrum eigenangles(int k, int p);
HeckeSpectrum spectrum_from_matrix(const HeckeMatrix& m);

/// |2 cos(m theta) - (X_m - X_{m-2})(2 cos theta)| where
/// X_m(2 cos theta) = sin((m+1) theta)/sin(theta). Near theta = 0 or pi the
/// ratio is evaluated through the Chebyshev recurrence (its limit form).
double chebyshev_identity_check(double theta, int m);

/// Fractional eigenangles pooled over a list of even weights at a fixed
/// prime (angles sorted within each weight, weights in list order).
AngleMultiset eigenangle_family(std::span<const int> k_list, int p);

bool is_prime(int p);

}  // namespace hecke
}  // namespace gapdist
