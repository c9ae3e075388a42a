#include "gapdist/weyl.hpp"

#include <cmath>
#include <stdexcept>

#include "gapdist/common.hpp"

namespace gapdist {

AngleMultiset AngleMultiset::validated(Eigen::ArrayXd vals, bool symmetrized,
                                       std::string source) {
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (!(vals[i] >= 0.0 && vals[i] < 1.0)) {
      throw std::invalid_argument("AngleMultiset: values must lie in [0,1)");
    }
  }
  AngleMultiset a;
  a.values = std::move(vals);
  a.symmetrized = symmetrized;
  a.source = std::move(source);
  return a;
}

SignPattern::SignPattern(std::vector<int> s) : signs(std::move(s)) {
  if (signs.empty()) throw std::invalid_argument("SignPattern: empty");
  for (int v : signs) {
    if (v != 1 && v != -1) throw std::invalid_argument("SignPattern: entries must be +-1");
  }
}

SignPattern SignPattern::all_plus(int r) {
  return SignPattern(std::vector<int>(static_cast<std::size_t>(r), 1));
}

SignPattern SignPattern::parse(const std::string& s) {
  std::vector<int> v;
  for (char c : s) {
    if (c == '+') {
      v.push_back(1);
    } else if (c == '-') {
      v.push_back(-1);
    } else {
      throw std::invalid_argument("SignPattern: expected only '+' and '-'");
    }
  }
  return SignPattern(std::move(v));
}

namespace weyl {

std::complex<double> weyl_sum(const AngleMultiset& a, int m) {
  return pairwise_sum(static_cast<std::size_t>(a.size()),
                      [&](std::size_t i) { return unit_phase_scaled(m, a.values[i]); });
}

std::complex<double> empirical_weyl_limit(const AngleMultiset& a, int m) {
  if (a.size() == 0) throw std::invalid_argument("empirical_weyl_limit: empty multiset");
  return weyl_sum(a, m) / static_cast<double>(a.size());
}

AngleMultiset symmetrize(const AngleMultiset& a) {
  const Eigen::Index n = a.size();
  Eigen::ArrayXd vals(2 * n);
  vals.head(n) = a.values;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double neg = 1.0 - a.values[i];
    vals[n + i] = neg >= 1.0 ? 0.0 : neg;  // t = 0 and underflowing t map to 0
  }
  AngleMultiset r;
  r.values = std::move(vals);
  r.symmetrized = true;
  r.source = a.source.empty() ? "symmetrized" : a.source + ";symmetrized";
  return r;
}

AngleMultiset gap_family(std::span<const AngleMultiset> as, const SignPattern& signs,
                         std::int64_t cap, std::uint64_t seed) {
  const int r = static_cast<int>(as.size());
  if (r < 1) throw std::invalid_argument("gap_family: need at least one factor");
  if (signs.size() != r) throw std::invalid_argument("gap_family: sign/factor count mismatch");
  if (cap < 1) throw std::invalid_argument("gap_family: cap must be >= 1");
  double prod = 1.0;
  for (const auto& a : as) {
    if (a.size() == 0) throw std::invalid_argument("gap_family: empty factor multiset");
    prod *= static_cast<double>(a.size());
  }

  AngleMultiset g;
  if (prod <= static_cast<double>(cap)) {
    const auto total = static_cast<Eigen::Index>(prod);
    g.values.resize(total);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(r), 0);
    for (Eigen::Index out = 0; out < total; ++out) {
      double s = 0.0;
      for (int j = 0; j < r; ++j) s += signs.signs[j] * as[j].values[idx[j]];
      g.values[out] = frac(s);
      for (int j = r - 1; j >= 0; --j) {  // odometer, last factor fastest
        if (++idx[j] < as[j].size()) break;
        idx[j] = 0;
      }
    }
    g.source = "gap_family(full)";
  } else {
    CounterRng rng{seed};
    g.values.resize(static_cast<Eigen::Index>(cap));
    for (std::int64_t i = 0; i < cap; ++i) {
      double s = 0.0;
      for (int j = 0; j < r; ++j) {
        const auto k = rng.index_at(static_cast<std::uint64_t>(i) * r + j,
                                    static_cast<std::uint64_t>(as[j].size()));
        s += signs.signs[j] * as[j].values[static_cast<Eigen::Index>(k)];
      }
      g.values[static_cast<Eigen::Index>(i)] = frac(s);
    }
    g.source = "gap_family(subsampled,cap=" + std::to_string(cap) +
               ",seed=" + std::to_string(seed) + ")";
  }
  g.symmetrized = false;
  return g;
}

std::complex<double> product_limit(std::span<const CoeffMap> cs, int m) {
  if (cs.empty()) throw std::invalid_argument("product_limit: empty list");
  std::complex<double> p{1.0, 0.0};
  for (const auto& c : cs) {
    auto it = c.find(m);
    if (it == c.end()) {
      throw std::invalid_argument("product_limit: coefficient " + std::to_string(m) +
                                  " missing from a factor map");
    }
    p *= it->second;
  }
  return p;
}

CoeffMap coeff_map(const FourierDensity& d) {
  CoeffMap c;
  for (int m = -d.m_max(); m <= d.m_max(); ++m) c[m] = d.coeff(m);
  return c;
}

CoeffMap empirical_coeff_map(const AngleMultiset& a, int m_max) {
  CoeffMap c;
  for (int m = 0; m <= m_max; ++m) {
    const auto v = empirical_weyl_limit(a, m);
    c[m] = v;
    c[-m] = std::conj(v);
  }
  return c;
}

double wiener_schoenberg_statistic(const CoeffMap& c, int v) {
  if (v < 1) throw std::invalid_argument("wiener_schoenberg_statistic: V must be >= 1");
  double s = 0.0;
  for (int m = 1; m <= v; ++m) {
    auto it = c.find(m);
    if (it == c.end()) {
      throw std::invalid_argument("wiener_schoenberg_statistic: coefficient " +
                                  std::to_string(m) + " unavailable");
    }
    s += std::norm(it->second);
  }
  return s / v;
}

double wiener_schoenberg_statistic(const FourierDensity& d, int v) {
  if (v > d.m_max()) {
    throw std::invalid_argument(
        "wiener_schoenberg_statistic: V exceeds the stored coefficient band");
  }
  double s = 0.0;
  for (int m = 1; m <= v; ++m) s += d.coeffs[m] * d.coeffs[m];
  return s / v;
}

double empirical_interval_measure(const AngleMultiset& a, const Interval& i) {
  if (a.size() == 0) throw std::invalid_argument("empirical_interval_measure: empty multiset");
  Eigen::Index count = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (i.contains(a.values[j])) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(a.size());
}

}  // namespace weyl
}  // namespace gapdist
