#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

namespace gapdist {

/// Finite multiset of fractional coordinates t = theta/(2*pi), each in [0,1).
/// `symmetrized` marks multisets closed under t -> -t (mod 1) with equal
/// multiplicity. Immutable by convention once built.
struct AngleMultiset {
  Eigen::ArrayXd values;  // order is meaningful (construction order)
  bool symmetrized = false;
  std::string source;

  Eigen::Index size() const { return values.size(); }

  /// Validating factory: every value must lie in [0,1).
  static AngleMultiset validated(Eigen::ArrayXd vals, bool symmetrized,
                                 std::string source);
};

}  // namespace gapdist
