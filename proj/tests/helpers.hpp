#pragma once

#include <optional>
#include <vector>

#include "walg/setup.hpp"

namespace testing_helpers {

inline walg::GradedSetup sl_setup(int n, const std::vector<int>& partition,
                                  const std::optional<walg::Vec>& s = std::nullopt) {
  walg::LieAlgebra alg = walg::build_sl(n);
  walg::Sl2Triple t = walg::sl2_triple_from_partition(alg, partition);
  return walg::graded_setup(alg, t, s);
}

/// sl4 with the rectangular nilpotent [2,2]; g_d is 4-dimensional so s = e is passed explicitly.
inline walg::GradedSetup sl4_rect() {
  walg::LieAlgebra alg = walg::build_sl(4);
  walg::Sl2Triple t = walg::sl2_triple_from_partition(alg, {2, 2});
  return walg::graded_setup(alg, t, t.e);
}

/// Coordinates of the elementary matrix E_ij (1-based) in build_sl(n).
inline walg::Vec elementary(int n, int i, int j) {
  std::vector<walg::Rational> m(static_cast<std::size_t>(n * n));
  m[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
  return walg::sl_coords(n, m);
}

}  // namespace testing_helpers
