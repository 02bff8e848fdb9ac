#pragma once

#include <string>
#include <vector>

#include "walg/report.hpp"
#include "walg/spec_io.hpp"

namespace walg {

/// Every cross-check available for one algebra: setup invariants, finite
/// bracket routes and axioms, generators, the three lambda-bracket routes,
/// Virasoro, Zhu and Miura.
Report verify_algebra(const GradedSetup& st, unsigned jobs = 1);

/// sl2 [2], sl3 [2,1], sl3 [3], sl4 [2,2] (s = e), sl4 [4], sl4 [3,1], sl4 [2,1,1].
std::vector<AlgebraInput> test_matrix();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// The ten acceptance criteria, in order.
std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

}  // namespace walg
