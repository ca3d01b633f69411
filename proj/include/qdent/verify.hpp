#pragma once

#include <cstddef>
#include <vector>

#include "qdent/oracle.hpp"

namespace qdent {

struct VerifyOptions {
  int max_dots = 10;
  int samples_per_period = 25;
  double tolerance = 1e-9;
  std::size_t max_dimension = oracle::kDefaultMaxDimension;
  bool corrupt_table = false;  // test hook: compare against a perturbed b table
};

struct VerifyMismatch {
  int dots = 0;
  int excitations = 0;
  double kt = 0.0;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_diff = 0.0;
};

struct VerifyReport {
  std::size_t checked = 0;
  double max_abs_diff = 0.0;
  std::vector<VerifyMismatch> mismatches;  // ordered by (N, M, sample)

  bool passed() const { return mismatches.empty(); }
};

// Compares the closed-form entropy with the exact-diagonalization entropy for
// N = 2 .. max_dots, M = 0 .. N, at samples_per_period uniform times over one
// period (2 pi when M' = 0).
VerifyReport verify_against_oracle(const VerifyOptions& options);

}  // namespace qdent
