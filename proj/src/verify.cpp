#include "qdent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "parallel.hpp"
#include "qdent/analysis.hpp"
#include "qdent/closed_form.hpp"
#include "qdent/errors.hpp"

namespace qdent {

namespace {

struct SectorResult {
  std::size_t checked = 0;
  double max_abs_diff = 0.0;
  std::vector<VerifyMismatch> mismatches;
};

SectorResult verify_sector(int dots, int excitations, const VerifyOptions& options) {
  const ModelConfig config(dots, excitations);
  AmplitudeTable table(config);
  if (options.corrupt_table && config.reduced_excitations() >= 1) table = detail::corrupted_copy(table);

  auto basis = std::make_shared<const oracle::SectorBasis>(dots, excitations, options.max_dimension);
  const oracle::Propagator propagator(oracle::build_hamiltonian(basis));

  const double span = config.reduced_excitations() == 0 ? 2.0 * std::numbers::pi : period(config);
  SectorResult result;
  for (int j = 0; j < options.samples_per_period; ++j) {
    const double kt = span * j / options.samples_per_period;
    // A spectrum that fails to normalize counts as a mismatch (NaN).
    double closed = std::numeric_limits<double>::quiet_NaN();
    try {
      closed = entropy_at(table, kt);
    } catch (const NumericError&) {
    }
    const double exact = oracle::reduced_entropy(propagator.evolve_initial(kt), excitations);
    const double diff = std::abs(closed - exact);
    ++result.checked;
    result.max_abs_diff = std::isnan(diff) ? std::numeric_limits<double>::infinity()
                                           : std::max(result.max_abs_diff, diff);
    if (!(diff < options.tolerance)) {
      result.mismatches.push_back({dots, excitations, kt, closed, exact, diff});
    }
  }
  return result;
}

}  // namespace

VerifyReport verify_against_oracle(const VerifyOptions& options) {
  if (options.max_dots < 2) throw DomainError("verify: max_dots must be >= 2");
  if (options.samples_per_period < 1) throw DomainError("verify: samples must be >= 1");
  if (!(options.tolerance > 0.0)) throw DomainError("verify: tolerance must be positive");

  std::vector<std::pair<int, int>> jobs;
  for (int n = 2; n <= options.max_dots; ++n) {
    for (int m = 0; m <= n; ++m) jobs.emplace_back(n, m);
  }
  const auto results = detail::parallel_map(jobs.size(), [&](std::size_t i) {
    return verify_sector(jobs[i].first, jobs[i].second, options);
  });

  VerifyReport report;
  for (const auto& r : results) {
    report.checked += r.checked;
    report.max_abs_diff = std::max(report.max_abs_diff, r.max_abs_diff);
    report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
  }
  return report;
}

}  // namespace qdent
