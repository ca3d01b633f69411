#include "qdent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "parallel.hpp"
#include "qdent/errors.hpp"

namespace qdent {

namespace {

constexpr double kGridTieTolerance = 1e-12;
constexpr int kMaxGoldenIterations = 500;

// Golden-section maximization of a unimodal function on [lo, hi]. Equal
// probes keep the left part of the bracket.
template <typename Fn>
long double golden_section_max(Fn f, long double lo, long double hi, long double tol) {
  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = hi - inv_phi * (hi - lo);
  long double d = lo + inv_phi * (hi - lo);
  long double fc = f(c);
  long double fd = f(d);
  for (int it = 0; it < kMaxGoldenIterations && hi - lo >= tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / 2.0L;
}

}  // namespace

double period(const ModelConfig& config) {
  const int reduced = config.reduced_excitations();
  if (reduced == 0) throw DomainError("period: no dynamics when M' = 0");
  if (reduced == 1) return 2.0 * std::numbers::pi / config.dots();
  return config.dots() % 2 == 0 ? std::numbers::pi : 2.0 * std::numbers::pi;
}

MaxEntanglementRecord find_max(const ModelConfig& config, const SearchOptions& options) {
  return find_max(AmplitudeTable(config), options);
}

MaxEntanglementRecord find_max(const AmplitudeTable& table, const SearchOptions& options) {
  const ModelConfig& config = table.config();
  if (options.grid_points < 3) throw DomainError("find_max: grid_points must be >= 3");
  if (!(options.refine_tol > 0.0)) throw DomainError("find_max: refine_tol must be positive");
  const double span = period(config);
  const int grid = options.grid_points;
  const double step = span / grid;

  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) values[static_cast<std::size_t>(i)] = entropy_at(table, step * i);
  const double best = *std::max_element(values.begin(), values.end());
  int best_index = 0;
  while (values[static_cast<std::size_t>(best_index)] < best - kGridTieTolerance) ++best_index;

  const long double lo = static_cast<long double>(step) * (best_index - 1);
  const long double hi = static_cast<long double>(step) * (best_index + 1);
  long double kt = golden_section_max([&](long double t) { return entropy_at_extended(table, t); }, lo,
                                      hi, static_cast<long double>(options.refine_tol));
  const long double full = static_cast<long double>(span);
  if (kt < 0.0L) kt += full;
  if (kt >= full) kt -= full;

  MaxEntanglementRecord rec{config, static_cast<double>(kt), 0.0, 0.0, mes_entropy(config), {}};
  rec.spectrum_at_max = schmidt_spectrum(table, rec.kt_star);
  rec.max_entropy = entanglement(rec.spectrum_at_max);
  rec.relative_max = rec.max_entropy / rec.mes_entropy;
  return rec;
}

std::vector<MaxEntanglementRecord> sweep_over_m(int dots, const SearchOptions& options) {
  if (dots < 2) throw DomainError("sweep_over_m: requires N >= 2");
  return detail::parallel_map(static_cast<std::size_t>(dots - 1), [&](std::size_t i) {
    return find_max(ModelConfig(dots, static_cast<int>(i) + 1), options);
  });
}

std::vector<MaxEntanglementRecord> sweep_over_n(ExcitationSpec excitations, std::span<const int> dots,
                                                const SearchOptions& options) {
  for (int n : dots) {
    const int m = excitations.resolve(n);
    if (m < 1 || n < std::max(2, m + 1)) {
      throw DomainError("sweep_over_n: N=" + std::to_string(n) + " is invalid for M=" + std::to_string(m));
    }
  }
  return detail::parallel_map(dots.size(), [&](std::size_t i) {
    return find_max(ModelConfig(dots[i], excitations.resolve(dots[i])), options);
  });
}

int critical_n(int excitations) {
  if (excitations < 1) throw DomainError("critical_n: requires M >= 1");
  return excitations == 1 ? 6 : 2 * excitations + 5;
}

InverseLinearFit fit_inverse_linear(int excitations, std::span<const int> dots,
                                    const SearchOptions& options) {
  const int critical = critical_n(excitations);
  const std::set<int> distinct(dots.begin(), dots.end());
  if (distinct.size() != dots.size()) throw DomainError("fit_inverse_linear: repeated N values");
  if (dots.size() < 3) throw DomainError("fit_inverse_linear: needs at least 3 points");
  for (int n : dots) {
    if (n <= critical) {
      throw DomainError("fit_inverse_linear: N=" + std::to_string(n) + " is not above N_M=" +
                        std::to_string(critical));
    }
  }

  const auto records = sweep_over_n(ExcitationSpec::fixed(excitations), dots, options);
  InverseLinearFit fit;
  fit.excitations = excitations;
  fit.domain.assign(dots.begin(), dots.end());
  for (const auto& r : records) fit.inverse_max_entropy.push_back(1.0 / r.max_entropy);

  const double count = static_cast<double>(dots.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    mean_x += dots[i];
    mean_y += fit.inverse_max_entropy[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    const double dx = dots[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (fit.inverse_max_entropy[i] - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < dots.size(); ++i) {
    const double r = fit.inverse_max_entropy[i] - (fit.slope * dots[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / count);
  return fit;
}

}  // namespace qdent
