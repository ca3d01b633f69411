#pragma once

#include <span>
#include <vector>

#include "qdent/closed_form.hpp"

namespace qdent {

struct SearchOptions {
  int grid_points = 4096;
  double refine_tol = 1e-12;
};

struct MaxEntanglementRecord {
  ModelConfig config;
  double kt_star = 0.0;        // in [0, period)
  double max_entropy = 0.0;    // E_max, ebits
  double relative_max = 0.0;   // e_max = E_max / E_MES
  double mes_entropy = 0.0;    // E_MES, ebits
  SchmidtSpectrum spectrum_at_max;
};

// Either a fixed excitation count or M = floor(N / 2) for every N.
struct ExcitationSpec {
  enum class Kind { kFixed, kHalf };
  Kind kind = Kind::kFixed;
  int value = 0;

  static ExcitationSpec fixed(int m) { return {Kind::kFixed, m}; }
  static ExcitationSpec half() { return {Kind::kHalf, 0}; }
  int resolve(int dots) const { return kind == Kind::kHalf ? dots / 2 : value; }
};

struct InverseLinearFit {
  int excitations = 0;
  double slope = 0.0;         // per dot
  double intercept = 0.0;
  double residual_rms = 0.0;  // ebits^-1
  std::vector<int> domain;
  std::vector<double> inverse_max_entropy;  // 1 / E_max for each domain entry
};

// Recurrence period of the entropy: 2 pi / N when M' = 1, otherwise pi for even
// N and 2 pi for odd N. Throws DomainError when M' = 0.
double period(const ModelConfig& config);

// Uniform scan of one period, then golden-section refinement of the best
// bracket. Among grid maxima equal within 1e-12, the smallest kt wins.
MaxEntanglementRecord find_max(const ModelConfig& config, const SearchOptions& options = {});
MaxEntanglementRecord find_max(const AmplitudeTable& table, const SearchOptions& options = {});

// Records for M = 1 .. N-1, in order.
std::vector<MaxEntanglementRecord> sweep_over_m(int dots, const SearchOptions& options = {});

// One record per entry of `dots`, in the given order. Each N must satisfy
// N >= max(2, M + 1) for the resolved M.
std::vector<MaxEntanglementRecord> sweep_over_n(ExcitationSpec excitations, std::span<const int> dots,
                                                const SearchOptions& options = {});

// N_M = 2M + 5, except N_1 = 6.
int critical_n(int excitations);

// Least squares of 1/E_max against N. Needs at least three distinct N, all
// above critical_n(M).
InverseLinearFit fit_inverse_linear(int excitations, std::span<const int> dots,
                                    const SearchOptions& options = {});

}  // namespace qdent
