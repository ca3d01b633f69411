#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdent/combinatorics.hpp"

namespace qdent {

// N dots, M of them initially excited. Time is always the dimensionless
// product kt of the coupling and physical time.
class ModelConfig {
 public:
  // Throws DomainError unless N >= 1 and 0 <= M <= N.
  ModelConfig(int dots, int excitations);

  int dots() const { return dots_; }
  int excitations() const { return excitations_; }
  // M' = min(M, N - M); the Schmidt rank is M' + 1.
  int reduced_excitations() const { return std::min(excitations_, dots_ - excitations_); }
  int schmidt_rank() const { return reduced_excitations() + 1; }

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;

 private:
  int dots_;
  int excitations_;
};

class AmplitudeTable;

namespace detail {
// Test hook used by the verify harness: returns a copy whose b[0][0] is offset
// by 1/64. The column-sum invariant is deliberately broken.
AmplitudeTable corrupted_copy(const AmplitudeTable& table);
}  // namespace detail

// Exact superposition amplitudes b[n][m] and phase integers for one (N, M).
//
//   C_m(kt) = sum_n b[n][m] exp(i * phase[n] * kt)
//   phase[n] = n(N + 1 - n) - M(N - M)
//
// Immutable after construction; safe to share across threads.
class AmplitudeTable {
 public:
  explicit AmplitudeTable(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  int size() const { return size_; }  // M' + 1

  const ExactRational& b(int n, int m) const { return exact_[index(n, m)]; }
  std::int64_t phase(int n) const { return phase_[static_cast<std::size_t>(n)]; }
  // C(M, m) * C(N - M, m): number of basis states behind Schmidt term m.
  const BigInt& multiplicity(int m) const { return multiplicity_[static_cast<std::size_t>(m)]; }

  std::span<const double> b_double() const { return b_double_; }
  std::span<const long double> b_extended() const { return b_extended_; }
  std::span<const std::int64_t> phases() const { return phase_; }
  std::span<const double> multiplicities_double() const { return mult_double_; }
  std::span<const long double> multiplicities_extended() const { return mult_extended_; }

 private:
  friend AmplitudeTable detail::corrupted_copy(const AmplitudeTable&);

  std::size_t index(int n, int m) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(m);
  }
  void refresh_float_copies();

  ModelConfig config_;
  int size_;
  std::vector<ExactRational> exact_;
  std::vector<std::int64_t> phase_;
  std::vector<BigInt> multiplicity_;
  std::vector<double> b_double_;
  std::vector<long double> b_extended_;
  std::vector<double> mult_double_;
  std::vector<long double> mult_extended_;
};

struct SchmidtSpectrum {
  double time = 0.0;
  std::vector<double> weights;  // ordered by Schmidt index m, not by size
};

struct EntanglementTrace {
  ModelConfig config;
  std::vector<double> times;
  std::vector<double> entropies;
  std::vector<SchmidtSpectrum> spectra;
};

inline AmplitudeTable amplitude_table(const ModelConfig& config) { return AmplitudeTable(config); }

std::vector<std::complex<double>> coefficients(const AmplitudeTable& table, double kt);

// Exact C_m at kt = pi, where every phase factor is (-1)^phase[n].
std::vector<ExactRational> coefficients_at_pi_exact(const AmplitudeTable& table);

// Throws NumericError when the weights fail to sum to one within 1e-9.
SchmidtSpectrum schmidt_spectrum(const AmplitudeTable& table, double kt);

// Shannon entropy in bits with 0 log 0 = 0.
double entanglement(std::span<const double> weights);
inline double entanglement(const SchmidtSpectrum& spectrum) { return entanglement(spectrum.weights); }

double entropy_at(const AmplitudeTable& table, double kt);
// Same quantity evaluated entirely in long double; used where the entropy is
// flat enough near a maximum that double rounding limits the optimizer.
long double entropy_at_extended(const AmplitudeTable& table, long double kt);

// Samples [0, kt_max] at steps + 1 uniform points. Requires steps >= 1.
EntanglementTrace entanglement_trace(const AmplitudeTable& table, double kt_max, int steps);

// log2(M' + 1).
double mes_entropy(const ModelConfig& config);

// E / mes_entropy; throws DomainError when M' = 0.
double relative_entanglement(double entropy, const ModelConfig& config);

// Single-excitation closed forms. All require N >= 2.
double p1_single_excitation(int dots, double kt);
double entanglement_rate_m1(int dots, double kt);
std::optional<double> mes_time_m1(int dots);
double peak_entropy_m1(int dots);

// |C_m(pi)| = 2^m m! (N - 2M) (N - 2m - 2)!! / N!! for odd N, M <= (N - 1)/2.
std::vector<ExactRational> pi_time_magnitudes_exact(const ModelConfig& config);
std::vector<double> pi_time_magnitudes(const ModelConfig& config);
// Schmidt weights built from pi_time_magnitudes_exact.
std::vector<ExactRational> pi_time_weights_exact(const ModelConfig& config);

}  // namespace qdent
