#include "qdent/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdent/errors.hpp"

namespace qdent {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

// b[n][m] = sum_k (-1)^k C(m,k) / C(N-2k, M-k) * [C(N+1-2k, n-k) - 2 C(N-2k, n-k-1)]
ExactRational amplitude_entry(int dots, int excitations, int n, int m) {
  ExactRational sum;
  for (int k = 0; k <= m; ++k) {
    const BigInt bracket = binomial(dots + 1 - 2 * k, n - k) - 2 * binomial(dots - 2 * k, n - k - 1);
    if (sgn(bracket) == 0) continue;
    const BigInt denom = binomial(dots - 2 * k, excitations - k);
    ExactRational term(binomial(m, k) * bracket, denom);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

template <typename Real>
std::vector<std::complex<Real>> evaluate_coefficients(std::span<const Real> b,
                                                      std::span<const std::int64_t> phases,
                                                      int size, Real kt) {
  std::vector<std::complex<Real>> factors(static_cast<std::size_t>(size));
  for (int n = 0; n < size; ++n) {
    const Real angle = static_cast<Real>(phases[static_cast<std::size_t>(n)]) * kt;
    factors[static_cast<std::size_t>(n)] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<std::complex<Real>> c(static_cast<std::size_t>(size));
  for (int n = 0; n < size; ++n) {
    const auto f = factors[static_cast<std::size_t>(n)];
    for (int m = 0; m < size; ++m) {
      c[static_cast<std::size_t>(m)] += b[static_cast<std::size_t>(n * size + m)] * f;
    }
  }
  return c;
}

template <typename Real>
std::vector<Real> evaluate_weights(std::span<const Real> b, std::span<const std::int64_t> phases,
                                   std::span<const Real> multiplicities, int size, Real kt) {
  const auto c = evaluate_coefficients(b, phases, size, kt);
  std::vector<Real> p(c.size());
  for (std::size_t m = 0; m < c.size(); ++m) p[m] = multiplicities[m] * std::norm(c[m]);
  return p;
}

template <typename Real>
Real shannon_bits(std::span<const Real> weights) {
  Real h = 0;
  for (Real p : weights) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

void require_single_excitation_dots(int dots, const char* who) {
  if (dots < 2) throw DomainError(std::string(who) + ": requires N >= 2, got " + std::to_string(dots));
}

}  // namespace

ModelConfig::ModelConfig(int dots, int excitations) : dots_(dots), excitations_(excitations) {
  if (dots < 1) throw DomainError("ModelConfig: N must be positive, got " + std::to_string(dots));
  if (excitations < 0 || excitations > dots) {
    throw DomainError("ModelConfig: M must lie in [0, N], got N=" + std::to_string(dots) +
                      " M=" + std::to_string(excitations));
  }
}

AmplitudeTable::AmplitudeTable(const ModelConfig& config)
    : config_(config), size_(config.schmidt_rank()) {
  const int N = config.dots();
  const int M = config.excitations();
  exact_.reserve(static_cast<std::size_t>(size_ * size_));
  for (int n = 0; n < size_; ++n) {
    for (int m = 0; m < size_; ++m) exact_.push_back(amplitude_entry(N, M, n, m));
  }
  for (int n = 0; n < size_; ++n) {
    phase_.push_back(static_cast<std::int64_t>(n) * (N + 1 - n) - static_cast<std::int64_t>(M) * (N - M));
    multiplicity_.push_back(binomial(M, n) * binomial(N - M, n));
  }
  refresh_float_copies();
}

void AmplitudeTable::refresh_float_copies() {
  b_double_.clear();
  b_extended_.clear();
  for (const auto& q : exact_) {
    b_double_.push_back(q.to_double());
    b_extended_.push_back(q.to_long_double());
  }
  mult_double_.clear();
  mult_extended_.clear();
  for (const auto& w : multiplicity_) {
    const ExactRational q(w);
    mult_double_.push_back(q.to_double());
    mult_extended_.push_back(q.to_long_double());
  }
}

namespace detail {
AmplitudeTable corrupted_copy(const AmplitudeTable& table) {
  AmplitudeTable copy = table;
  copy.exact_[0] += ExactRational(BigInt(1), BigInt(64));
  copy.refresh_float_copies();
  return copy;
}
}  // namespace detail

std::vector<std::complex<double>> coefficients(const AmplitudeTable& table, double kt) {
  return evaluate_coefficients<double>(table.b_double(), table.phases(), table.size(), kt);
}

std::vector<ExactRational> coefficients_at_pi_exact(const AmplitudeTable& table) {
  std::vector<ExactRational> c(static_cast<std::size_t>(table.size()));
  for (int n = 0; n < table.size(); ++n) {
    const bool odd = table.phase(n) % 2 != 0;
    for (int m = 0; m < table.size(); ++m) {
      if (odd) {
        c[static_cast<std::size_t>(m)] -= table.b(n, m);
      } else {
        c[static_cast<std::size_t>(m)] += table.b(n, m);
      }
    }
  }
  return c;
}

SchmidtSpectrum schmidt_spectrum(const AmplitudeTable& table, double kt) {
  SchmidtSpectrum s;
  s.time = kt;
  s.weights = evaluate_weights<double>(table.b_double(), table.phases(), table.multiplicities_double(),
                                       table.size(), kt);
  double total = 0.0;
  for (double p : s.weights) total += p;
  if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
    throw NumericError("schmidt_spectrum: weights sum to " + std::to_string(total) + " at kt=" +
                       std::to_string(kt));
  }
  return s;
}

double entanglement(std::span<const double> weights) { return shannon_bits(weights); }

double entropy_at(const AmplitudeTable& table, double kt) {
  return entanglement(schmidt_spectrum(table, kt));
}

long double entropy_at_extended(const AmplitudeTable& table, long double kt) {
  const auto p = evaluate_weights<long double>(table.b_extended(), table.phases(),
                                               table.multiplicities_extended(), table.size(), kt);
  return shannon_bits<long double>(p);
}

EntanglementTrace entanglement_trace(const AmplitudeTable& table, double kt_max, int steps) {
  if (steps < 1) throw DomainError("entanglement_trace: steps must be >= 1");
  if (!std::isfinite(kt_max)) throw DomainError("entanglement_trace: kt_max must be finite");
  EntanglementTrace trace{table.config(), {}, {}, {}};
  trace.times.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    const double kt = kt_max * static_cast<double>(i) / static_cast<double>(steps);
    auto spectrum = schmidt_spectrum(table, kt);
    trace.times.push_back(kt);
    trace.entropies.push_back(entanglement(spectrum));
    trace.spectra.push_back(std::move(spectrum));
  }
  return trace;
}

double mes_entropy(const ModelConfig& config) {
  return std::log2(static_cast<double>(config.reduced_excitations() + 1));
}

double relative_entanglement(double entropy, const ModelConfig& config) {
  if (config.reduced_excitations() == 0) {
    throw DomainError("relative_entanglement: undefined for M' = 0");
  }
  return entropy / mes_entropy(config);
}

double p1_single_excitation(int dots, double kt) {
  require_single_excitation_dots(dots, "p1_single_excitation");
  const double N = dots;
  const double s = std::sin(N * kt / 2.0);
  return 4.0 * (N - 1.0) / (N * N) * s * s;
}

double entanglement_rate_m1(int dots, double kt) {
  require_single_excitation_dots(dots, "entanglement_rate_m1");
  const double N = dots;
  const double half = std::sin(N * kt / 2.0);
  if (half == 0.0) return 0.0;
  // log2(1/P_1 - 1); diverges where P_1 = 0 or P_1 = 1, both at sin(N kt) = 0.
  const double arg = N * N / (4.0 * (N - 1.0)) / (half * half) - 1.0;
  if (!(arg > 0.0) || !std::isfinite(arg)) return 0.0;
  return 2.0 * (N - 1.0) / N * std::sin(N * kt) * std::log2(arg);
}

std::optional<double> mes_time_m1(int dots) {
  require_single_excitation_dots(dots, "mes_time_m1");
  const double N = dots;
  const double x = 2.0 / N * std::sqrt(2.0 * (N - 1.0));
  if (x < 1.0) return std::nullopt;
  return 2.0 / N * std::asin(1.0 / x);
}

double peak_entropy_m1(int dots) {
  require_single_excitation_dots(dots, "peak_entropy_m1");
  const double N = dots;
  const double edge = dots == 2 ? 0.0 : (N - 2.0) * (N - 2.0) * std::log2(N - 2.0);
  return 2.0 / (N * N) * (N * N * std::log2(N) - edge - 2.0 * (N - 1.0) * std::log2(4.0 * (N - 1.0)));
}

std::vector<ExactRational> pi_time_magnitudes_exact(const ModelConfig& config) {
  const int N = config.dots();
  const int M = config.excitations();
  if (N % 2 == 0) throw DomainError("pi_time_magnitudes: N must be odd, got " + std::to_string(N));
  if (2 * M > N - 1) {
    throw DomainError("pi_time_magnitudes: requires M <= (N-1)/2, got M=" + std::to_string(M));
  }
  const BigInt n_dfac = double_factorial(N);
  std::vector<ExactRational> out;
  for (int m = 0; m <= M; ++m) {
    BigInt num = factorial(m) * (N - 2 * M) * double_factorial(N - 2 * m - 2);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
    out.emplace_back(num, n_dfac);
  }
  return out;
}

std::vector<double> pi_time_magnitudes(const ModelConfig& config) {
  std::vector<double> out;
  for (const auto& q : pi_time_magnitudes_exact(config)) out.push_back(q.to_double());
  return out;
}

std::vector<ExactRational> pi_time_weights_exact(const ModelConfig& config) {
  const int N = config.dots();
  const int M = config.excitations();
  auto c = pi_time_magnitudes_exact(config);
  for (int m = 0; m < static_cast<int>(c.size()); ++m) {
    auto& q = c[static_cast<std::size_t>(m)];
    q = q * q * ExactRational(binomial(M, m) * binomial(N - M, m));
  }
  return c;
}

}  // namespace qdent
