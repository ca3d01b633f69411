#include "qdent/qdent.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdent/analysis.hpp"
#include "qdent/closed_form.hpp"
#include "qdent/combinatorics.hpp"
#include "qdent/errors.hpp"
#include "qdent/oracle.hpp"
#include "qdent/verify.hpp"

struct qdent_table {
  qdent::AmplitudeTable table;
};

struct qdent_oracle {
  std::shared_ptr<const qdent::oracle::SectorBasis> basis;
  qdent::oracle::Propagator propagator;
};

namespace {

thread_local std::string last_error;

qdent_status fail(qdent_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and translates exceptions into status codes.
template <typename Body>
qdent_status guarded(Body&& body) {
  try {
    return body();
  } catch (const qdent::DomainError& e) {
    return fail(QDENT_ERR_DOMAIN, e.what());
  } catch (const qdent::BudgetError& e) {
    return fail(QDENT_ERR_BUDGET, e.what());
  } catch (const qdent::NumericError& e) {
    return fail(QDENT_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDENT_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDENT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QDENT_ERR_INTERNAL, "unknown exception");
  }
}

qdent_status null_argument(const char* name) {
  return fail(QDENT_ERR_NULL_ARGUMENT, std::string("null argument: ") + name);
}

qdent_status copy_string(const std::string& s, char* buffer, size_t capacity, size_t* required) {
  if (required) *required = s.size() + 1;
  if (!buffer || capacity < s.size() + 1) {
    return fail(QDENT_ERR_BUFFER_TOO_SMALL, "string needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return QDENT_OK;
}

template <typename T>
qdent_status copy_array(const std::vector<T>& values, T* out, size_t capacity) {
  if (!out) return null_argument("out");
  if (capacity < values.size()) {
    return fail(QDENT_ERR_BUFFER_TOO_SMALL, "array needs " + std::to_string(values.size()) + " entries");
  }
  std::copy(values.begin(), values.end(), out);
  return QDENT_OK;
}

qdent::SearchOptions search_options(const qdent_search_options* options) {
  qdent::SearchOptions o;
  if (options) {
    if (options->grid_points > 0) o.grid_points = options->grid_points;
    if (options->refine_tol > 0.0) o.refine_tol = options->refine_tol;
  }
  return o;
}

qdent_max_record to_c(const qdent::MaxEntanglementRecord& r) {
  return {r.config.dots(), r.config.excitations(), r.kt_star, r.max_entropy, r.relative_max, r.mes_entropy};
}

qdent_status copy_records(const std::vector<qdent::MaxEntanglementRecord>& records, qdent_max_record* out,
                          size_t capacity, size_t* written) {
  if (written) *written = 0;
  if (capacity < records.size()) {
    return fail(QDENT_ERR_BUFFER_TOO_SMALL, "record array needs " + std::to_string(records.size()) + " entries");
  }
  for (size_t i = 0; i < records.size(); ++i) out[i] = to_c(records[i]);
  if (written) *written = records.size();
  return QDENT_OK;
}

}  // namespace

extern "C" {

const char* qdent_version(void) { return "1.0.0"; }

const char* qdent_status_string(qdent_status status) {
  switch (status) {
    case QDENT_OK: return "ok";
    case QDENT_ERR_NULL_ARGUMENT: return "null argument";
    case QDENT_ERR_DOMAIN: return "domain error";
    case QDENT_ERR_BUDGET: return "budget exceeded";
    case QDENT_ERR_NUMERIC: return "numerical failure";
    case QDENT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case QDENT_ERR_NO_SOLUTION: return "no solution";
    case QDENT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qdent_last_error(void) { return last_error.c_str(); }

qdent_status qdent_binomial_string(int64_t x, int64_t y, char* buffer, size_t capacity, size_t* required) {
  return guarded([&] { return copy_string(qdent::binomial(x, y).get_str(), buffer, capacity, required); });
}

qdent_status qdent_double_factorial_string(int64_t x, char* buffer, size_t capacity, size_t* required) {
  return guarded([&] { return copy_string(qdent::double_factorial(x).get_str(), buffer, capacity, required); });
}

qdent_status qdent_table_create(int dots, int excited, qdent_table** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qdent_table{qdent::AmplitudeTable(qdent::ModelConfig(dots, excited))};
    return QDENT_OK;
  });
}

void qdent_table_destroy(qdent_table* table) { delete table; }

qdent_status qdent_table_size(const qdent_table* table, int* out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  *out = table->table.size();
  return QDENT_OK;
}

qdent_status qdent_table_b_string(const qdent_table* table, int n, int m, char* buffer, size_t capacity,
                                  size_t* required) {
  if (!table) return null_argument("table");
  const int size = table->table.size();
  if (n < 0 || m < 0 || n >= size || m >= size) return fail(QDENT_ERR_DOMAIN, "b index out of range");
  return guarded([&] { return copy_string(table->table.b(n, m).to_string(), buffer, capacity, required); });
}

qdent_status qdent_table_phase(const qdent_table* table, int n, int64_t* out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  if (n < 0 || n >= table->table.size()) return fail(QDENT_ERR_DOMAIN, "phase index out of range");
  *out = table->table.phase(n);
  return QDENT_OK;
}

qdent_status qdent_table_coefficients(const qdent_table* table, double kt, double* real, double* imag,
                                      size_t capacity) {
  if (!table) return null_argument("table");
  if (!real || !imag) return null_argument("real/imag");
  return guarded([&] {
    const auto c = qdent::coefficients(table->table, kt);
    if (capacity < c.size()) return fail(QDENT_ERR_BUFFER_TOO_SMALL, "coefficient arrays too small");
    for (size_t i = 0; i < c.size(); ++i) {
      real[i] = c[i].real();
      imag[i] = c[i].imag();
    }
    return QDENT_OK;
  });
}

qdent_status qdent_table_spectrum(const qdent_table* table, double kt, double* weights, size_t capacity) {
  if (!table) return null_argument("table");
  return guarded([&] { return copy_array(qdent::schmidt_spectrum(table->table, kt).weights, weights, capacity); });
}

qdent_status qdent_table_entropy(const qdent_table* table, double kt, double* out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::entropy_at(table->table, kt);
    return QDENT_OK;
  });
}

qdent_status qdent_entanglement(const double* weights, size_t count, double* out) {
  if (!weights && count > 0) return null_argument("weights");
  if (!out) return null_argument("out");
  *out = qdent::entanglement(std::span<const double>(weights, count));
  return QDENT_OK;
}

qdent_status qdent_mes_entropy(int dots, int excited, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::mes_entropy(qdent::ModelConfig(dots, excited));
    return QDENT_OK;
  });
}

qdent_status qdent_relative_entanglement(double entropy, int dots, int excited, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::relative_entanglement(entropy, qdent::ModelConfig(dots, excited));
    return QDENT_OK;
  });
}

qdent_status qdent_p1_single_excitation(int dots, double kt, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::p1_single_excitation(dots, kt);
    return QDENT_OK;
  });
}

qdent_status qdent_entanglement_rate_m1(int dots, double kt, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::entanglement_rate_m1(dots, kt);
    return QDENT_OK;
  });
}

qdent_status qdent_mes_time_m1(int dots, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto t = qdent::mes_time_m1(dots);
    if (!t) return fail(QDENT_ERR_NO_SOLUTION, "no real MES time for N=" + std::to_string(dots));
    *out = *t;
    return QDENT_OK;
  });
}

qdent_status qdent_peak_entropy_m1(int dots, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::peak_entropy_m1(dots);
    return QDENT_OK;
  });
}

qdent_status qdent_pi_time_magnitudes(int dots, int excited, double* out, size_t capacity) {
  return guarded([&] {
    return copy_array(qdent::pi_time_magnitudes(qdent::ModelConfig(dots, excited)), out, capacity);
  });
}

qdent_status qdent_period(int dots, int excited, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::period(qdent::ModelConfig(dots, excited));
    return QDENT_OK;
  });
}

qdent_status qdent_critical_n(int excited, int* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::critical_n(excited);
    return QDENT_OK;
  });
}

qdent_status qdent_find_max(int dots, int excited, const qdent_search_options* options, qdent_max_record* out,
                            double* spectrum, size_t capacity) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto rec = qdent::find_max(qdent::ModelConfig(dots, excited), search_options(options));
    if (spectrum) {
      const auto status = copy_array(rec.spectrum_at_max.weights, spectrum, capacity);
      if (status != QDENT_OK) return status;
    }
    *out = to_c(rec);
    return QDENT_OK;
  });
}

qdent_status qdent_sweep_over_m(int dots, const qdent_search_options* options, qdent_max_record* out,
                                size_t capacity, size_t* written) {
  if (!out) return null_argument("out");
  return guarded([&] { return copy_records(qdent::sweep_over_m(dots, search_options(options)), out, capacity, written); });
}

qdent_status qdent_sweep_over_n(int excited, const int* dots, size_t count, const qdent_search_options* options,
                                qdent_max_record* out, size_t capacity, size_t* written) {
  if (!dots && count > 0) return null_argument("dots");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto spec = excited == QDENT_EXCITED_HALF ? qdent::ExcitationSpec::half() : qdent::ExcitationSpec::fixed(excited);
    return copy_records(qdent::sweep_over_n(spec, std::span<const int>(dots, count), search_options(options)), out,
                        capacity, written);
  });
}

qdent_status qdent_fit_inverse_linear(int excited, const int* dots, size_t count, const qdent_search_options* options,
                                      qdent_fit* out, double* inverse_max_entropy) {
  if (!dots && count > 0) return null_argument("dots");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto fit = qdent::fit_inverse_linear(excited, std::span<const int>(dots, count), search_options(options));
    *out = {fit.excitations, fit.slope, fit.intercept, fit.residual_rms};
    if (inverse_max_entropy) std::copy(fit.inverse_max_entropy.begin(), fit.inverse_max_entropy.end(), inverse_max_entropy);
    return QDENT_OK;
  });
}

qdent_status qdent_oracle_create(int dots, int excited, size_t max_dimension, qdent_oracle** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const size_t budget = max_dimension == 0 ? qdent::oracle::kDefaultMaxDimension : max_dimension;
    auto basis = std::make_shared<const qdent::oracle::SectorBasis>(dots, excited, budget);
    qdent::oracle::Propagator propagator(qdent::oracle::build_hamiltonian(basis));
    *out = new qdent_oracle{std::move(basis), std::move(propagator)};
    return QDENT_OK;
  });
}

void qdent_oracle_destroy(qdent_oracle* oracle) { delete oracle; }

qdent_status qdent_oracle_dimension(const qdent_oracle* oracle, size_t* out) {
  if (!oracle) return null_argument("oracle");
  if (!out) return null_argument("out");
  *out = oracle->basis->size();
  return QDENT_OK;
}

qdent_status qdent_oracle_eigenvalues(const qdent_oracle* oracle, double* out, size_t capacity) {
  if (!oracle) return null_argument("oracle");
  const auto& ev = oracle->propagator.eigenvalues();
  return copy_array(std::vector<double>(ev.data(), ev.data() + ev.size()), out, capacity);
}

qdent_status qdent_oracle_entropy(const qdent_oracle* oracle, double kt, int cut, double* out) {
  if (!oracle) return null_argument("oracle");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qdent::oracle::reduced_entropy(oracle->propagator.evolve_initial(kt), cut);
    return QDENT_OK;
  });
}

qdent_status qdent_verify(const qdent_verify_options* options, qdent_mismatch_callback callback, void* user_data,
                          qdent_verify_summary* out) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  return guarded([&] {
    qdent::VerifyOptions o;
    o.max_dots = options->max_dots;
    o.samples_per_period = options->samples_per_period;
    o.tolerance = options->tolerance;
    if (options->max_dimension > 0) o.max_dimension = options->max_dimension;
    o.corrupt_table = options->corrupt_table != 0;
    const auto report = qdent::verify_against_oracle(o);
    if (callback) {
      for (const auto& m : report.mismatches) {
        const qdent_mismatch c{m.dots, m.excitations, m.kt, m.closed_form, m.oracle, m.abs_diff};
        callback(&c, user_data);
      }
    }
    *out = {report.checked, report.mismatches.size(), report.max_abs_diff};
    return QDENT_OK;
  });
}

}  // extern "C"
