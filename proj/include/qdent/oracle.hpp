#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

// Brute-force path: enumerate the fixed-excitation sector, build the
// equivalent-neighbor Hamiltonian there, diagonalize it densely and take the
// von Neumann entropy of the reduced density matrix. Shares nothing with the
// closed form except the binomial helper.
namespace qdent::oracle {

// C(16, 8): the largest sector a 16-dot system produces.
inline constexpr std::size_t kDefaultMaxDimension = 12870;

// Configurations of N sites with exactly M ones, as ascending integers. Site i
// is bit (N - 1 - i), so the printed bit string reads site 0 first.
class SectorBasis {
 public:
  // Throws DomainError for invalid (N, M) or N > 62, BudgetError if C(N, M)
  // exceeds max_dimension.
  SectorBasis(int dots, int excitations, std::size_t max_dimension = kDefaultMaxDimension);

  int dots() const { return dots_; }
  int excitations() const { return excitations_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t state(std::size_t i) const { return states_[i]; }
  const std::vector<std::uint64_t>& states() const { return states_; }

  // Index of a configuration; throws std::out_of_range when it is not in the sector.
  std::size_t index_of(std::uint64_t config) const;
  bool site_occupied(std::uint64_t config, int site) const {
    return ((config >> (dots_ - 1 - site)) & 1U) != 0;
  }
  std::string to_bitstring(std::uint64_t config) const;

 private:
  int dots_;
  int excitations_;
  std::vector<std::uint64_t> states_;
};

// Real symmetric sector matrix in units of kappa: 1 between configurations
// connected by a single hop, 0 elsewhere (zero diagonal).
struct SectorHamiltonian {
  std::shared_ptr<const SectorBasis> basis;
  Eigen::MatrixXd matrix;
};

struct SectorState {
  std::shared_ptr<const SectorBasis> basis;
  Eigen::VectorXcd amplitudes;
};

SectorBasis build_basis(int dots, int excitations, std::size_t max_dimension = kDefaultMaxDimension);
SectorHamiltonian build_hamiltonian(std::shared_ptr<const SectorBasis> basis);

// Basis state with the first M sites excited.
SectorState initial_state(std::shared_ptr<const SectorBasis> basis);

// Eigendecomposition of a sector Hamiltonian, computed once and reused for any
// number of evolution times.
class Propagator {
 public:
  explicit Propagator(const SectorHamiltonian& hamiltonian);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  // exp(-i H kt) applied to `state`.
  SectorState evolve(const SectorState& state, double kt) const;
  // exp(-i H kt) applied to the initial product state.
  SectorState evolve_initial(double kt) const;

  const std::shared_ptr<const SectorBasis>& basis() const { return basis_; }

 private:
  std::shared_ptr<const SectorBasis> basis_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd initial_in_eigenbasis_;
};

SectorState evolve(const SectorHamiltonian& hamiltonian, double kt);

// Eigenvalues of rho_A for subsystem A = first `cut` sites, sorted descending.
// Eigenvalues in [-1e-12, 0) are clipped to zero; anything more negative is a
// NumericError.
std::vector<double> reduced_spectrum(const SectorState& state, int cut);

// -Tr(rho_A log2 rho_A).
double reduced_entropy(const SectorState& state, int cut);

double expectation_energy(const SectorHamiltonian& hamiltonian, const SectorState& state);

// build -> evolve -> reduce with cut = M.
double oracle_entanglement(int dots, int excitations, double kt,
                           std::size_t max_dimension = kDefaultMaxDimension);

}  // namespace qdent::oracle
