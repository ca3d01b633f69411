#include "qdent/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "qdent/combinatorics.hpp"
#include "qdent/errors.hpp"

namespace qdent::oracle {

namespace {

constexpr double kClipTolerance = 1e-12;

}  // namespace

SectorBasis::SectorBasis(int dots, int excitations, std::size_t max_dimension)
    : dots_(dots), excitations_(excitations) {
  if (dots < 1 || dots > 62) throw DomainError("SectorBasis: N must lie in [1, 62]");
  if (excitations < 0 || excitations > dots) throw DomainError("SectorBasis: M must lie in [0, N]");
  const BigInt dim = binomial(dots, excitations);
  if (dim > BigInt(static_cast<unsigned long>(max_dimension))) {
    throw BudgetError("SectorBasis: C(" + std::to_string(dots) + ", " + std::to_string(excitations) +
                      ") = " + dim.get_str() + " exceeds budget " + std::to_string(max_dimension));
  }
  states_.reserve(dim.get_ui());
  if (excitations == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack: next larger integer with the same popcount.
  std::uint64_t v = (std::uint64_t{1} << excitations) - 1;
  const std::uint64_t limit = std::uint64_t{1} << dots;
  while (v < limit) {
    states_.push_back(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

std::size_t SectorBasis::index_of(std::uint64_t config) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), config);
  if (it == states_.end() || *it != config) throw std::out_of_range("SectorBasis: configuration not in sector");
  return static_cast<std::size_t>(it - states_.begin());
}

std::string SectorBasis::to_bitstring(std::uint64_t config) const {
  std::string s;
  for (int i = 0; i < dots_; ++i) s.push_back(site_occupied(config, i) ? '1' : '0');
  return s;
}

SectorBasis build_basis(int dots, int excitations, std::size_t max_dimension) {
  return SectorBasis(dots, excitations, max_dimension);
}

SectorHamiltonian build_hamiltonian(std::shared_ptr<const SectorBasis> basis) {
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const int n = basis->dots();
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::uint64_t s = basis->state(static_cast<std::size_t>(col));
    for (int from = 0; from < n; ++from) {
      if (((s >> from) & 1U) == 0) continue;
      for (int to = 0; to < n; ++to) {
        if (((s >> to) & 1U) != 0) continue;
        const std::uint64_t target = s ^ (std::uint64_t{1} << from) ^ (std::uint64_t{1} << to);
        h(static_cast<Eigen::Index>(basis->index_of(target)), col) = 1.0;
      }
    }
  }
  return {std::move(basis), std::move(h)};
}

SectorState initial_state(std::shared_ptr<const SectorBasis> basis) {
  const int n = basis->dots();
  const int m = basis->excitations();
  const std::uint64_t config = m == 0 ? 0 : ((std::uint64_t{1} << m) - 1) << (n - m);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(basis->index_of(config))) = 1.0;
  return {std::move(basis), std::move(amps)};
}

Propagator::Propagator(const SectorHamiltonian& hamiltonian) : basis_(hamiltonian.basis) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.matrix);
  if (solver.info() != Eigen::Success) throw NumericError("Propagator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  const auto psi0 = initial_state(basis_);
  initial_in_eigenbasis_ = eigenvectors_.transpose() * psi0.amplitudes.real();
}

SectorState Propagator::evolve(const SectorState& state, double kt) const {
  const Eigen::VectorXcd in_eigenbasis = eigenvectors_.transpose().cast<std::complex<double>>() * state.amplitudes;
  Eigen::VectorXcd phased(in_eigenbasis.size());
  for (Eigen::Index i = 0; i < phased.size(); ++i) {
    phased(i) = std::polar(1.0, -eigenvalues_(i) * kt) * in_eigenbasis(i);
  }
  return {basis_, eigenvectors_.cast<std::complex<double>>() * phased};
}

SectorState Propagator::evolve_initial(double kt) const {
  Eigen::VectorXcd phased(initial_in_eigenbasis_.size());
  for (Eigen::Index i = 0; i < phased.size(); ++i) {
    phased(i) = std::polar(initial_in_eigenbasis_(i), -eigenvalues_(i) * kt);
  }
  return {basis_, eigenvectors_.cast<std::complex<double>>() * phased};
}

SectorState evolve(const SectorHamiltonian& hamiltonian, double kt) {
  return Propagator(hamiltonian).evolve_initial(kt);
}

std::vector<double> reduced_spectrum(const SectorState& state, int cut) {
  const SectorBasis& basis = *state.basis;
  const int n = basis.dots();
  if (cut < 0 || cut > n) throw DomainError("reduced_spectrum: cut must lie in [0, N]");
  const int rest = n - cut;
  const std::uint64_t b_mask = (std::uint64_t{1} << rest) - 1;

  // rho_A is block diagonal in the number of excitations inside A. Within a
  // block, rho = Psi Psi^dagger with Psi indexed by (A config, B config).
  struct Block {
    std::map<std::uint64_t, Eigen::Index> rows;
    std::map<std::uint64_t, Eigen::Index> cols;
    std::vector<std::tuple<Eigen::Index, Eigen::Index, std::complex<double>>> entries;
  };
  std::map<int, Block> blocks;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::complex<double> amp = state.amplitudes(static_cast<Eigen::Index>(i));
    if (amp == std::complex<double>{}) continue;
    const std::uint64_t s = basis.state(i);
    const std::uint64_t a = s >> rest;
    const std::uint64_t b = s & b_mask;
    Block& blk = blocks[std::popcount(a)];
    const auto r = blk.rows.try_emplace(a, static_cast<Eigen::Index>(blk.rows.size())).first->second;
    const auto c = blk.cols.try_emplace(b, static_cast<Eigen::Index>(blk.cols.size())).first->second;
    blk.entries.emplace_back(r, c, amp);
  }

  std::vector<double> eigs;
  for (auto& [count, blk] : blocks) {
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(blk.rows.size()),
                                                  static_cast<Eigen::Index>(blk.cols.size()));
    for (const auto& [r, c, amp] : blk.entries) psi(r, c) = amp;
    const Eigen::MatrixXcd rho = psi * psi.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("reduced_spectrum: eigensolver failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      double v = solver.eigenvalues()(i);
      if (v < 0.0) {
        if (v < -kClipTolerance) throw NumericError("reduced_spectrum: negative eigenvalue " + std::to_string(v));
        v = 0.0;
      }
      eigs.push_back(v);
    }
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

double reduced_entropy(const SectorState& state, int cut) {
  double h = 0.0;
  for (double p : reduced_spectrum(state, cut)) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double expectation_energy(const SectorHamiltonian& hamiltonian, const SectorState& state) {
  const Eigen::VectorXcd h_psi = hamiltonian.matrix.cast<std::complex<double>>() * state.amplitudes;
  return state.amplitudes.dot(h_psi).real();
}

double oracle_entanglement(int dots, int excitations, double kt, std::size_t max_dimension) {
  auto basis = std::make_shared<const SectorBasis>(dots, excitations, max_dimension);
  const Propagator propagator(build_hamiltonian(basis));
  return reduced_entropy(propagator.evolve_initial(kt), excitations);
}

}  // namespace qdent::oracle
