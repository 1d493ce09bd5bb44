// Copyright 2026 The stabgibbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef STABGIBBS_DYNAMICS_HPP
#define STABGIBBS_DYNAMICS_HPP

#include <map>
#include <mutex>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "stabgibbs/davies.hpp"
#include "stabgibbs/io.hpp"

namespace stabgibbs {

/// Hermitian, positive, unit-trace matrix in a model's working basis.
struct DensityState {
  DMat matrix;

  DensityState() = default;
  explicit DensityState(DMat m) : matrix(std::move(m)) {}

  Index dim() const { return matrix.rows(); }
  // Throws InvalidArgument unless hermitian and unit trace to tol and
  // eigenvalues >= -100 tol.
  void validate(double tol = 1e-10) const;
  double min_eigenvalue() const;

  static DensityState maximally_mixed(Index dim);
  static DensityState pure(const DVec& psi);
  static DensityState basis_state(Index dim, Index k);
};

// Haar-random pure state (first column of Q from a Gaussian QR).
DensityState random_pure_state(Index dim, std::mt19937_64& rng);
// Ginibre mixed state G G^dag / Tr of rank r.
DensityState random_mixed_state(Index dim, Index rank, std::mt19937_64& rng);
DensityState gibbs_density(const GibbsModel& model);
// Uniform mixture over the lowest-energy working-basis states.
DensityState ground_space_state(const GibbsModel& model, double tol = 1e-9);

struct EvolveOptions {
  Index dense_limit = 256;  // operator dimension for the dense exponential
  Index krylov_dim = 30;
  double tol = 1e-9;
};

/// Applies exp(t L) for a Schroedinger-picture generator. Dense
/// exponentials are cached per time step.
class Evolver {
 public:
  explicit Evolver(Superoperator l, EvolveOptions opt = {});
  DensityState operator()(const DensityState& rho, double t) const;
  const Superoperator& generator() const { return l_; }
  // Largest local error estimate of the last Krylov run.
  double last_error() const { return last_error_; }

 private:
  DVec krylov(const DVec& v, double t) const;
  Superoperator l_;
  EvolveOptions opt_;
  mutable std::mutex mu_;
  mutable std::map<double, DMat> cache_;
  mutable double last_error_ = 0.0;
};

DensityState evolve(const Superoperator& l, const DensityState& rho0, double t, const EvolveOptions& opt = {});

/// exp(t L^dag) through eigendecompositions of the connected components of
/// the master Hamiltonian; components are diagonalised on first use.
class SpectralPropagator {
 public:
  SpectralPropagator(const Superoperator& master, const GibbsModel& model);
  DensityState operator()(const DensityState& rho, double t) const;
  double chi2(const DensityState& rho, double t) const;
  Index num_components() const { return static_cast<Index>(groups_.size()); }

 private:
  struct Block {
    DMat vectors;
    DVecR values;
  };
  DVec evolve_scaled(const DVec& y, double t) const;
  const Block& block(std::size_t g) const;

  SpMat master_;
  DVecR scale_;     // (sigma_i sigma_j)^{1/4} per vec index
  DVec kernel_;     // vec(sqrt(sigma))
  Index d_ = 0;
  std::vector<std::vector<Index>> groups_;
  std::vector<Index> group_of_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, Block> blocks_;
};

// Tr[(rho - sigma) sigma^{-1/2} (rho - sigma) sigma^{-1/2}]; sigma diagonal.
double chi2_divergence(const DensityState& rho, const GibbsModel& model);
double trace_distance(const DensityState& a, const DensityState& b);

struct EvolutionTrace {
  std::vector<double> times, chi2, trace_dist;
  double alpha = 0.0;             // gap the bound is tested against
  double fitted_rate = 0.0;       // decay rate of chi2 from the tail
  double chi2_initial = 0.0;
  double log_worst_case_chi2 = 0.0;  // N log 2 + beta |H|
  double max_bound_ratio = 0.0;   // max_t chi2(t) / (chi2(0) exp(-2 alpha t))
  bool bound_ok = true;
  bool monotone = true;

  CsvTable table() const;
  nlohmann::json summary() const;
};

struct MixingOptions {
  double bound_slack = 1e-6;
  double absolute_slack = 1e-12;  // chi2 below this never counts as a violation
  double monotone_slack = 1e-9;
  bool throw_on_violation = true;
};

EvolutionTrace mixing_trace(const Evolver& evolver, const DensityState& rho0, const GibbsModel& model,
                            const std::vector<double>& grid, double alpha, const MixingOptions& opt = {});
EvolutionTrace mixing_trace(const SpectralPropagator& prop, const DensityState& rho0, const GibbsModel& model,
                            const std::vector<double>& grid, double alpha, const MixingOptions& opt = {});

// First grid time with trace distance <= eps, or NaN.
double mixing_time(const EvolutionTrace& trace, double eps);
// log(chi2(0) / eps^2) / (2 alpha).
double mixing_time_bound(double chi2_initial, double eps, double alpha);

std::vector<double> uniform_grid(double t_max, std::size_t points);

}  // namespace stabgibbs

#endif  // STABGIBBS_DYNAMICS_HPP
