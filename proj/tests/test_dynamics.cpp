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


#include <cmath>
#include <memory>
#include <random>

#include <catch2/catch_amalgamated.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "stabgibbs/couplings.hpp"
#include "stabgibbs/dynamics.hpp"
#include "stabgibbs/spectral.hpp"

using namespace stabgibbs;
using Catch::Approx;

namespace {

std::shared_ptr<const StabilizerModel> ising(std::size_t n) {
  return std::make_shared<StabilizerModel>(make_ising_model(RingLattice(n)));
}

std::shared_ptr<const StabilizerModel> toric(std::size_t side) {
  return std::make_shared<StabilizerModel>(make_toric_model(TorusLattice(side)));
}

double max_diff(const DMat& a, const DMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

struct Setup {
  GibbsModel g;
  Superoperator l;
};

Setup setup(std::shared_ptr<const StabilizerModel> m, double beta, CouplingSet set) {
  GibbsModel g = gibbs_state(m, beta);
  Superoperator l = davies_lindbladian(g, coupling_operators(*m, set));
  return {std::move(g), std::move(l)};
}

double gap_of(const Setup& s) {
  const Superoperator m = master_hamiltonian(s.l, s.g);
  const SpMat neg = -m.matrix;
  SpectralOptions o;
  o.method = SolverMethod::blocks;
  return spectral_gap(neg, {master_kernel_vector(s.g)}, o).gap;
}

}  // namespace

TEST_CASE("evolution examples", "[dynamics]") {
  const Setup s = setup(ising(2), 1.0, CouplingSet::local_full);
  const Superoperator ls = schrodinger_adjoint(s.l);
  std::mt19937_64 rng(1);
  const DensityState rho = random_mixed_state(4, 2, rng);
  CHECK(max_diff(evolve(ls, rho, 0.0).matrix, rho.matrix) == 0.0);
  const DensityState sigma = gibbs_density(s.g);
  for (double t : {0.3, 2.0, 10.0}) CHECK(max_diff(evolve(ls, sigma, t).matrix, sigma.matrix) <= 1e-12);
  const std::vector<DMat> paulis = [] {
    std::vector<DMat> v;
    for (const auto& p : single_site_paulis(2)) v.push_back(p.to_dense());
    return v;
  }();
  const DMat gen = oracle::davies(oracle::ising_ring(2), paulis, 1.0).adjoint();
  const DMat ref = oracle::unvec((0.7 * gen).exp() * oracle::vec(rho.matrix), 4);
  CHECK(max_diff(evolve(ls, rho, 0.7).matrix, ref) <= 1e-8);
  EvolveOptions krylov;
  krylov.dense_limit = 0;
  CHECK(max_diff(evolve(ls, rho, 0.7, krylov).matrix, ref) <= 1e-8);
  CHECK_THROWS_AS(evolve(s.l, rho, 1.0), InvalidArgument);
}

TEST_CASE("semigroup, trace and positivity", "[dynamics][property]") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (std::size_t n : {2u, 3u}) {
    const Setup s = setup(ising(n), 0.8, CouplingSet::with_global);
    const Superoperator ls = schrodinger_adjoint(s.l);
    EvolveOptions krylov;
    krylov.dense_limit = 0;
    for (const EvolveOptions& opt : {EvolveOptions{}, krylov}) {
      for (int rep = 0; rep < 4; ++rep) {
        const DensityState rho = random_pure_state(s.g.dim(), rng);
        const double a = u(rng), b = u(rng);
        const DensityState two_step = evolve(ls, evolve(ls, rho, a, opt), b, opt);
        const DensityState one_step = evolve(ls, rho, a + b, opt);
        CHECK(max_diff(two_step.matrix, one_step.matrix) <= 1e-8);
        CHECK(std::abs(one_step.matrix.trace() - 1.0) <= 1e-9);
        CHECK(max_diff(one_step.matrix, one_step.matrix.adjoint()) <= 1e-10);
        CHECK(one_step.min_eigenvalue() >= -1e-8);
      }
    }
  }
}

TEST_CASE("spectral propagator agrees with the exponential", "[dynamics]") {
  const Setup s = setup(ising(3), 1.2, CouplingSet::with_global);
  const SpectralPropagator prop(master_hamiltonian(s.l, s.g), s.g);
  const Superoperator ls = schrodinger_adjoint(s.l);
  std::mt19937_64 rng(4);
  const DensityState rho = random_mixed_state(8, 3, rng);
  for (double t : {0.0, 0.4, 3.0}) {
    const DensityState a = prop(rho, t), b = evolve(ls, rho, t);
    CHECK(max_diff(a.matrix, b.matrix) <= 1e-10);
    CHECK(prop.chi2(rho, t) == Approx(chi2_divergence(b, s.g)).epsilon(1e-8).margin(1e-14));
  }
}

TEST_CASE("chi2 divergence", "[dynamics]") {
  const GibbsModel g = gibbs_state(ising(3), 1.0);
  CHECK(chi2_divergence(gibbs_density(g), g) == Approx(0.0).margin(1e-15));
  std::mt19937_64 rng(6);
  const GibbsModel g0 = gibbs_state(ising(2), 0.0);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityState rho = random_mixed_state(4, 2, rng);
    const double purity = (rho.matrix * rho.matrix).trace().real();
    CHECK(chi2_divergence(rho, g0) == Approx(4.0 * purity - 1.0).epsilon(1e-12));
  }
  CHECK(chi2_divergence(random_pure_state(4, rng), g0) == Approx(3.0).epsilon(1e-12));
  const GibbsModel frozen = gibbs_state(ising(2), 500.0);
  CHECK(chi2_divergence(DensityState::maximally_mixed(4), frozen) > 1e300);
}

TEST_CASE("trace distance", "[dynamics][property]") {
  const DensityState a = DensityState::basis_state(4, 0), b = DensityState::basis_state(4, 3);
  CHECK(trace_distance(a, a) == Approx(0.0).margin(1e-15));
  CHECK(trace_distance(a, b) == Approx(1.0).epsilon(1e-14));
  const GibbsModel g = gibbs_state(ising(3), 0.9);
  const DensityState sigma = gibbs_density(g);
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityState rho = rep % 2 ? random_pure_state(8, rng) : random_mixed_state(8, 3, rng);
    CHECK(trace_distance(rho, sigma) <= std::sqrt(chi2_divergence(rho, g)) + 1e-12);
  }
  const GibbsModel frozen = gibbs_state(ising(3), 500.0);
  const DensityState ground = ground_space_state(frozen);
  CHECK(std::abs(ground.matrix.trace() - 1.0) <= 1e-14);
  CHECK(trace_distance(ground, gibbs_density(frozen)) <= 1e-12);
}

TEST_CASE("density state validation", "[dynamics]") {
  DMat bad = DMat::Identity(2, 2);
  CHECK_THROWS_AS(DensityState(bad).validate(), InvalidArgument);
  DMat neg = DMat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityState(neg).validate(), InvalidArgument);
  std::mt19937_64 rng(3);
  CHECK_NOTHROW(random_pure_state(16, rng).validate());
  CHECK_NOTHROW(random_mixed_state(16, 4, rng).validate());
  CHECK_NOTHROW(DensityState::maximally_mixed(16).validate());
}

TEST_CASE("mixing traces", "[dynamics]") {
  const Setup s = setup(ising(4), 2.0, CouplingSet::with_global);
  const double gap = gap_of(s);
  const Evolver ev(schrodinger_adjoint(s.l));
  const auto grid = uniform_grid(10.0 / gap, 50);
  const EvolutionTrace flat = mixing_trace(ev, gibbs_density(s.g), s.g, grid, gap);
  for (double c : flat.chi2) CHECK(c <= 1e-20);
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 3; ++rep) {
    const EvolutionTrace tr = mixing_trace(ev, random_pure_state(16, rng), s.g, grid, gap);
    CHECK(tr.bound_ok);
    CHECK(tr.monotone);
    CHECK(tr.fitted_rate >= 2.0 * gap * 0.95);
    const double eps = 1e-2;
    const double t_mix = mixing_time(tr, eps);
    REQUIRE(std::isfinite(t_mix));
    CHECK(t_mix <= mixing_time_bound(tr.chi2_initial, eps, gap) * 1.05 + grid[1]);
    CHECK(tr.table().num_rows() == 50);
    CHECK(tr.summary().contains("log_worst_case_chi2"));
  }
  const DensityState far = DensityState::basis_state(16, 5);
  CHECK_THROWS_AS(mixing_trace(ev, far, s.g, grid, 10.0 * gap), NumericalError);
  MixingOptions lenient;
  lenient.throw_on_violation = false;
  CHECK_FALSE(mixing_trace(ev, far, s.g, grid, 10.0 * gap, lenient).bound_ok);
}

TEST_CASE("toric relaxation without global jumps stalls at low temperature", "[dynamics]") {
  auto m = toric(2);
  const DensityState psi = DensityState::basis_state(256, 0);
  const auto grid = uniform_grid(10.0, 11);
  double rate[2];
  int k = 0;
  for (auto set : {CouplingSet::local_only, CouplingSet::gapped}) {
    const Setup s = setup(m, 4.0, set);
    const SpectralPropagator prop(master_hamiltonian(s.l, s.g), s.g);
    MixingOptions lenient;
    lenient.throw_on_violation = false;
    rate[k++] = mixing_trace(prop, psi, s.g, grid, 0.0, lenient).fitted_rate;
  }
  CHECK(rate[0] < 1e-2 * rate[1]);
  CHECK(rate[1] > 0.5);
}
