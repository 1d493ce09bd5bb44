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


#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "stabgibbs/couplings.hpp"
#include "stabgibbs/davies.hpp"
#include "stabgibbs/dynamics.hpp"
#include "stabgibbs/sectors.hpp"
#include "stabgibbs/spectral.hpp"
#include "stabgibbs/stair.hpp"

using namespace stabgibbs;

namespace {

std::shared_ptr<const StabilizerModel> ising(std::size_t n) {
  return std::make_shared<StabilizerModel>(make_ising_model(RingLattice(n)));
}

std::shared_ptr<const StabilizerModel> toric(std::size_t side) {
  return std::make_shared<StabilizerModel>(make_toric_model(TorusLattice(side)));
}

void BM_PauliProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  PauliString a = PauliString::identity(n), b = PauliString::identity(n);
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t q = 0; q < n; ++q) {
    a.set_x(q, bit(rng));
    a.set_z(q, bit(rng));
    b.set_x(q, bit(rng));
    b.set_z(q, bit(rng));
  }
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_PauliProduct)->Arg(8)->Arg(64)->Arg(512);

void BM_DaviesIsing(benchmark::State& state) {
  auto m = ising(static_cast<std::size_t>(state.range(0)));
  const GibbsModel g = gibbs_state(m, 1.0);
  const auto couplings = coupling_operators(*m, CouplingSet::with_global);
  for (auto _ : state) benchmark::DoNotOptimize(davies_lindbladian(g, couplings).matrix.nonZeros());
}
BENCHMARK(BM_DaviesIsing)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DaviesToric(benchmark::State& state) {
  auto m = toric(2);
  const GibbsModel g = gibbs_state(m, 2.0);
  const auto couplings = coupling_operators(*m, CouplingSet::gapped);
  for (auto _ : state) benchmark::DoNotOptimize(davies_lindbladian(g, couplings).matrix.nonZeros());
}
BENCHMARK(BM_DaviesToric)->Unit(benchmark::kMillisecond);

void BM_DiagonalSectorToric3(benchmark::State& state) {
  auto m = toric(3);
  const GibbsModel g = gibbs_state(m, 3.0);
  const auto couplings = local_subset(*m);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_sector_generator(g, couplings).generator.nonZeros());
}
BENCHMARK(BM_DiagonalSectorToric3)->Unit(benchmark::kMillisecond);

void BM_StairShiftInvert(benchmark::State& state) {
  const SpMatR h = stair_graph(static_cast<std::size_t>(state.range(0))).weighted_laplacian();
  SpectralOptions o;
  o.method = SolverMethod::shift_invert;
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(h, o).min_eigenvalue);
}
BENCHMARK(BM_StairShiftInvert)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_StairLanczos(benchmark::State& state) {
  const SpMatR h = stair_graph(static_cast<std::size_t>(state.range(0))).weighted_laplacian();
  SpectralOptions o;
  o.method = SolverMethod::lanczos;
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(h, o).min_eigenvalue);
}
BENCHMARK(BM_StairLanczos)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_BlockSpectrumToric(benchmark::State& state) {
  auto m = toric(2);
  const GibbsModel g = gibbs_state(m, 2.0);
  const Superoperator mh = master_hamiltonian(davies_lindbladian(g, coupling_operators(*m, CouplingSet::gapped)), g);
  const SpMat neg = -mh.matrix;
  SpectralOptions o;
  o.method = SolverMethod::blocks;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(neg, {}, o).gap);
}
BENCHMARK(BM_BlockSpectrumToric)->Unit(benchmark::kMillisecond);

void BM_KrylovEvolve(benchmark::State& state) {
  auto m = ising(static_cast<std::size_t>(state.range(0)));
  const GibbsModel g = gibbs_state(m, 1.0);
  const Superoperator ls = schrodinger_adjoint(davies_lindbladian(g, coupling_operators(*m, CouplingSet::with_global)));
  std::mt19937_64 rng(3);
  const DensityState rho = random_pure_state(g.dim(), rng);
  EvolveOptions o;
  o.dense_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(ls, rho, 0.5, o).matrix(0, 0));
}
BENCHMARK(BM_KrylovEvolve)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
