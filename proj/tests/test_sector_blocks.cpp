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
#include <limits>
#include <memory>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "stabgibbs/chain.hpp"
#include "stabgibbs/couplings.hpp"
#include "stabgibbs/sectors.hpp"
#include "stabgibbs/spectral.hpp"
#include "stabgibbs/stair.hpp"

using namespace stabgibbs;
using Catch::Approx;

namespace {

std::shared_ptr<const StabilizerModel> ising(std::size_t n) {
  return std::make_shared<StabilizerModel>(make_ising_model(RingLattice(n)));
}

std::shared_ptr<const StabilizerModel> toric(std::size_t side) {
  return std::make_shared<StabilizerModel>(make_toric_model(TorusLattice(side)));
}

double max_abs(const SpMatR& m) { return m.nonZeros() ? DMatR(m).cwiseAbs().maxCoeff() : 0.0; }

double lambda_min(const SpMatR& m) {
  if (m.rows() == 0) return INFINITY;
  Eigen::SelfAdjointEigenSolver<DMatR> es{DMatR(m), Eigen::EigenvaluesOnly};
  return es.eigenvalues()[0];
}

}  // namespace

TEST_CASE("logic and syndrome subalgebras commute", "[sectors]") {
  const LogicSyndromeSplit split = logic_syndrome_split(TorusLattice(2));
  CHECK(split.syndrome_dim_log2 == 6);
  for (const auto& a : split.magnetic) {
    for (const auto& b : split.electric) CHECK(a.commutes(b));
    for (const auto& b : split.logical1) CHECK(a.commutes(b));
    for (const auto& b : split.logical2) CHECK(a.commutes(b));
  }
  std::mt19937_64 rng(4);
  CHECK(split.verify_commutation(rng, 200));
}

TEST_CASE("snake flips reach only even plaquette syndromes", "[sectors]") {
  const TorusLattice lat(2);
  const auto snake = lat.snake_spins();
  std::set<unsigned> reached;
  for (unsigned subset = 0; subset < (1u << snake.size()); ++subset) {
    unsigned syndrome = 0;
    for (std::size_t k = 0; k < snake.size(); ++k) {
      if ((subset >> k) & 1u) {
        for (auto p : lat.plaquettes_of_edge(snake[k])) syndrome ^= 1u << p;
      }
    }
    CHECK(oracle::popcount(syndrome) % 2 == 0);
    reached.insert(syndrome);
  }
  CHECK(reached.size() == 8);
}

TEST_CASE("lambda sector classification", "[sectors]") {
  CHECK_THROWS_AS(LambdaSector(4, 0b0001), InvalidArgument);
  CHECK(all_lambda_sectors(4).size() == 8);
  for (const auto& sec : all_lambda_sectors(4)) {
    for (std::size_t j = 1; j < 4; ++j) {
      const bool a = (sec.mask() >> (j - 1)) & 1u, b = (sec.mask() >> j) & 1u;
      const PairClass expect = a && b ? PairClass::ab : (!a && !b ? PairClass::flip : PairClass::interaction);
      CHECK(sec.pair_class(j) == expect);
    }
  }
  const LambdaSector s = LambdaSector::from_list(4, {0, 1});
  CHECK(s.gamma(PairClass::ab) == std::vector<std::size_t>{1});
  CHECK(s.gamma(PairClass::interaction) == std::vector<std::size_t>{2});
  CHECK(s.gamma(PairClass::flip) == std::vector<std::size_t>{3});
}

TEST_CASE("lambda sector bases", "[sectors]") {
  const std::size_t n = 4;
  const GibbsModel g = gibbs_state(ising(n), 1.0);
  const Index d = g.dim();
  const SectorBasis diag = lambda_sector_basis(g, LambdaSector(n, 0b1111));
  CHECK(diag.vectors.cols() == 8);
  const SectorBasis flip = lambda_sector_basis(g, LambdaSector(n, 0));
  for (Index c = 0; c < diag.vectors.cols(); ++c) {
    for (SpMat::InnerIterator it(diag.vectors, c); it; ++it) CHECK(it.row() % d == it.row() / d);
    for (SpMat::InnerIterator it(flip.vectors, c); it; ++it) {
      const std::uint64_t ket = static_cast<std::uint64_t>(it.row() % d), bra = static_cast<std::uint64_t>(it.row() / d);
      CHECK(bonds_from_spins(ket ^ bra, n) == 0b1111);
    }
  }
  for (std::uint64_t s = 0; s < 8; ++s) {
    CHECK(spins_from_bonds(bonds_from_spins(s << 1, n), n) == s << 1);
  }
}

TEST_CASE("local block matrices", "[sectors]") {
  for (double beta : {0.0, 0.7, 3.0, std::numeric_limits<double>::infinity()}) {
    const DMatR f = local_block_matrix(BlockCase::flip, beta);
    CHECK(f(0, 0) == -1.0);
    CHECK(f(3, 3) == -1.0);
  }
  const double beta = 0.9, eta = std::exp(-2 * beta);
  const DMatR ab = local_block_matrix(BlockCase::ab, beta);
  CHECK(ab(0, 0) == Approx(-2 * eta * eta / (eta * eta + 1)).epsilon(1e-14));
  CHECK(ab(0, 3) == Approx(2 * eta / (eta * eta + 1)).epsilon(1e-14));
  CHECK(ab(3, 0) == Approx(2 * eta / (eta * eta + 1)).epsilon(1e-14));
  CHECK((local_block_matrix(BlockCase::interaction, 0.0) + DMatR::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  const DMatR ab_inf = local_block_matrix(BlockCase::ab, INFINITY);
  CHECK(ab_inf(0, 0) == 0.0);
  CHECK(ab_inf(3, 3) == -2.0);
}

TEST_CASE("restricted generator equals the tensor block assembly", "[sectors][property]") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto m = ising(n);
    for (double beta : {0.0, 1.0, 3.0}) {
      const GibbsModel g = gibbs_state(m, beta);
      const Superoperator l = davies_lindbladian(g, local_subset(*m));
      for (const auto& sec : all_lambda_sectors(n)) {
        const Restriction r = restrict_superoperator(l, lambda_sector_basis(g, sec), 1e-10);
        CHECK(r.leakage <= 1e-12);
        CHECK((r.dense().real() - tensor_sector_matrix(sec, beta)).cwiseAbs().maxCoeff() <= 1e-11);
        CHECK(r.dense().imag().cwiseAbs().maxCoeff() <= 1e-14);
        const SpMatR neg = -real_part(r.matrix);
        if (!sec.gamma(PairClass::interaction).empty()) CHECK(lambda_min(neg) >= 0.5 - 1e-10);
      }
    }
  }
}

TEST_CASE("identity superoperator restricts to identity", "[sectors]") {
  const GibbsModel g = gibbs_state(ising(3), 0.4);
  Superoperator id;
  id.hilbert_dim = g.dim();
  id.matrix = SpMat(g.dim() * g.dim(), g.dim() * g.dim());
  id.matrix.setIdentity();
  const SectorBasis b = lambda_sector_basis(g, LambdaSector(3, 0b001));
  const Restriction r = restrict_superoperator(id, b);
  CHECK((r.dense() - DMat::Identity(b.vectors.cols(), b.vectors.cols())).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(r.leakage <= 1e-14);
}

TEST_CASE("logical labels share one syndrome block", "[sectors]") {
  auto m = toric(2);
  const GibbsModel g = gibbs_state(m, 1.5);
  const Superoperator l = davies_lindbladian(g, local_subset(*m));
  const Restriction ref = restrict_superoperator(l, syndrome_sector_basis(g), 1e-10);
  CHECK(ref.matrix.rows() == 64 * 64);
  CHECK(SectorLabel::all().size() == 16);
  for (const auto& label : SectorLabel::all()) {
    const Restriction r = restrict_superoperator(l, logical_sector_basis(g, label), 1e-10);
    CHECK((r.dense() - ref.dense()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("leakage is detected for a non-invariant basis", "[sectors]") {
  auto m = toric(2);
  const GibbsModel g = gibbs_state(m, 1.0);
  const Superoperator l = davies_lindbladian(g, single_site_paulis(8));
  CHECK_THROWS_AS(restrict_superoperator(l, syndrome_sector_basis(g), 1e-10), NumericalError);
}

TEST_CASE("diagonal sector from label arithmetic", "[sectors][property]") {
  for (auto m : {ising(4), toric(2)}) {
    for (auto set : {CouplingSet::local_subset, CouplingSet::gapped}) {
      const GibbsModel g = gibbs_state(m, 2.0);
      const auto couplings = coupling_operators(*m, set);
      const DiagonalSector sec = diagonal_sector_generator(g, couplings);
      const Restriction r =
          restrict_superoperator(davies_lindbladian(g, couplings), diagonal_sector_basis(g, sec), 1e-10);
      CHECK((DMatR(sec.generator) - r.dense().real()).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(sec.logical_fixed == (set == CouplingSet::local_subset));
      const DVecR k = diagonal_sector_kernel(g, sec);
      CHECK((sec.generator * k).norm() <= 1e-12);
    }
  }
  for (Index s = 0; s < 16; ++s) {
    CHECK(abelian_state(abelian_vec_index(s, 16), 16) == s);
  }
  CHECK_FALSE(abelian_state(1, 16).has_value());
}

TEST_CASE("chain matrices at zero temperature", "[chain]") {
  CHECK_THROWS_AS(build_chain_K(1, 1.0), InvalidArgument);
  const ChainMatrices c2 = build_chain_K(2, INFINITY);
  const SpinSectorBasis s22(2, 2);
  REQUIRE(s22.dim() == 1);
  CHECK(DMatR(restrict_to_spin_sector(c2.K, s22))(0, 0) == 2.0);
  const DMatR sum = chain_transition_block() + chain_diagonal_block();
  CHECK((chain_local_block(INFINITY) - sum).cwiseAbs().maxCoeff() == 0.0);
  const ChainMatrices c4 = build_chain_K(4, INFINITY);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(spin_sector_leakage(c4.K, SpinSectorBasis(4, k)) == 0.0);
  const DMatR k4 = DMatR(c4.K);
  const SpinSectorBasis s1(4, 1), s3(4, 3);
  double cross = 0;
  for (auto a : s1.basis) {
    for (auto b : s3.basis) cross = std::max(cross, std::abs(k4(static_cast<Index>(a), static_cast<Index>(b))));
  }
  CHECK(cross == 0.0);
  const DMatR delta = DMatR(build_chain_K(6, 3.0).K - build_chain_K(6, INFINITY).K);
  Eigen::SelfAdjointEigenSolver<DMatR> es(delta, Eigen::EigenvaluesOnly);
  const double norm = es.eigenvalues().cwiseAbs().maxCoeff();
  CHECK(norm <= 2.0 * 6.0 * std::exp(-6.0));
  CHECK(norm >= 0.1 * std::exp(-6.0));
}

TEST_CASE("chain restricted to two signs is the stair laplacian", "[chain][property]") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const SpMatR k = two_sign_block(build_chain_K(n, INFINITY).K, n);
    CHECK(max_abs(k - stair_graph(n - 1).weighted_laplacian()) == 0.0);
  }
}

TEST_CASE("spin sector monotonicity", "[chain][property]") {
  std::vector<std::vector<double>> lam(11);
  for (std::size_t n = 1; n <= 10; ++n) {
    const SpMatR k = n >= 2 ? build_chain_K(n, INFINITY).K : SpMatR(2, 2);
    for (std::size_t j = 0; j <= n; ++j) lam[n].push_back(lambda_min(restrict_to_spin_sector(k, SpinSectorBasis(n, j))));
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t j = 2; j <= n - 1; ++j) {
      CHECK(lam[n][j] >= std::min(lam[n - 1][j], lam[n - 1][j - 1]) - 1e-10);
    }
    CHECK(std::abs(lam[n][0]) <= 1e-12);
    CHECK(std::abs(lam[n][1]) <= 1e-12);
  }
}

TEST_CASE("comb matrices", "[chain]") {
  const TorusLattice l2(2);
  const ChainMatrices c2 = build_comb_K(l2, INFINITY);
  CHECK(c2.adjacencies.size() == l2.comb_spins().size());
  DVecR plus = DVecR::Zero(c2.K.rows());
  plus[0] = 1.0;
  CHECK((c2.K * plus).norm() == 0.0);
  const TorusLattice l3(3);
  const ChainMatrices c3 = build_comb_K(l3, 2.0);
  std::vector<int> touch(l3.num_stars());
  for (auto [a, b] : c3.adjacencies) {
    ++touch[a];
    ++touch[b];
  }
  CHECK(*std::max_element(touch.begin(), touch.end()) == 3);
  const ChainMatrices c3_frozen = build_comb_K(l3, INFINITY);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(spin_sector_leakage(c3_frozen.K, SpinSectorBasis(l3.num_stars(), k)) == 0.0);
  CHECK(spin_sector_leakage(c3.K, SpinSectorBasis(l3.num_stars(), 2)) > 0.0);
  for (const auto& path : l3.leaf_paths()) {
    const auto sites = path_sites(l3, path);
    const ChainMatrices chain = build_chain_K(sites.size(), 2.0);
    const SpinSectorBasis two(sites.size(), 2);
    std::vector<std::pair<std::size_t, std::size_t>> induced;
    for (auto [a, b] : c3.adjacencies) {
      const auto ia = std::find(sites.begin(), sites.end(), a), ib = std::find(sites.begin(), sites.end(), b);
      if (ia != sites.end() && ib != sites.end()) {
        induced.emplace_back(static_cast<std::size_t>(ia - sites.begin()), static_cast<std::size_t>(ib - sites.begin()));
      }
    }
    CHECK(induced.size() == sites.size() - 1);
    const ChainMatrices from_comb = build_graph_K(sites.size(), induced, 2.0);
    CHECK(max_abs(restrict_to_spin_sector(from_comb.K, two) - restrict_to_spin_sector(chain.K, two)) <= 1e-15);
  }
}
