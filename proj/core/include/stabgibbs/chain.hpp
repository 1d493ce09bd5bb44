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


#ifndef STABGIBBS_CHAIN_HPP
#define STABGIBBS_CHAIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "stabgibbs/lattice.hpp"
#include "stabgibbs/types.hpp"

namespace stabgibbs {

/// Classical Glauber matrix of sigma^x-type flips on a graph of bond sites.
/// Site s is bit s of the configuration; a set bit is a "-" sign.
struct ChainMatrices {
  std::size_t n = 0;
  double beta = 0.0;
  DMatR k_T;  // zero-temperature hopping block
  DMatR k_D;  // zero-temperature pair-annihilation block
  SpMatR K;
  std::vector<std::pair<std::size_t, std::size_t>> adjacencies;
};

DMatR chain_transition_block();
DMatR chain_diagonal_block();
// Negated ab block at inverse temperature beta (k_T + k_D at beta = inf).
DMatR chain_local_block(double beta);

ChainMatrices build_graph_K(std::size_t n_sites, std::vector<std::pair<std::size_t, std::size_t>> adjacencies,
                            double beta);
// Open chain 0-1-...-(n-1).
ChainMatrices build_chain_K(std::size_t n, double beta);
// Blocks on the star pairs joined by each comb spin; sites are stars.
ChainMatrices build_comb_K(const TorusLattice& lattice, double beta);

// Stars visited by a comb edge path, in order.
std::vector<std::size_t> path_sites(const TorusLattice& lattice, const std::vector<std::size_t>& edges);

/// Configurations of n sites with exactly k "-" signs, in increasing bit order.
struct SpinSectorBasis {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> basis;

  SpinSectorBasis(std::size_t n_sites, std::size_t minus_count);
  Index dim() const { return static_cast<Index>(basis.size()); }
  // Position of a configuration, or -1.
  Index index_of(std::uint64_t config) const;
};

SpMatR restrict_to_spin_sector(const SpMatR& K, const SpinSectorBasis& sector);
// Two-sign block of an n-site chain, rows ordered as stair_graph(n - 1) vertices:
// signs on sites i - 1 and j - 1 map to vertex (i, j).
SpMatR two_sign_block(const SpMatR& K, std::size_t n);
// Off-sector weight of K applied to the sector (zero when invariant).
double spin_sector_leakage(const SpMatR& K, const SpinSectorBasis& sector);

// Restriction of a site-graph operator to a subset of sites with every other
// site held at "+"; new site order follows `sites`.
SpMatR restrict_to_sites(const SpMatR& K, std::size_t n_sites, const std::vector<std::size_t>& sites);

}  // namespace stabgibbs

#endif  // STABGIBBS_CHAIN_HPP
