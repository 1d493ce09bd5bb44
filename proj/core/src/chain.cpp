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


#include "stabgibbs/chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "stabgibbs/stair.hpp"

namespace stabgibbs {

DMatR chain_transition_block() {
  DMatR k = DMatR::Zero(4, 4);
  k(1, 1) = k(2, 2) = 1.0;
  k(1, 2) = k(2, 1) = -1.0;
  return k;
}

DMatR chain_diagonal_block() {
  DMatR k = DMatR::Zero(4, 4);
  k(3, 3) = 2.0;
  return k;
}

DMatR chain_local_block(double beta) {
  if (!(beta >= 0.0)) throw InvalidArgument("chain_local_block: beta must be >= 0");
  DMatR k = chain_transition_block() + chain_diagonal_block();
  if (std::isinf(beta)) return k;
  const double eta = std::exp(-2.0 * beta);
  const double c = 2.0 * eta * eta / (eta * eta + 1.0);
  const double o = 2.0 * eta / (eta * eta + 1.0);
  k(0, 0) += c;
  k(3, 3) -= c;
  k(0, 3) -= o;
  k(3, 0) -= o;
  return k;
}

ChainMatrices build_graph_K(std::size_t n_sites, std::vector<std::pair<std::size_t, std::size_t>> adjacencies,
                            double beta) {
  if (n_sites < 2 || n_sites > 26) throw InvalidArgument("build_graph_K: need 2..26 sites");
  ChainMatrices c;
  c.n = n_sites;
  c.beta = beta;
  c.k_T = chain_transition_block();
  c.k_D = chain_diagonal_block();
  const DMatR blk = chain_local_block(beta);
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  std::vector<TripletR> t;
  t.reserve(dim * adjacencies.size() * 2);
  for (const auto& [a, b] : adjacencies) {
    if (a >= n_sites || b >= n_sites || a == b) throw InvalidArgument("build_graph_K: bad adjacency");
    for (std::uint64_t s = 0; s < dim; ++s) {
      const int la = static_cast<int>(2 * ((s >> a) & 1u) + ((s >> b) & 1u));
      for (int lb = 0; lb < 4; ++lb) {
        const double v = blk(lb, la);
        if (v == 0.0) continue;
        std::uint64_t r = s & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        r |= (std::uint64_t((lb >> 1) & 1) << a) | (std::uint64_t(lb & 1) << b);
        t.emplace_back(static_cast<Index>(r), static_cast<Index>(s), v);
      }
    }
  }
  c.K.resize(static_cast<Index>(dim), static_cast<Index>(dim));
  c.K.setFromTriplets(t.begin(), t.end());
  c.K.prune(0.0, 0.0);
  c.adjacencies = std::move(adjacencies);
  return c;
}

ChainMatrices build_chain_K(std::size_t n, double beta) {
  if (n < 2) throw InvalidArgument("build_chain_K: n must be >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i + 1 < n; ++i) adj.emplace_back(i, i + 1);
  return build_graph_K(n, std::move(adj), beta);
}

ChainMatrices build_comb_K(const TorusLattice& lattice, double beta) {
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (const auto& e : lattice.comb_order()) adj.emplace_back(e.stars[0], e.stars[1]);
  return build_graph_K(lattice.num_stars(), std::move(adj), beta);
}

std::vector<std::size_t> path_sites(const TorusLattice& lattice, const std::vector<std::size_t>& edges) {
  if (edges.empty()) return {};
  auto first = lattice.stars_of_edge(edges.front());
  std::size_t cur = first[0];
  if (edges.size() > 1) {
    const auto second = lattice.stars_of_edge(edges[1]);
    if (cur == second[0] || cur == second[1]) cur = first[1];
  }
  std::vector<std::size_t> out{cur};
  for (std::size_t e : edges) {
    const auto st = lattice.stars_of_edge(e);
    if (st[0] == cur) cur = st[1];
    else if (st[1] == cur) cur = st[0];
    else throw InvalidArgument("path_sites: edges do not form a path");
    out.push_back(cur);
  }
  return out;
}

SpinSectorBasis::SpinSectorBasis(std::size_t n_sites, std::size_t minus_count) : n(n_sites), k(minus_count) {
  if (n_sites > 40 || minus_count > n_sites) throw InvalidArgument("SpinSectorBasis: bad (n, k)");
  if (k == 0) {
    basis.push_back(0);
    return;
  }
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    basis.push_back(s);
    const std::uint64_t c = s & -s;  // next combination with the same popcount
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

Index SpinSectorBasis::index_of(std::uint64_t config) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), config);
  if (it == basis.end() || *it != config) return -1;
  return static_cast<Index>(it - basis.begin());
}

SpMatR restrict_to_spin_sector(const SpMatR& K, const SpinSectorBasis& sector) {
  std::vector<TripletR> t;
  for (Index c = 0; c < sector.dim(); ++c) {
    for (SpMatR::InnerIterator it(K, static_cast<Index>(sector.basis[c])); it; ++it) {
      const Index r = sector.index_of(static_cast<std::uint64_t>(it.row()));
      if (r >= 0) t.emplace_back(r, c, it.value());
    }
  }
  SpMatR out(sector.dim(), sector.dim());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SpMatR two_sign_block(const SpMatR& K, std::size_t n) {
  if (n < 3) throw InvalidArgument("two_sign_block: n must be >= 3");
  const SpinSectorBasis sector(n, 2);
  std::vector<Index> pos(sector.basis.size());
  for (std::size_t a = 0; a < sector.basis.size(); ++a) {
    const std::uint64_t c = sector.basis[a];
    const auto i = static_cast<std::size_t>(std::countr_zero(c)) + 1;
    const auto j = static_cast<std::size_t>(63 - std::countl_zero(c)) + 1;
    pos[a] = stair_vertex_index(n - 1, i, j);
  }
  const SpMatR r = restrict_to_spin_sector(K, sector);
  std::vector<TripletR> t;
  for (Index c = 0; c < r.outerSize(); ++c) {
    for (SpMatR::InnerIterator it(r, c); it; ++it) t.emplace_back(pos[it.row()], pos[c], it.value());
  }
  SpMatR out(r.rows(), r.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

double spin_sector_leakage(const SpMatR& K, const SpinSectorBasis& sector) {
  double worst = 0.0;
  for (std::uint64_t s : sector.basis) {
    for (SpMatR::InnerIterator it(K, static_cast<Index>(s)); it; ++it) {
      if (std::popcount(static_cast<std::uint64_t>(it.row())) != static_cast<int>(sector.k)) {
        worst = std::max(worst, std::abs(it.value()));
      }
    }
  }
  return worst;
}

SpMatR restrict_to_sites(const SpMatR& K, std::size_t n_sites, const std::vector<std::size_t>& sites) {
  const std::size_t m = sites.size();
  if (m == 0 || m > n_sites) throw InvalidArgument("restrict_to_sites: bad site list");
  std::uint64_t site_mask = 0;
  for (std::size_t s : sites) site_mask |= std::uint64_t{1} << s;
  auto embed = [&](std::uint64_t local) {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < m; ++i) g |= ((local >> i) & 1u) << sites[i];
    return g;
  };
  auto project = [&](std::uint64_t global) {
    std::uint64_t l = 0;
    for (std::size_t i = 0; i < m; ++i) l |= ((global >> sites[i]) & 1u) << i;
    return l;
  };
  const Index d = Index{1} << m;
  std::vector<TripletR> t;
  for (Index c = 0; c < d; ++c) {
    for (SpMatR::InnerIterator it(K, static_cast<Index>(embed(static_cast<std::uint64_t>(c)))); it; ++it) {
      const auto row = static_cast<std::uint64_t>(it.row());
      if (row & ~site_mask) continue;
      t.emplace_back(static_cast<Index>(project(row)), c, it.value());
    }
  }
  SpMatR out(d, d);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

}  // namespace stabgibbs
