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

#ifndef STABGIBBS_LATTICE_HPP
#define STABGIBBS_LATTICE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace stabgibbs {

/// Periodic chain of N spins; bond j joins sites j and j+1 mod N.
struct RingLattice {
  std::size_t n_sites = 0;
  double coupling = 1.0;

  RingLattice(std::size_t n, double j = 1.0);
  std::size_t num_bonds() const { return n_sites; }
  std::pair<std::size_t, std::size_t> bond(std::size_t j) const {
    return {j, (j + 1) % n_sites};
  }
  nlohmann::json to_json() const;
};

/// Spin on the snake joining plaquettes snake[pos-1] and snake[pos].
struct SnakeEntry {
  std::size_t spin;
  std::size_t position;  // 1 .. L^2-1 along the snake
  std::array<std::size_t, 2> plaquettes;
};

/// Spin on the comb joining two stars.
struct CombEntry {
  std::size_t spin;
  std::array<std::size_t, 2> stars;
};

/// L x L torus with spins on edges.
///
/// Vertices and cells are indexed r*L + c. Edge h(r,c) = 2(rL+c) joins
/// vertices (r,c) and (r,c+1); edge v(r,c) = 2(rL+c)+1 joins (r,c) and
/// (r+1,c). Cell (r,c) has corners (r,c), (r,c+1), (r+1,c), (r+1,c+1).
class TorusLattice {
 public:
  explicit TorusLattice(std::size_t side);

  std::size_t side() const { return L_; }
  std::size_t num_qubits() const { return 2 * L_ * L_; }
  std::size_t num_stars() const { return L_ * L_; }
  std::size_t num_plaquettes() const { return L_ * L_; }

  std::size_t h_edge(std::size_t r, std::size_t c) const;
  std::size_t v_edge(std::size_t r, std::size_t c) const;
  // Endpoint vertices of an edge.
  std::array<std::size_t, 2> edge_vertices(std::size_t e) const;

  const std::vector<std::array<std::size_t, 4>>& star_supports() const { return stars_; }
  const std::vector<std::array<std::size_t, 4>>& plaquette_supports() const { return plaqs_; }

  // Cells in snake order; snake_cells()[k] is plaquette k+1 in 1-based snake labels.
  const std::vector<std::size_t>& snake_cells() const { return snake_cells_; }
  const std::vector<SnakeEntry>& snake_order() const { return snake_; }
  const std::vector<CombEntry>& comb_order() const { return comb_; }
  std::vector<std::size_t> snake_spins() const;
  std::vector<std::size_t> comb_spins() const;
  const std::array<std::size_t, 2>& leftover_spins() const { return leftover_; }

  // Shortest comb paths between pairs of degree-one comb vertices.
  const std::vector<std::vector<std::size_t>>& leaf_paths() const { return leaf_paths_; }
  std::vector<std::size_t> comb_leaves() const;
  // Edge sequence of the unique comb path between two stars.
  std::vector<std::size_t> comb_path(std::size_t star_a, std::size_t star_b) const;
  // Edge sequence along the snake between two plaquettes.
  std::vector<std::size_t> snake_path(std::size_t plaq_a, std::size_t plaq_b) const;

  // Supports of the four logical strings.
  const std::vector<std::size_t>& xbar1_support() const { return xbar1_; }
  const std::vector<std::size_t>& zbar1_support() const { return zbar1_; }
  const std::vector<std::size_t>& xbar2_support() const { return xbar2_; }
  const std::vector<std::size_t>& zbar2_support() const { return zbar2_; }

  // Stars / plaquettes containing an edge (always two each).
  std::array<std::size_t, 2> stars_of_edge(std::size_t e) const;
  std::array<std::size_t, 2> plaquettes_of_edge(std::size_t e) const;

  nlohmann::json to_json() const;

 private:
  void build_supports();
  void build_snake();
  void build_comb();
  void build_logicals();
  void build_leaf_paths();

  std::size_t L_;
  std::vector<std::array<std::size_t, 4>> stars_;
  std::vector<std::array<std::size_t, 4>> plaqs_;
  std::vector<std::size_t> snake_cells_;
  std::vector<SnakeEntry> snake_;
  std::vector<CombEntry> comb_;
  std::array<std::size_t, 2> leftover_{};
  std::vector<std::vector<std::size_t>> leaf_paths_;
  std::vector<std::size_t> xbar1_, zbar1_, xbar2_, zbar2_;
};

/// Outcome of the combinatorial checks on a torus layout.
struct LayoutReport {
  bool stars_cover_edges_twice = false;
  bool plaquettes_cover_edges_twice = false;
  bool snake_comb_disjoint = false;
  bool snake_comb_cover_all_but_two = false;
  bool snake_avoids_zbar = false;
  bool comb_avoids_xbar = false;
  bool comb_is_spanning_tree = false;
  bool snake_is_hamiltonian_path = false;
  std::size_t leaf_path_count = 0;
  std::size_t max_leaf_path_length = 0;

  bool all_ok(std::size_t side) const;
};

LayoutReport check_layout(const TorusLattice& lattice);

}  // namespace stabgibbs

#endif  // STABGIBBS_LATTICE_HPP
