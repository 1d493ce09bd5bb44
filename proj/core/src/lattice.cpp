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

#include "stabgibbs/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stabgibbs/types.hpp"

namespace stabgibbs {

RingLattice::RingLattice(std::size_t n, double j) : n_sites(n), coupling(j) {
  if (n < 2) throw InvalidArgument("RingLattice: need at least 2 sites");
  if (!(j > 0.0)) throw InvalidArgument("RingLattice: coupling must be positive");
}

nlohmann::json RingLattice::to_json() const {
  nlohmann::json bonds = nlohmann::json::array();
  for (std::size_t j = 0; j < n_sites; ++j) {
    auto [a, b] = bond(j);
    bonds.push_back({a, b});
  }
  return {{"type", "ring"}, {"N", n_sites}, {"J", coupling}, {"bonds", bonds}};
}

TorusLattice::TorusLattice(std::size_t side) : L_(side) {
  if (side < 2) throw InvalidArgument("TorusLattice: side must be at least 2");
  build_supports();
  build_snake();
  build_comb();
  build_logicals();
  build_leaf_paths();
}

std::size_t TorusLattice::h_edge(std::size_t r, std::size_t c) const {
  return 2 * ((r % L_) * L_ + (c % L_));
}

std::size_t TorusLattice::v_edge(std::size_t r, std::size_t c) const {
  return 2 * ((r % L_) * L_ + (c % L_)) + 1;
}

std::array<std::size_t, 2> TorusLattice::edge_vertices(std::size_t e) const {
  const std::size_t cell = e / 2;
  const std::size_t r = cell / L_, c = cell % L_;
  if (e % 2 == 0) return {r * L_ + c, r * L_ + (c + 1) % L_};
  return {r * L_ + c, ((r + 1) % L_) * L_ + c};
}

void TorusLattice::build_supports() {
  stars_.resize(L_ * L_);
  plaqs_.resize(L_ * L_);
  for (std::size_t r = 0; r < L_; ++r) {
    for (std::size_t c = 0; c < L_; ++c) {
      stars_[r * L_ + c] = {h_edge(r, c), h_edge(r, c + L_ - 1), v_edge(r, c), v_edge(r + L_ - 1, c)};
      plaqs_[r * L_ + c] = {h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)};
    }
  }
}

// Boustrophedon: even cell rows run left to right, odd rows right to left.
void TorusLattice::build_snake() {
  snake_cells_.clear();
  for (std::size_t r = 0; r < L_; ++r) {
    for (std::size_t k = 0; k < L_; ++k) {
      const std::size_t c = (r % 2 == 0) ? k : L_ - 1 - k;
      snake_cells_.push_back(r * L_ + c);
    }
  }
  snake_.clear();
  for (std::size_t pos = 1; pos < snake_cells_.size(); ++pos) {
    const std::size_t a = snake_cells_[pos - 1], b = snake_cells_[pos];
    const std::size_t ra = a / L_, ca = a % L_, rb = b / L_, cb = b % L_;
    std::size_t spin;
    if (ra != rb) {
      spin = h_edge(rb, cb);
    } else if (cb == ca + 1) {
      spin = v_edge(ra, cb);
    } else {
      spin = v_edge(ra, ca);
    }
    snake_.push_back({spin, pos, {a, b}});
  }
}

// Spine on vertex column 0, one tooth per vertex row. Even rows r >= 2 give
// up h(r,0) to the snake and reach the spine through the wrap edge instead.
void TorusLattice::build_comb() {
  std::vector<std::size_t> spins;
  for (std::size_t r = 0; r + 1 < L_; ++r) spins.push_back(v_edge(r, 0));
  for (std::size_t r = 0; r < L_; ++r) {
    const bool shifted = (r >= 2 && r % 2 == 0);
    for (std::size_t k = 0; k + 1 < L_; ++k) spins.push_back(h_edge(r, shifted ? k + 1 : k));
  }
  std::sort(spins.begin(), spins.end());
  comb_.clear();
  for (std::size_t s : spins) comb_.push_back({s, edge_vertices(s)});
  leftover_ = {h_edge(0, L_ - 1), v_edge(L_ - 1, 0)};
  std::sort(leftover_.begin(), leftover_.end());
}

void TorusLattice::build_logicals() {
  zbar1_.clear();
  zbar2_.clear();
  xbar2_.clear();
  for (std::size_t c = 0; c < L_; ++c) zbar1_.push_back(h_edge(0, c));
  for (std::size_t r = 0; r < L_; ++r) zbar2_.push_back(v_edge(r, 0));
  for (std::size_t c = 0; c < L_; ++c) xbar2_.push_back(v_edge(L_ - 1, c));
  // Dual loop closed by h(0, L-1) and the snake between the two cells it separates.
  xbar1_ = snake_path(L_ - 1, (L_ - 1) * L_ + (L_ - 1));
  xbar1_.push_back(h_edge(0, L_ - 1));
  for (auto* v : {&zbar1_, &zbar2_, &xbar1_, &xbar2_}) std::sort(v->begin(), v->end());
}

std::vector<std::size_t> TorusLattice::snake_spins() const {
  std::vector<std::size_t> out;
  for (const auto& e : snake_) out.push_back(e.spin);
  return out;
}

std::vector<std::size_t> TorusLattice::comb_spins() const {
  std::vector<std::size_t> out;
  for (const auto& e : comb_) out.push_back(e.spin);
  return out;
}

std::vector<std::size_t> TorusLattice::comb_leaves() const {
  std::vector<std::size_t> degree(num_stars(), 0);
  for (const auto& e : comb_) {
    ++degree[e.stars[0]];
    ++degree[e.stars[1]];
  }
  std::vector<std::size_t> leaves;
  for (std::size_t s = 0; s < degree.size(); ++s) {
    if (degree[s] == 1) leaves.push_back(s);
  }
  return leaves;
}

std::vector<std::size_t> TorusLattice::comb_path(std::size_t star_a, std::size_t star_b) const {
  const std::size_t n = num_stars();
  if (star_a >= n || star_b >= n) throw InvalidArgument("comb_path: star out of range");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (const auto& e : comb_) {
    adj[e.stars[0]].push_back({e.stars[1], e.spin});
    adj[e.stars[1]].push_back({e.stars[0], e.spin});
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone), via(n, kNone);
  std::deque<std::size_t> queue{star_a};
  parent[star_a] = star_a;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto [w, spin] : adj[u]) {
      if (parent[w] != kNone) continue;
      parent[w] = u;
      via[w] = spin;
      queue.push_back(w);
    }
  }
  if (parent[star_b] == kNone) throw NumericalError("comb_path: comb is disconnected");
  std::vector<std::size_t> path;
  for (std::size_t u = star_b; u != star_a; u = parent[u]) path.push_back(via[u]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> TorusLattice::snake_path(std::size_t plaq_a, std::size_t plaq_b) const {
  auto pos_of = [&](std::size_t p) {
    auto it = std::find(snake_cells_.begin(), snake_cells_.end(), p);
    if (it == snake_cells_.end()) throw InvalidArgument("snake_path: plaquette out of range");
    return static_cast<std::size_t>(it - snake_cells_.begin());
  };
  std::size_t a = pos_of(plaq_a), b = pos_of(plaq_b);
  if (a > b) std::swap(a, b);
  std::vector<std::size_t> path;
  for (std::size_t k = a + 1; k <= b; ++k) path.push_back(snake_[k - 1].spin);
  return path;
}

void TorusLattice::build_leaf_paths() {
  const auto leaves = comb_leaves();
  leaf_paths_.clear();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      leaf_paths_.push_back(comb_path(leaves[i], leaves[j]));
    }
  }
}

std::array<std::size_t, 2> TorusLattice::stars_of_edge(std::size_t e) const {
  return edge_vertices(e);
}

std::array<std::size_t, 2> TorusLattice::plaquettes_of_edge(std::size_t e) const {
  const std::size_t cell = e / 2;
  const std::size_t r = cell / L_, c = cell % L_;
  if (e % 2 == 0) return {((r + L_ - 1) % L_) * L_ + c, r * L_ + c};
  return {r * L_ + (c + L_ - 1) % L_, r * L_ + c};
}

nlohmann::json TorusLattice::to_json() const {
  using nlohmann::json;
  json edges = json::array();
  for (std::size_t e = 0; e < num_qubits(); ++e) {
    const std::size_t cell = e / 2;
    edges.push_back({{"id", e},
                     {"orientation", e % 2 == 0 ? "h" : "v"},
                     {"row", cell / L_},
                     {"col", cell % L_},
                     {"vertices", edge_vertices(e)}});
  }
  json snake_order = json::array();
  for (const auto& s : snake_) {
    snake_order.push_back({{"spin", s.spin}, {"position", s.position}, {"plaquettes", s.plaquettes}});
  }
  json comb_order = json::array();
  for (const auto& c : comb_) comb_order.push_back({{"spin", c.spin}, {"stars", c.stars}});
  return {{"type", "torus"},
          {"L", L_},
          {"n_qubits", num_qubits()},
          {"edges", edges},
          {"stars", stars_},
          {"plaquettes", plaqs_},
          {"snake", snake_spins()},
          {"snake_cells", snake_cells_},
          {"snake_order", snake_order},
          {"comb", comb_spins()},
          {"comb_order", comb_order},
          {"leftover", leftover_},
          {"leaf_paths", leaf_paths_},
          {"logicals",
           {{"xbar1", xbar1_}, {"zbar1", zbar1_}, {"xbar2", xbar2_}, {"zbar2", zbar2_}}}};
}

bool LayoutReport::all_ok(std::size_t side) const {
  return stars_cover_edges_twice && plaquettes_cover_edges_twice && snake_comb_disjoint &&
         snake_comb_cover_all_but_two && snake_avoids_zbar && comb_avoids_xbar &&
         comb_is_spanning_tree && snake_is_hamiltonian_path &&
         leaf_path_count == side * (side - 1) / 2 && max_leaf_path_length <= 3 * side - 2;
}

LayoutReport check_layout(const TorusLattice& lat) {
  LayoutReport rep;
  const std::size_t n = lat.num_qubits();

  auto covered_twice = [n](const std::vector<std::array<std::size_t, 4>>& groups) {
    std::vector<int> count(n, 0);
    for (const auto& g : groups) {
      std::set<std::size_t> distinct(g.begin(), g.end());
      if (distinct.size() != 4) return false;
      for (std::size_t e : g) ++count[e];
    }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
  };
  rep.stars_cover_edges_twice = covered_twice(lat.star_supports());
  rep.plaquettes_cover_edges_twice = covered_twice(lat.plaquette_supports());

  const auto snake = lat.snake_spins();
  const auto comb = lat.comb_spins();
  std::set<std::size_t> s_set(snake.begin(), snake.end()), c_set(comb.begin(), comb.end());
  rep.snake_comb_disjoint = s_set.size() == snake.size() && c_set.size() == comb.size() &&
                            std::none_of(snake.begin(), snake.end(),
                                         [&](std::size_t e) { return c_set.count(e) > 0; });
  rep.snake_comb_cover_all_but_two = rep.snake_comb_disjoint && snake.size() + comb.size() + 2 == n;

  auto disjoint_from = [](const std::set<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::none_of(b.begin(), b.end(), [&](std::size_t e) { return a.count(e) > 0; });
  };
  rep.snake_avoids_zbar = disjoint_from(s_set, lat.zbar1_support()) &&
                          disjoint_from(s_set, lat.zbar2_support());
  rep.comb_avoids_xbar = disjoint_from(c_set, lat.xbar1_support()) &&
                         disjoint_from(c_set, lat.xbar2_support());

  // Spanning tree: V-1 edges and every star reachable from star 0.
  bool connected = true;
  try {
    for (std::size_t s = 1; s < lat.num_stars(); ++s) lat.comb_path(0, s);
  } catch (const NumericalError&) {
    connected = false;
  }
  rep.comb_is_spanning_tree = connected && comb.size() + 1 == lat.num_stars();

  const auto& cells = lat.snake_cells();
  std::set<std::size_t> cell_set(cells.begin(), cells.end());
  bool path_ok = cell_set.size() == lat.num_plaquettes() && cells.size() == lat.num_plaquettes();
  for (const auto& entry : lat.snake_order()) {
    const auto pl = lat.plaquettes_of_edge(entry.spin);
    std::set<std::size_t> got(pl.begin(), pl.end());
    std::set<std::size_t> want(entry.plaquettes.begin(), entry.plaquettes.end());
    path_ok = path_ok && got == want;
  }
  rep.snake_is_hamiltonian_path = path_ok;

  rep.leaf_path_count = lat.leaf_paths().size();
  for (const auto& p : lat.leaf_paths()) {
    rep.max_leaf_path_length = std::max(rep.max_leaf_path_length, p.size());
  }
  return rep;
}

}  // namespace stabgibbs
