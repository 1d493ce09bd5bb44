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


#ifndef STABGIBBS_STAIR_HPP
#define STABGIBBS_STAIR_HPP

#include <utility>
#include <vector>

#include "stabgibbs/types.hpp"

namespace stabgibbs {

/// n x n grid folded along the diagonal: vertices (i, j), 1 <= i <= n,
/// i + 1 <= j <= n + 1, joined to (i, j +- 1) and (i +- 1, j).
struct StairGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> vertices;  // row-major in i, then j
  std::vector<std::pair<Index, Index>> edges;
  SpMatR laplacian;
  SpMatR diagonal_weight;  // 2 on the vertices (i, i + 1)

  Index num_vertices() const { return static_cast<Index>(vertices.size()); }
  SpMatR weighted_laplacian(double a = 1.0) const { return laplacian + a * diagonal_weight; }
};

StairGraph stair_graph(std::size_t n);
Index stair_vertex_index(std::size_t n, std::size_t i, std::size_t j);

struct StairTestVector {
  DVecR g;            // g(i, j) = j - i - 1
  double energy = 0;  // g^T H g
  double norm2 = 0;
  double rayleigh = 0;
};

StairTestVector stair_test_vector(std::size_t n);

// Laplacian plus a times the diagonal weight.
SpMatR perturbed_laplacian(std::size_t n, double a);

}  // namespace stabgibbs

#endif  // STABGIBBS_STAIR_HPP
