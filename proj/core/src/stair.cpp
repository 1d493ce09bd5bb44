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


#include "stabgibbs/stair.hpp"

namespace stabgibbs {

Index stair_vertex_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < i + 1 || j > n + 1) throw InvalidArgument("stair_vertex_index: vertex out of range");
  const std::size_t before = (i - 1) * (n + 1) - (i - 1) * i / 2;
  return static_cast<Index>(before + (j - i - 1));
}

StairGraph stair_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("stair_graph: n must be >= 1");
  StairGraph g;
  g.n = n;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) g.vertices.emplace_back(i, j);
  }
  for (const auto& [i, j] : g.vertices) {
    const Index a = stair_vertex_index(n, i, j);
    if (j + 1 <= n + 1) g.edges.emplace_back(a, stair_vertex_index(n, i, j + 1));
    if (i + 1 < j) g.edges.emplace_back(a, stair_vertex_index(n, i + 1, j));
  }
  const Index v = g.num_vertices();
  std::vector<TripletR> t;
  for (const auto& [a, b] : g.edges) {
    t.emplace_back(a, a, 1.0);
    t.emplace_back(b, b, 1.0);
    t.emplace_back(a, b, -1.0);
    t.emplace_back(b, a, -1.0);
  }
  g.laplacian.resize(v, v);
  g.laplacian.setFromTriplets(t.begin(), t.end());
  t.clear();
  for (std::size_t i = 1; i <= n; ++i) t.emplace_back(stair_vertex_index(n, i, i + 1), stair_vertex_index(n, i, i + 1), 2.0);
  g.diagonal_weight.resize(v, v);
  g.diagonal_weight.setFromTriplets(t.begin(), t.end());
  return g;
}

StairTestVector stair_test_vector(std::size_t n) {
  if (n < 2) throw InvalidArgument("stair_test_vector: n must be >= 2");
  const StairGraph g = stair_graph(n);
  StairTestVector out;
  out.g.resize(g.num_vertices());
  for (Index k = 0; k < g.num_vertices(); ++k) {
    out.g[k] = static_cast<double>(g.vertices[k].second - g.vertices[k].first - 1);
  }
  out.energy = out.g.dot(g.weighted_laplacian() * out.g);
  out.norm2 = out.g.squaredNorm();
  out.rayleigh = out.energy / out.norm2;
  return out;
}

SpMatR perturbed_laplacian(std::size_t n, double a) {
  if (!(a >= 0.0)) throw InvalidArgument("perturbed_laplacian: a must be >= 0");
  return stair_graph(n).weighted_laplacian(a);
}

}  // namespace stabgibbs
