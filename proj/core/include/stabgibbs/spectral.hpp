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


#ifndef STABGIBBS_SPECTRAL_HPP
#define STABGIBBS_SPECTRAL_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stabgibbs/types.hpp"

namespace stabgibbs {

enum class SolverMethod { automatic, dense, lanczos, shift_invert, blocks };

const char* solver_method_name(SolverMethod m);
SolverMethod parse_solver_method(const std::string& s);

struct SpectralOptions {
  SolverMethod method = SolverMethod::automatic;
  Index dense_limit = 4096;
  double rel_tol = 1e-9;          // Lanczos convergence, relative to |M|
  double residual_limit = 1e-8;   // certified residual, relative to |M|
  double kernel_rel = 1e-9;       // kernel threshold, relative to trace/dim
  double separation = 10.0;
  Index krylov_dim = 120;
  int max_restarts = 400;
  double shift = 0.0;             // shift-invert pole
  std::uint64_t seed = 0x5eed;
};

struct SpectralResult {
  double min_eigenvalue = 0.0;
  double gap = 0.0;               // smallest eigenvalue above the kernel
  Index kernel_dim = 0;
  std::vector<double> residuals;  // per reported pair
  std::string method;
  double wall_time_ms = 0.0;
  bool kernel_ambiguous = false;
  Index blocks = 1;

  double residual() const;
  nlohmann::json to_json() const;
};

// Smallest eigenvalue of a symmetric (hermitian) PSD matrix.
SpectralResult min_eigenvalue(const SpMatR& m, const SpectralOptions& opt = {});
SpectralResult min_eigenvalue(const SpMat& m, const SpectralOptions& opt = {});

// Smallest eigenvalue on the orthogonal complement of the kernel. Supplied
// kernel vectors are deflated; further kernel directions are detected by
// threshold and counted.
SpectralResult spectral_gap(const SpMatR& m, const std::vector<DVecR>& kernel = {}, const SpectralOptions& opt = {});
SpectralResult spectral_gap(const SpMat& m, const std::vector<DVec>& kernel = {}, const SpectralOptions& opt = {});

// Connected components of the symmetrized sparsity graph, each sorted.
std::vector<std::vector<Index>> connected_components(const SpMat& m);
std::vector<std::vector<Index>> connected_components(const SpMatR& m);

// Full spectrum from dense eigensolves of each connected component.
DVecR block_spectrum(const SpMat& m, double* max_residual = nullptr);

bool is_real(const SpMat& m, double tol = 0.0);
SpMatR real_part(const SpMat& m);
// max |M - M^T| relative to max |M|.
double symmetry_defect(const SpMatR& m);
double symmetry_defect(const SpMat& m);
// Bound on the operator norm (max absolute row sum).
double norm_bound(const SpMatR& m);
double norm_bound(const SpMat& m);

}  // namespace stabgibbs

#endif  // STABGIBBS_SPECTRAL_HPP
