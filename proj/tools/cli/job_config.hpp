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


#ifndef STABGIBBS_CLI_JOB_CONFIG_HPP
#define STABGIBBS_CLI_JOB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stabgibbs/couplings.hpp"

namespace stabgibbs::cli {

enum class Command { gap_scan, stair_scan, block_verify, mix_run, model_dump };

const char* command_name(Command c);
Command parse_command(const std::string& s);

struct Tolerances {
  double leakage = 1e-10;
  double block = 1e-11;
  double floor = 1e-10;
  double bound_slack = 1e-6;
  double kernel_rel = 1e-9;
  double residual = 1e-8;
};

struct MixSettings {
  std::vector<std::string> initial_states{"random_pure"};
  int samples = 4;            // per random state kind
  int grid_points = 50;
  double t_max = 0.0;         // 0: t_max_gaps / gap
  double t_max_gaps = 10.0;
  std::string propagator = "auto";  // auto | expm | krylov | spectral
  double eps = 1e-3;
};

struct Checks {
  std::optional<double> max_gap_ratio;   // gap_scan, across betas per size
  std::optional<double> max_log_slope;   // gap_scan, d log gap / d beta
  std::optional<long long> kernel_dim;   // gap_scan, every row
  double stair_fit_min_n = 8;
  double stair_slope_min = -2.2;
  double stair_slope_max = -1.8;
};

struct JobConfig {
  Command command = Command::gap_scan;
  std::string model = "ising";
  std::vector<int> sizes;
  std::vector<double> betas;
  CouplingSet couplings = CouplingSet::local_full;
  std::string sector = "full";  // full | syndrome | abelian
  std::string solver = "automatic";
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  int threads = 0;
  Tolerances tolerances;
  MixSettings mix;
  Checks checks;

  static JobConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Beta values are numbers or the string "inf".
double parse_beta(const nlohmann::json& j);
nlohmann::json beta_to_json(double beta);

}  // namespace stabgibbs::cli

#endif  // STABGIBBS_CLI_JOB_CONFIG_HPP
