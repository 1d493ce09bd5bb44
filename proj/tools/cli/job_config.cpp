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


#include "cli/job_config.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace stabgibbs::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!known.count(k)) throw InvalidArgument("unknown key '" + k + "' in " + where);
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <class T>
void read_opt(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::gap_scan: return "gap_scan";
    case Command::stair_scan: return "stair_scan";
    case Command::block_verify: return "block_verify";
    case Command::mix_run: return "mix_run";
    default: return "model_dump";
  }
}

Command parse_command(const std::string& s) {
  for (auto c : {Command::gap_scan, Command::stair_scan, Command::block_verify, Command::mix_run,
                 Command::model_dump}) {
    if (s == command_name(c)) return c;
  }
  throw InvalidArgument("unknown command: " + s);
}

double parse_beta(const json& j) {
  if (j.is_number()) {
    const double b = j.get<double>();
    if (!(b >= 0.0)) throw InvalidArgument("beta must be >= 0");
    return b;
  }
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity")) {
    return std::numeric_limits<double>::infinity();
  }
  throw InvalidArgument("beta must be a number or \"inf\"");
}

json beta_to_json(double beta) {
  if (std::isinf(beta)) return "inf";
  return beta;
}

JobConfig JobConfig::from_json(const json& j) {
  reject_unknown(j,
                 {"schema", "command", "model", "sizes", "betas", "couplings", "sector", "solver", "seed",
                  "output_dir", "threads", "tolerances", "mix", "checks"},
                 "job config");
  JobConfig c;
  if (j.contains("schema") && j.at("schema") != "stabgibbs/1") throw InvalidArgument("unsupported config schema");
  if (j.contains("command")) c.command = parse_command(j.at("command").get<std::string>());
  read(j, "model", c.model);
  if (c.model != "ising" && c.model != "toric") throw InvalidArgument("model must be ising or toric");
  read(j, "sizes", c.sizes);
  if (j.contains("betas")) {
    for (const auto& b : j.at("betas")) c.betas.push_back(parse_beta(b));
  }
  if (j.contains("couplings")) c.couplings = parse_coupling_set(j.at("couplings").get<std::string>());
  read(j, "sector", c.sector);
  if (c.sector != "full" && c.sector != "syndrome" && c.sector != "abelian") {
    throw InvalidArgument("sector must be full, syndrome or abelian");
  }
  read(j, "solver", c.solver);
  read(j, "seed", c.seed);
  read(j, "output_dir", c.output_dir);
  read(j, "threads", c.threads);
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    reject_unknown(t, {"leakage", "block", "floor", "bound_slack", "kernel_rel", "residual"}, "tolerances");
    read(t, "leakage", c.tolerances.leakage);
    read(t, "block", c.tolerances.block);
    read(t, "floor", c.tolerances.floor);
    read(t, "bound_slack", c.tolerances.bound_slack);
    read(t, "kernel_rel", c.tolerances.kernel_rel);
    read(t, "residual", c.tolerances.residual);
  }
  if (j.contains("mix")) {
    const json& m = j.at("mix");
    reject_unknown(m, {"initial_states", "samples", "grid_points", "t_max", "t_max_gaps", "propagator", "eps"}, "mix");
    read(m, "initial_states", c.mix.initial_states);
    read(m, "samples", c.mix.samples);
    read(m, "grid_points", c.mix.grid_points);
    read(m, "t_max", c.mix.t_max);
    read(m, "t_max_gaps", c.mix.t_max_gaps);
    read(m, "propagator", c.mix.propagator);
    read(m, "eps", c.mix.eps);
  }
  if (j.contains("checks")) {
    const json& k = j.at("checks");
    reject_unknown(k,
                   {"max_gap_ratio", "max_log_slope", "kernel_dim", "stair_fit_min_n", "stair_slope_min",
                    "stair_slope_max"},
                   "checks");
    read_opt(k, "max_gap_ratio", c.checks.max_gap_ratio);
    read_opt(k, "max_log_slope", c.checks.max_log_slope);
    read_opt(k, "kernel_dim", c.checks.kernel_dim);
    read(k, "stair_fit_min_n", c.checks.stair_fit_min_n);
    read(k, "stair_slope_min", c.checks.stair_slope_min);
    read(k, "stair_slope_max", c.checks.stair_slope_max);
  }
  return c;
}

json JobConfig::to_json() const {
  json betas_j = json::array();
  for (double b : betas) betas_j.push_back(beta_to_json(b));
  auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
  return {{"schema", "stabgibbs/1"},
          {"command", command_name(command)},
          {"model", model},
          {"sizes", sizes},
          {"betas", betas_j},
          {"couplings", coupling_set_name(couplings)},
          {"sector", sector},
          {"solver", solver},
          {"seed", seed},
          {"output_dir", output_dir},
          {"threads", threads},
          {"tolerances",
           {{"leakage", tolerances.leakage},
            {"block", tolerances.block},
            {"floor", tolerances.floor},
            {"bound_slack", tolerances.bound_slack},
            {"kernel_rel", tolerances.kernel_rel},
            {"residual", tolerances.residual}}},
          {"mix",
           {{"initial_states", mix.initial_states},
            {"samples", mix.samples},
            {"grid_points", mix.grid_points},
            {"t_max", mix.t_max},
            {"t_max_gaps", mix.t_max_gaps},
            {"propagator", mix.propagator},
            {"eps", mix.eps}}},
          {"checks",
           {{"max_gap_ratio", opt(checks.max_gap_ratio)},
            {"max_log_slope", opt(checks.max_log_slope)},
            {"kernel_dim", opt(checks.kernel_dim)},
            {"stair_fit_min_n", checks.stair_fit_min_n},
            {"stair_slope_min", checks.stair_slope_min},
            {"stair_slope_max", checks.stair_slope_max}}}};
}

}  // namespace stabgibbs::cli
