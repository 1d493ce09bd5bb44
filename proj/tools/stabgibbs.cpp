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


#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "stabgibbs/io.hpp"

using namespace stabgibbs;
using namespace stabgibbs::cli;

namespace {

int resolve_threads(int flag, int from_config) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("STABGIBBS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (from_config > 0) return from_config;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabgibbs: Davies samplers for stabilizer Hamiltonians"};
  std::string command, config_path, out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("command", command, "gap_scan | stair_scan | block_verify | mix_run | model_dump")->required();
  app.add_option("--config", config_path, "job file (JSON)")->required()->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out_dir, "output directory (overrides output_dir)");
  auto* seed_opt = app.add_option("--seed", seed, "random seed (overrides seed)");
  app.add_option("--threads", threads, "worker threads; falls back to STABGIBBS_THREADS")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  RunContext ctx;
  try {
    ctx.config = JobConfig::from_json(read_json(config_path));
    ctx.config.command = parse_command(command);
    if (*out_opt) ctx.config.output_dir = out_dir;
    if (*seed_opt) ctx.config.seed = seed;
    ctx.threads = resolve_threads(threads, ctx.config.threads);
    ctx.out_dir = ctx.config.output_dir;
    ctx.log = &std::cout;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    const CommandResult res = run_command(ctx);
    for (const auto& p : res.written) std::cout << "wrote " << p.string() << "\n";
    for (const auto& f : res.failures) std::cerr << "FAILED " << f << "\n";
    return res.exit_code();
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
