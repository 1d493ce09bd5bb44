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


#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cli/commands.hpp"
#include "stabgibbs/io.hpp"

using namespace stabgibbs;
using namespace stabgibbs::cli;
using nlohmann::json;
namespace fs = std::filesystem;
using Catch::Approx;

namespace {

RunContext context(const json& config, const std::string& name) {
  RunContext ctx;
  ctx.config = JobConfig::from_json(config);
  ctx.out_dir = fs::temp_directory_path() / ("stabgibbs_cli_" + name);
  fs::remove_all(ctx.out_dir);
  ctx.threads = 1;
  return ctx;
}

// CSV text with the named column blanked out.
std::string without_column(const std::string& csv, const std::string& column) {
  std::istringstream in(csv);
  std::string line, out;
  long skip = -1;
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == column) skip = static_cast<long>(i);
      }
      header = false;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (static_cast<long>(i) != skip) out += cells[i];
      out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("job config round-trips through json", "[cli]") {
  const json src = {{"command", "mix_run"},
                    {"model", "toric"},
                    {"sizes", {2}},
                    {"betas", {1, "inf"}},
                    {"couplings", "gapped"},
                    {"sector", "syndrome"},
                    {"solver", "lanczos"},
                    {"seed", 99},
                    {"output_dir", "somewhere"},
                    {"threads", 3},
                    {"tolerances", {{"leakage", 1e-9}}},
                    {"mix", {{"samples", 2}, {"eps", 0.01}}},
                    {"checks", {{"max_gap_ratio", 2.0}, {"kernel_dim", 1}}}};
  const JobConfig c = JobConfig::from_json(src);
  CHECK(c.command == Command::mix_run);
  CHECK(std::isinf(c.betas[1]));
  CHECK(c.couplings == CouplingSet::gapped);
  CHECK(c.tolerances.leakage == 1e-9);
  CHECK(c.tolerances.block == 1e-11);
  CHECK(*c.checks.kernel_dim == 1);
  const json once = c.to_json();
  CHECK(JobConfig::from_json(once).to_json() == once);
  CHECK(once.at("betas")[1] == "inf");
  CHECK(JobConfig::from_json(json::object()).to_json() == JobConfig{}.to_json());
}

TEST_CASE("job config rejects malformed input", "[cli]") {
  CHECK_THROWS_AS(JobConfig::from_json({{"sizse", {4}}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"mix", {{"bogus", 1}}}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"model", "potts"}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"betas", {-1}}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"command", "plot"}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"couplings", "everything"}}), InvalidArgument);
  CHECK_THROWS_AS(JobConfig::from_json({{"schema", "stabgibbs/0"}}), InvalidArgument);
}

TEST_CASE("desk limits", "[cli]") {
  CHECK_THROWS_AS(check_desk_limits(Command::gap_scan, "ising", 9, "full"), Refusal);
  CHECK_NOTHROW(check_desk_limits(Command::gap_scan, "ising", 8, "full"));
  CHECK_THROWS_AS(check_desk_limits(Command::gap_scan, "toric", 3, "full"), Refusal);
  CHECK_NOTHROW(check_desk_limits(Command::gap_scan, "toric", 3, "abelian"));
  CHECK_THROWS_AS(check_desk_limits(Command::block_verify, "ising", 7, "full"), Refusal);
  CHECK_THROWS_AS(check_desk_limits(Command::stair_scan, "ising", 1001, "full"), Refusal);
}

TEST_CASE("model_dump lists geometry", "[cli]") {
  RunContext ctx = context({{"command", "model_dump"}, {"model", "toric"}, {"sizes", {2, 3}}}, "dump");
  const CommandResult r = run_command(ctx);
  CHECK(r.exit_code() == 0);
  const json l2 = read_json(ctx.out_dir / "model_toric_2.json");
  CHECK(l2.at("star_operators").size() == 4);
  CHECK(l2.at("plaquette_operators").size() == 4);
  CHECK(l2.at("edges").size() == 8);
  CHECK(read_json(ctx.out_dir / "model_toric_3.json").at("leaf_path_count") == 3);
  CHECK(read_json(ctx.out_dir / "job.json").at("command") == "model_dump");
  RunContext ring = context({{"command", "model_dump"}, {"model", "ising"}, {"sizes", {5}}}, "dump_ring");
  run_command(ring);
  CHECK(read_json(ring.out_dir / "model_ising_5.json").at("bonds").size() == 5);
}

TEST_CASE("stair_scan rows and slope", "[cli]") {
  RunContext ctx = context({{"command", "stair_scan"}, {"sizes", {1, 2, 8, 16, 32, 64}}}, "stair");
  const CommandResult r = run_command(ctx);
  CHECK(r.exit_code() == 0);
  const std::string csv = read_file(ctx.out_dir / "stair_scan.csv");
  CHECK(csv.rfind("n,lambda_min,lambda_min_n2,rayleigh_upper,residual\n", 0) == 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::map<int, std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::stringstream ls(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(ls, cell, ',')) v.push_back(std::stod(cell));
    rows[static_cast<int>(v[0])] = v;
  }
  CHECK(rows.at(1)[1] == Approx(2.0).epsilon(1e-12));
  CHECK(std::isnan(rows.at(1)[3]));
  CHECK(rows.at(2)[1] == Approx(1.0).epsilon(1e-12));
  CHECK(rows.at(2)[3] == Approx(2.0).epsilon(1e-14));
  const double slope = r.report.at("slope").get<double>();
  CHECK(slope >= -2.2);
  CHECK(slope <= -1.8);
}

TEST_CASE("gap_scan is deterministic and primitive", "[cli]") {
  const json cfg = {{"command", "gap_scan"},
                    {"model", "ising"},
                    {"sizes", {3, 4}},
                    {"betas", {0, 1}},
                    {"couplings", "local_full"},
                    {"checks", {{"kernel_dim", 1}}}};
  RunContext a = context(cfg, "gap_a");
  RunContext b = context(cfg, "gap_b");
  b.threads = 2;
  CHECK(run_command(a).exit_code() == 0);
  CHECK(run_command(b).exit_code() == 0);
  const std::string ca = read_file(a.out_dir / "gap_scan.csv"), cb = read_file(b.out_dir / "gap_scan.csv");
  CHECK(ca.rfind("model,N,beta,coupling_set,gap,kernel_dim,residual,wall_time_ms\n", 0) == 0);
  CHECK(without_column(ca, "wall_time_ms") == without_column(cb, "wall_time_ms"));
  for (const auto& row : read_json(a.out_dir / "gap_scan_summary.json").at("rows")) {
    CHECK(row.at("kernel_dim") == 1);
    CHECK(row.at("gap").get<double>() > 0.0);
  }
}

TEST_CASE("gap_scan refuses oversized jobs", "[cli]") {
  RunContext ctx = context({{"command", "gap_scan"}, {"model", "toric"}, {"sizes", {3}}, {"betas", {1}}}, "refuse");
  CHECK_THROWS_AS(run_command(ctx), Refusal);
}

TEST_CASE("block_verify passes for the ring", "[cli]") {
  RunContext ctx = context({{"command", "block_verify"}, {"model", "ising"}, {"sizes", {4}}, {"betas", {0, 1, 3}}},
                           "blocks");
  const CommandResult r = run_command(ctx);
  CHECK(r.failures.empty());
  for (const auto& e : r.report.at("entries")) {
    for (const auto& s : e.at("sectors")) CHECK(s.at("leakage").get<double>() <= 1e-12);
  }
}

TEST_CASE("mix_run traces are monotone", "[cli]") {
  RunContext ctx = context({{"command", "mix_run"},
                            {"model", "ising"},
                            {"sizes", {3}},
                            {"betas", {1}},
                            {"couplings", "with_global"},
                            {"mix", {{"initial_states", {"maximally_mixed_perturbed", "random_pure"}}, {"samples", 2}}}},
                           "mix");
  const CommandResult r = run_command(ctx);
  CHECK(r.exit_code() == 0);
  CHECK(r.report.at("traces").size() == 3);
  for (const auto& t : r.report.at("traces")) {
    CHECK(t.at("monotone") == true);
    CHECK(t.at("bound_ok") == true);
  }
  const std::string csv = read_file(ctx.out_dir / "mix" / "ising_3_b1_maximally_mixed_perturbed.csv");
  CHECK(csv.rfind("t,chi2,trace_dist\n", 0) == 0);
  CHECK(fs::exists(ctx.out_dir / "mix" / "ising_3_b1_maximally_mixed_perturbed.json"));
}
