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


#ifndef STABGIBBS_CLI_COMMANDS_HPP
#define STABGIBBS_CLI_COMMANDS_HPP

#include <filesystem>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/job_config.hpp"
#include "stabgibbs/frame.hpp"

namespace stabgibbs::cli {

// A job outside the documented desk limits.
class Refusal : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct RunContext {
  JobConfig config;
  std::filesystem::path out_dir;
  int threads = 1;
  std::ostream* log = nullptr;
};

struct CommandResult {
  std::vector<std::string> failures;  // one line per violated claim
  nlohmann::json report;
  std::vector<std::filesystem::path> written;

  int exit_code() const { return failures.empty() ? 0 : 1; }
};

std::shared_ptr<const StabilizerModel> build_model(const std::string& kind, int size);

// Throws Refusal with the limit statement when (command, model, size, sector)
// is beyond desk scale.
void check_desk_limits(Command command, const std::string& model, int size, const std::string& sector);

CommandResult cmd_gap_scan(const RunContext& ctx);
CommandResult cmd_stair_scan(const RunContext& ctx);
CommandResult cmd_block_verify(const RunContext& ctx);
CommandResult cmd_mix_run(const RunContext& ctx);
CommandResult cmd_model_dump(const RunContext& ctx);

CommandResult run_command(const RunContext& ctx);

}  // namespace stabgibbs::cli

#endif  // STABGIBBS_CLI_COMMANDS_HPP
