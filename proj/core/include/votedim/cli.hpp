// Copyright 2026 The votedim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

namespace votedim {

enum class CommandStatus { Ok = 0, InvalidInput = 1, BudgetExceeded = 2 };

/// Outcome of one subcommand. `payload` is a complete JSON document (one
/// line plus trailing newline) carrying every value the table shows;
/// `human_text` is the rendered table. `status` maps onto the process exit
/// code: 0 ok, 1 invalid input, 2 budget or cap refusal.
struct CommandResult {
  CommandStatus status = CommandStatus::Ok;
  std::string payload;
  std::string human_text;
};

struct DimensionRequest {
  std::string method = "exact";  // exact | lower | upper
  std::optional<double> budget_seconds;
  int threads = 1;
};

struct ConstructRequest {
  std::string family;  // example1 | example2 | prop-ne | parametric | theorem
  std::optional<int> d;
  std::optional<int> n2;          // defaults to 2 * d
  std::optional<int> k;
  std::optional<int> class_size;  // defaults to 20
  std::string output_path;        // empty: no file is written
};

/// Exactly one of the three modes must be set.
struct VerifyRequest {
  std::string certificate_path;
  std::string equals_path;
  std::string ordered_separation;  // comma-separated 1-based voters
};

/// Structure report: voter count, representation kind, validation issues,
/// extremal antichain counts, desirability classes, completeness, and the
/// vector form when the game is complete. Fields whose computation is capped
/// away at the game's size come back null.
CommandResult cmd_analyze(const std::string& file);

/// Dimension bounds or the exact value with a witness representation.
/// Games beyond the exact-method caps are refused with status
/// BudgetExceeded and whatever bounds are cheap to state.
CommandResult cmd_dimension(const std::string& file, const DimensionRequest& request);

/// Emits a game or family bundle as canonical JSON, optionally writing it to
/// a file, and echoes the claimed bounds.
CommandResult cmd_construct(const ConstructRequest& request);

/// Certificate check, function-level equality, or ordered separation of a
/// losing coalition (witness on success, infeasibility verdict otherwise).
CommandResult cmd_verify(const std::string& file, const VerifyRequest& request);

/// Parses arguments, dispatches, prints the payload (--json) or the table,
/// and returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace votedim
