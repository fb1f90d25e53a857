#pragma once

#include "malab/experiment/config.hpp"

#include <string>
#include <vector>

namespace malab {

/// Options shared by every subcommand. `sets` are KEY=VALUE pairs applied on
/// top of the config file.
struct CommandOptions {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir = ".";
    std::string format = "csv"; // csv | jsonl | both
    std::uint64_t replicates = 0; // 0 = keep config value
    std::uint64_t master_seed = 0; // 0 = keep config value
    int workers = 0;
};

/// Exit codes: 0 success, 1 usage/config error, 2 infeasible calibration,
/// 3 internal invariant violation. The cmd_* functions throw ConfigError /
/// InfeasibleError; run_command maps them to codes.
int cmd_run(const CommandOptions& opts);
int cmd_sweep_delta(const CommandOptions& opts);
int cmd_sweep_tau(const CommandOptions& opts);
int cmd_race_calibrate(const CommandOptions& opts);
int cmd_stategraph(const CommandOptions& opts);
int cmd_verify_paths(const CommandOptions& opts);

/// Dispatches by subcommand name and maps exceptions to exit codes.
int run_command(const std::string& name, const CommandOptions& opts);

} // namespace malab
