#pragma once

#include "malab/experiment/spec.hpp"
#include "malab/race_fn.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace malab {

/// Runs fn(0..jobs-1) on a pool of `workers` threads (0 = hardware
/// concurrency). Results must be written to per-index slots; the first
/// exception, if any, is rethrown on the caller thread.
void parallel_for(std::size_t jobs, int workers, const std::function<void(std::size_t)>& fn);

inline const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::OptimumFound:
        return "OPTIMUM_FOUND";
    case Outcome::Trapped:
        return "TRAPPED";
    case Outcome::BudgetExhausted:
        return "BUDGET_EXHAUSTED";
    }
    return "?";
}

/// One finished replicate, paired with its sweep coordinates.
struct RunRow {
    std::uint64_t axis_value = 0; // swept parameter value (0 when not sweeping)
    std::uint64_t replicate = 0;
    RunRecord record;
};

/// Pinned raw-row schema.
extern const char* const kRunCsvHeader;

std::string run_row_csv(const ExperimentSpec& spec, const RunRow& row);
std::string run_row_jsonl(const ExperimentSpec& spec, const RunRow& row);

/// Header block (tool version, full spec echo, master seed) for CSV-style
/// files; every line starts with '#'.
void write_header_block(std::ostream& os, const ExperimentSpec& spec,
                        const std::vector<std::pair<std::string, std::string>>& extra = {});

/// Executes `spec.replicates` runs of one configuration. Replicate i uses
/// seed child(master_seed, axis_index * replicates + i). `configure` may
/// adjust the MAConfig per axis (sweeps); it receives the axis value.
std::vector<RunRow> execute_replicates(const ExperimentSpec& spec, const FitnessFunction& f,
                                       std::uint64_t axis_index, std::uint64_t axis_value,
                                       const MAConfig& config);

struct AxisAggregate {
    std::uint64_t value = 0;
    std::uint64_t replicates = 0;
    double optimum_rate = 0, trapped_rate = 0, budget_rate = 0;
    std::uint64_t generations_q1 = 0, generations_median = 0, generations_q3 = 0;
    std::uint64_t evaluations_q1 = 0, evaluations_median = 0, evaluations_q3 = 0;
};

AxisAggregate aggregate_axis(std::uint64_t value, const std::vector<RunRow>& rows);

extern const char* const kSweepCsvHeader;
std::string aggregate_csv(const AxisAggregate& a);

struct SweepResult {
    std::vector<AxisAggregate> aggregates;
    std::vector<RunRow> raw;
    std::uint64_t budget_generations = 0; // resolved budget used for the main phase
    std::string pilot_note;               // how the budget was derived
};

/// Success-rate curve over the local-search depth on the sectioned-path
/// function. When no generation budget is configured, a pilot phase derives
/// one as 10x the median generation count of the best-performing depth.
SweepResult sweep_delta(const ExperimentSpec& spec);

/// Outcome rates over the schedule period tau for a race function
/// (mu = lambda = 1); warns on stderr when the depth/period sanity conditions
/// are violated.
SweepResult sweep_tau(const ExperimentSpec& spec);

struct CalibrationProbe {
    std::uint64_t l_con = 0, l_unc = 0, tau = 0;
    std::uint64_t replicates = 0, con_wins = 0, unc_wins = 0, undecided = 0;
    double con_win_rate = 0;
};

struct CalibrationResult {
    bool feasible = false;
    RaceParams params;
    double p_con_at_tau = 0, p_con_at_2tau = 0;
    std::vector<CalibrationProbe> probes;
    std::string diagnosis;
};

struct CalibrationTargets {
    double win_hi = 0.9; // required P(connected wins) at period tau
    double win_lo = 0.1; // allowed P(connected wins) at period 2*tau
};

/// Searches (l_con, l_unc) — rate probing, a coarse grid, then bisection on
/// l_unc at the best l_con — for a pair whose connected-path win probability
/// clears targets.win_hi at period tau and stays under targets.win_lo at
/// 2*tau. Never throws for infeasibility; inspect `feasible`/`diagnosis`.
CalibrationResult race_calibrate(const ExperimentSpec& spec, CalibrationTargets targets);

} // namespace malab
