#pragma once

#include "malab/engine.hpp"
#include "malab/experiment/config.hpp"
#include "malab/fitness_function.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace malab {

/// Construction parameters of a benchmark function, addressable by name from
/// the configuration surface.
struct FunctionSpec {
    std::string name = "onemax"; // onemax | longpath | f_d | race_con | race_uncon
    std::size_t n = 0;           // total dimension (race halves are n/2 each)
    unsigned k = 0;              // 0 picks the per-function default
    // f_d
    std::uint64_t depth = 0;
    std::uint64_t gap = 0;
    std::uint64_t sections = 0;
    // race
    std::uint64_t l_con = 0;
    std::uint64_t l_unc = 0;
    std::int64_t weight = -1; // -1 selects n
    std::uint64_t start_con = 0;
    std::uint64_t start_unc = 0;

    unsigned k_or_default() const;
};

std::shared_ptr<const FitnessFunction> make_function(const FunctionSpec& fn);

/// One experiment: a function, an engine configuration, and the replication
/// plan. Replicate i runs with seed child(master_seed, i); sweep axis value a
/// uses child(master_seed, a * replicates + i).
struct ExperimentSpec {
    FunctionSpec fn;
    MAConfig ma; // ma.n/seed/init are filled in from fn + init_mode per replicate
    std::string init_mode = "uniform"; // uniform | path_start | bits:<01...>
    std::uint64_t replicates = 1;
    std::uint64_t master_seed = 1;
    std::vector<std::uint64_t> sweep_deltas;
    std::vector<std::uint64_t> sweep_taus;
    std::uint64_t pilot_replicates = 10;
    std::uint64_t pilot_max_generations = 1u << 21;
    int workers = 0; // 0 = hardware concurrency
    std::string out_dir = ".";
    std::string format = "csv"; // csv | jsonl | both

    /// Resolves the init strategy against the concrete function.
    InitStrategy resolve_init(const FitnessFunction& f) const;

    /// Canonical key=value echo (every key, resolved), reproducible as input.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Keys shared by commands that execute runs.
const std::set<std::string>& run_schema_keys();

/// Builds an ExperimentSpec from a validated key=value configuration.
/// `extra_allowed` extends the schema for command-specific keys.
ExperimentSpec spec_from_config(const KeyValueConfig& cfg,
                                const std::set<std::string>& extra_allowed = {});

/// Formats a double so that parsing it back returns the same value.
std::string format_double(double v);

} // namespace malab
