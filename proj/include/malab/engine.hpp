#pragma once

#include "malab/fitness_function.hpp"
#include "malab/local_search.hpp"
#include "malab/rng.hpp"
#include "malab/variation.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace malab {

enum class LsScheduleKind { EveryTau, Probability, Never };

/// When local search runs: every tau generations (including generation 0,
/// since 0 mod tau = 0), as an independent per-offspring coin, or never.
struct LsSchedule {
    LsScheduleKind kind = LsScheduleKind::Never;
    std::uint64_t tau = 1;
    double p_ls = 0.0;

    static LsSchedule every_tau(std::uint64_t tau) {
        return {LsScheduleKind::EveryTau, tau, 0.0};
    }
    static LsSchedule probability(double p) { return {LsScheduleKind::Probability, 1, p}; }
    static LsSchedule never() { return {LsScheduleKind::Never, 1, 0.0}; }
};

enum class InitKind { UniformRandom, CopiesOf };

struct InitStrategy {
    InitKind kind = InitKind::UniformRandom;
    BitString point; // for CopiesOf

    static InitStrategy uniform_random() { return {InitKind::UniformRandom, {}}; }
    static InitStrategy copies_of(BitString p) {
        return {InitKind::CopiesOf, std::move(p)};
    }
};

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct Budget {
    std::uint64_t max_generations = kUnlimited;
    std::uint64_t max_evaluations = kUnlimited;
};

/// Full parametrization of one run.
struct MAConfig {
    std::size_t n = 0;
    std::size_t mu = 1;
    std::size_t lambda = 1;
    double p_m = -1.0; // negative selects the default 1/n
    LsSchedule schedule;
    std::uint64_t delta = 0;
    PivotRule pivot;
    InitStrategy init;
    Budget budget;
    std::uint64_t seed = 0;

    double mutation_rate() const { return p_m >= 0.0 ? p_m : 1.0 / static_cast<double>(n); }
};

enum class Outcome { OptimumFound, Trapped, BudgetExhausted };

struct EvalCounts {
    std::uint64_t mutation = 0;     // initialization + offspring evaluations
    std::uint64_t local_search = 0; // neighbor probes inside local search
    std::uint64_t total() const { return mutation + local_search; }
};

struct TracePoint {
    std::uint64_t generation;
    std::int64_t best;
};

struct RunRecord {
    Outcome outcome = Outcome::BudgetExhausted;
    std::uint64_t generations = 0; // index of the terminal generation (see MaRun)
    EvalCounts evals;
    std::uint64_t ls_invocations = 0;
    std::vector<TracePoint> trace; // sampled at every improvement of the best
    BitString best_point;
    Fitness best_fitness;
    MAConfig config;
};

struct Individual {
    BitString point;
    Fitness fitness;
    std::uint64_t tag = 0; // creation order, unique within a run
};

enum class PopulationStatus { Continue, OptimumFound, Trapped };

/// Terminal-state check with the precedence optimum > trap > continue.
PopulationStatus classify_population(std::span<const Individual> pop, const FitnessFunction& f);

/// One (mu+lambda) MA run in stepwise form. Construction evaluates the
/// initial population; step() executes one generation (mutation, scheduled
/// local search, elitist selection with ties broken toward offspring).
///
/// generation() counts completed generations; when a run terminates inside
/// generation t the record reports generations = t (a run that is terminal
/// already at initialization reports 0 without executing anything).
class MaRun {
  public:
    MaRun(MAConfig config, const FitnessFunction& f);

    /// Executes one generation unless already finished. Returns true while
    /// the run can continue.
    bool step();

    bool finished() const { return finished_; }
    Outcome outcome() const { return outcome_; }
    std::uint64_t generation() const { return t_; }
    const std::vector<Individual>& population() const { return pop_; }

    RunRecord record() const;

  private:
    void check_terminal(bool generation_ran);
    const Individual& best() const;

    MAConfig config_;
    const FitnessFunction& f_;
    RngStream rng_;
    std::vector<Individual> pop_;
    std::uint64_t t_ = 0;
    std::uint64_t next_tag_ = 0;
    EvalCounts evals_;
    std::uint64_t ls_invocations_ = 0;
    std::vector<TracePoint> trace_;
    bool finished_ = false;
    Outcome outcome_ = Outcome::BudgetExhausted;
};

/// Runs the configured MA to termination.
RunRecord run(const MAConfig& config, const FitnessFunction& f);

} // namespace malab
