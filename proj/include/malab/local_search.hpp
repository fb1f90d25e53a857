#pragma once

#include "malab/fitness_function.hpp"
#include "malab/rng.hpp"

#include <cstdint>
#include <optional>

namespace malab {

enum class PivotKind {
    FirstImprovement, // take the first strictly better neighbor in scan order
    SteepestAscent,   // best neighbor, ties to the lowest flipped-bit index
    RandomImprovement // uniform choice among strictly better neighbors
};

enum class ScanOrder { Fixed, Shuffled };

/// Pivoting rule. The scan order only matters for first improvement; a fresh
/// uniform permutation is drawn per iteration when shuffled.
struct PivotRule {
    PivotKind kind = PivotKind::FirstImprovement;
    ScanOrder order = ScanOrder::Fixed;

    static PivotRule first_improvement(ScanOrder o = ScanOrder::Fixed) {
        return {PivotKind::FirstImprovement, o};
    }
    static PivotRule steepest_ascent() { return {PivotKind::SteepestAscent, ScanOrder::Fixed}; }
    static PivotRule random_improvement() {
        return {PivotKind::RandomImprovement, ScanOrder::Fixed};
    }
};

struct LsOutcome {
    BitString point;
    Fitness fitness;                // fitness of point
    std::uint64_t iterations_used = 0;
    bool converged = false;         // true iff a scan found no improving neighbor
    std::uint64_t evaluations = 0;  // f.evaluate calls made by this invocation
};

/// Depth-bounded strict-improvement hill climbing over the Hamming-1
/// neighborhood. Performs at most `delta` moves; every move strictly
/// increases fitness. `converged` is only set when a full scan proves local
/// optimality, which can also happen right after the delta-th move; with
/// delta = 0 no scan runs at all and converged is always false.
///
/// Every f.evaluate call is added to `counter` and to the outcome's own
/// count. If `known_fitness` is supplied it is trusted as f(y) and the
/// baseline evaluation is skipped.
LsOutcome local_search(const BitString& y, const FitnessFunction& f, std::uint64_t delta,
                       PivotRule pivot, RngStream& rng, std::uint64_t& counter,
                       std::optional<Fitness> known_fitness = std::nullopt);

} // namespace malab
