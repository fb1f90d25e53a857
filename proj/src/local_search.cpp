#include "malab/local_search.hpp"

#include <vector>

namespace malab {

namespace {

struct Scan {
    bool found = false;
    std::size_t flip = 0;
    Fitness fitness{};
};

// One pivot scan around `y` (with fitness fy). Evaluates neighbors by
// flipping bits of `y` in place and restoring them.
Scan scan_neighbors(BitString& y, Fitness fy, const FitnessFunction& f, PivotRule pivot,
                    RngStream& rng, std::uint64_t& evals) {
    const std::size_t n = y.length();
    Scan best;
    switch (pivot.kind) {
    case PivotKind::FirstImprovement: {
        std::vector<std::uint32_t> order;
        if (pivot.order == ScanOrder::Shuffled)
            order = rng.permutation(static_cast<std::uint32_t>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t i = pivot.order == ScanOrder::Shuffled ? order[j] : j;
            y.flip_bit(i);
            const Fitness fz = f.evaluate(y);
            ++evals;
            y.flip_bit(i);
            if (fz > fy)
                return {true, i, fz};
        }
        return best;
    }
    case PivotKind::SteepestAscent: {
        for (std::size_t i = 0; i < n; ++i) {
            y.flip_bit(i);
            const Fitness fz = f.evaluate(y);
            ++evals;
            y.flip_bit(i);
            if (fz > fy && (!best.found || fz > best.fitness))
                best = {true, i, fz}; // first hit of the best value keeps the lowest index
        }
        return best;
    }
    case PivotKind::RandomImprovement: {
        std::vector<Scan> improving;
        for (std::size_t i = 0; i < n; ++i) {
            y.flip_bit(i);
            const Fitness fz = f.evaluate(y);
            ++evals;
            y.flip_bit(i);
            if (fz > fy)
                improving.push_back({true, i, fz});
        }
        if (improving.empty())
            return best;
        return improving[rng.next_below(improving.size())];
    }
    }
    return best;
}

} // namespace

LsOutcome local_search(const BitString& y0, const FitnessFunction& f, std::uint64_t delta,
                       PivotRule pivot, RngStream& rng, std::uint64_t& counter,
                       std::optional<Fitness> known_fitness) {
    LsOutcome out;
    out.point = y0;
    if (known_fitness) {
        out.fitness = *known_fitness;
    } else {
        out.fitness = f.evaluate(out.point);
        ++out.evaluations;
    }
    if (delta == 0) {
        counter += out.evaluations;
        return out;
    }

    for (;;) {
        const Scan s = scan_neighbors(out.point, out.fitness, f, pivot, rng, out.evaluations);
        if (!s.found) {
            out.converged = true;
            break;
        }
        if (out.iterations_used == delta)
            break; // an improving neighbor exists but the budget is spent
        out.point.flip_bit(s.flip);
        out.fitness = s.fitness;
        ++out.iterations_used;
    }
    counter += out.evaluations;
    return out;
}

} // namespace malab
