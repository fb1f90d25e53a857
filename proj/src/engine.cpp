#include "malab/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace malab {

PopulationStatus classify_population(std::span<const Individual> pop, const FitnessFunction& f) {
    bool trapped = false;
    for (const Individual& ind : pop) {
        switch (f.classify(ind.point)) {
        case PointClass::GlobalOptimum:
            return PopulationStatus::OptimumFound;
        case PointClass::Trap:
            trapped = true;
            break;
        case PointClass::Regular:
            break;
        }
    }
    return trapped ? PopulationStatus::Trapped : PopulationStatus::Continue;
}

MaRun::MaRun(MAConfig config, const FitnessFunction& f)
    : config_(std::move(config)), f_(f), rng_(config_.seed) {
    if (config_.n != f.dim())
        throw std::invalid_argument("MaRun: config dimension does not match the function");
    if (config_.mu < 1 || config_.lambda < 1)
        throw std::invalid_argument("MaRun: mu and lambda must be >= 1");
    if (config_.schedule.kind == LsScheduleKind::EveryTau && config_.schedule.tau < 1)
        throw std::invalid_argument("MaRun: tau must be >= 1");
    if (config_.init.kind == InitKind::CopiesOf && config_.init.point.length() != config_.n)
        throw std::invalid_argument("MaRun: init point length does not match n");
    const double pm = config_.mutation_rate();
    if (!(pm >= 0.0 && pm <= 1.0))
        throw std::invalid_argument("MaRun: p_m outside [0, 1]");

    pop_.reserve(config_.mu);
    for (std::size_t i = 0; i < config_.mu; ++i) {
        BitString x(config_.n);
        if (config_.init.kind == InitKind::CopiesOf) {
            x = config_.init.point;
        } else {
            for (std::size_t b = 0; b < config_.n; ++b)
                x.set_bit(b, rng_.next_bernoulli(0.5));
        }
        Fitness fx = f_.evaluate(x);
        ++evals_.mutation;
        pop_.push_back({std::move(x), fx, next_tag_++});
    }
    trace_.push_back({0, best().fitness.value});
    check_terminal(false);
}

const Individual& MaRun::best() const {
    const Individual* b = &pop_.front();
    for (const Individual& ind : pop_)
        if (ind.fitness > b->fitness)
            b = &ind;
    return *b;
}

void MaRun::check_terminal(bool generation_ran) {
    switch (classify_population(pop_, f_)) {
    case PopulationStatus::OptimumFound:
        finished_ = true;
        outcome_ = Outcome::OptimumFound;
        return;
    case PopulationStatus::Trapped:
        finished_ = true;
        outcome_ = Outcome::Trapped;
        return;
    case PopulationStatus::Continue:
        break;
    }
    const std::uint64_t done = t_ + (generation_ran ? 1 : 0);
    if (done >= config_.budget.max_generations ||
        evals_.total() >= config_.budget.max_evaluations) {
        finished_ = true;
        outcome_ = Outcome::BudgetExhausted;
    }
}

bool MaRun::step() {
    if (finished_)
        return false;

    const bool tau_fires = config_.schedule.kind == LsScheduleKind::EveryTau &&
                           t_ % config_.schedule.tau == 0;

    std::vector<Individual> offspring;
    offspring.reserve(config_.lambda);
    for (std::size_t j = 0; j < config_.lambda; ++j) {
        const Individual& parent = pop_[rng_.next_below(config_.mu)];
        BitString y = mutate(parent.point, config_.mutation_rate(), rng_);
        Fitness fy = f_.evaluate(y);
        ++evals_.mutation;

        bool fires = tau_fires;
        if (config_.schedule.kind == LsScheduleKind::Probability)
            fires = rng_.next_bernoulli(config_.schedule.p_ls);
        if (fires) {
            LsOutcome o = local_search(y, f_, config_.delta, config_.pivot, rng_,
                                       evals_.local_search, fy);
            y = std::move(o.point);
            fy = o.fitness;
            ++ls_invocations_;
        }
        offspring.push_back({std::move(y), fy, next_tag_++});
    }

    // Select the best mu of parents + offspring; ties prefer offspring, and
    // equals within a class keep creation order.
    std::vector<std::pair<const Individual*, bool>> all; // (individual, is_offspring)
    all.reserve(pop_.size() + offspring.size());
    for (const Individual& o : offspring)
        all.emplace_back(&o, true);
    for (const Individual& p : pop_)
        all.emplace_back(&p, false);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.first->fitness != b.first->fitness)
            return a.first->fitness > b.first->fitness;
        if (a.second != b.second)
            return a.second; // offspring ahead of parents
        return a.first->tag < b.first->tag;
    });
    std::vector<Individual> next;
    next.reserve(config_.mu);
    for (std::size_t i = 0; i < config_.mu; ++i)
        next.push_back(*all[i].first);
    pop_ = std::move(next);

    const std::int64_t now_best = best().fitness.value;
    if (now_best > trace_.back().best)
        trace_.push_back({t_, now_best});

    check_terminal(true);
    if (!finished_)
        ++t_;
    return !finished_;
}

RunRecord MaRun::record() const {
    RunRecord r;
    r.outcome = outcome_;
    r.generations = t_;
    r.evals = evals_;
    r.ls_invocations = ls_invocations_;
    r.trace = trace_;
    const Individual& b = best();
    r.best_point = b.point;
    r.best_fitness = b.fitness;
    r.config = config_;
    return r;
}

RunRecord run(const MAConfig& config, const FitnessFunction& f) {
    MaRun ma(config, f);
    while (ma.step()) {
    }
    return ma.record();
}

} // namespace malab
