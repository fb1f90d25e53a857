#include "malab/experiment/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace malab {

namespace {

// Seed-derivation namespaces: main replicates use child(master, axis*R + i)
// directly; pilot and calibration probes live in disjoint high index ranges.
constexpr std::uint64_t kPilotIndexBase = std::uint64_t{1} << 32;
constexpr std::uint64_t kCalibrateIndexBase = std::uint64_t{3} << 32;

std::uint64_t quantile(std::vector<std::uint64_t> v, double q) {
    // nearest-rank-lower; deterministic for any replicate count
    std::sort(v.begin(), v.end());
    const std::size_t idx = static_cast<std::size_t>(
        std::floor(q * static_cast<double>(v.size() - 1)));
    return v[idx];
}

} // namespace

void parallel_for(std::size_t jobs, int workers, const std::function<void(std::size_t)>& fn) {
    if (jobs == 0)
        return;
    std::size_t nthreads = workers > 0 ? static_cast<std::size_t>(workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, jobs);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < jobs; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs || failed.load())
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

const char* const kRunCsvHeader =
    "function,variant,n,mu,lambda,p_m,schedule,tau_or_pls,delta,pivot,seed,outcome,"
    "generations,mutation_evals,ls_evals,ls_invocations,best_fitness";

namespace {

std::string schedule_name(const LsSchedule& s) {
    switch (s.kind) {
    case LsScheduleKind::EveryTau:
        return "every_tau";
    case LsScheduleKind::Probability:
        return "probability";
    case LsScheduleKind::Never:
        return "never";
    }
    return "?";
}

std::string tau_or_pls(const LsSchedule& s) {
    switch (s.kind) {
    case LsScheduleKind::EveryTau:
        return std::to_string(s.tau);
    case LsScheduleKind::Probability:
        return format_double(s.p_ls);
    case LsScheduleKind::Never:
        return "-";
    }
    return "?";
}

std::string pivot_name(PivotRule p) {
    switch (p.kind) {
    case PivotKind::FirstImprovement:
        return p.order == ScanOrder::Fixed ? "first_fixed" : "first_shuffled";
    case PivotKind::SteepestAscent:
        return "steepest";
    case PivotKind::RandomImprovement:
        return "random";
    }
    return "?";
}

std::string variant_name(const std::string& fn_name) {
    if (fn_name == "race_con")
        return "con";
    if (fn_name == "race_uncon")
        return "uncon";
    return "-";
}

} // namespace

std::string run_row_csv(const ExperimentSpec& spec, const RunRow& row) {
    const RunRecord& r = row.record;
    std::ostringstream os;
    os << spec.fn.name << ',' << variant_name(spec.fn.name) << ',' << r.config.n << ','
       << r.config.mu << ',' << r.config.lambda << ',' << format_double(r.config.mutation_rate())
       << ',' << schedule_name(r.config.schedule) << ',' << tau_or_pls(r.config.schedule) << ','
       << r.config.delta << ',' << pivot_name(r.config.pivot) << ',' << r.config.seed << ','
       << outcome_name(r.outcome) << ',' << r.generations << ',' << r.evals.mutation << ','
       << r.evals.local_search << ',' << r.ls_invocations << ',' << r.best_fitness.value;
    return os.str();
}

std::string run_row_jsonl(const ExperimentSpec& spec, const RunRow& row) {
    const RunRecord& r = row.record;
    nlohmann::ordered_json j;
    j["replicate"] = row.replicate;
    if (!spec.sweep_deltas.empty() || !spec.sweep_taus.empty())
        j["axis_value"] = row.axis_value;
    j["function"] = spec.fn.name;
    j["seed"] = r.config.seed;
    j["n"] = r.config.n;
    j["mu"] = r.config.mu;
    j["lambda"] = r.config.lambda;
    j["p_m"] = r.config.mutation_rate();
    j["schedule"] = schedule_name(r.config.schedule);
    j["tau_or_pls"] = tau_or_pls(r.config.schedule);
    j["delta"] = r.config.delta;
    j["pivot"] = pivot_name(r.config.pivot);
    j["outcome"] = outcome_name(r.outcome);
    j["generations"] = r.generations;
    j["mutation_evals"] = r.evals.mutation;
    j["ls_evals"] = r.evals.local_search;
    j["total_evals"] = r.evals.total();
    j["ls_invocations"] = r.ls_invocations;
    j["best_fitness"] = r.best_fitness.value;
    j["best_point"] = r.best_point.str();
    auto trace = nlohmann::ordered_json::array();
    for (const TracePoint& t : r.trace)
        trace.push_back({t.generation, t.best});
    j["trace"] = std::move(trace);
    return j.dump();
}

void write_header_block(std::ostream& os, const ExperimentSpec& spec,
                        const std::vector<std::pair<std::string, std::string>>& extra) {
    os << "# malab 0.1.0\n";
    os << "# master_seed=" << spec.master_seed << "\n";
    for (const auto& [k, v] : spec.echo())
        os << "# spec " << k << "=" << v << "\n";
    for (const auto& [k, v] : extra)
        os << "# " << k << "=" << v << "\n";
}

std::vector<RunRow> execute_replicates(const ExperimentSpec& spec, const FitnessFunction& f,
                                       std::uint64_t axis_index, std::uint64_t axis_value,
                                       const MAConfig& config) {
    const RngStream master(spec.master_seed);
    const InitStrategy init = spec.resolve_init(f);
    std::vector<RunRow> rows(spec.replicates);
    parallel_for(spec.replicates, spec.workers, [&](std::size_t i) {
        MAConfig c = config;
        c.init = init;
        c.seed = master.child(axis_index * spec.replicates + i).seed();
        rows[i].axis_value = axis_value;
        rows[i].replicate = i;
        rows[i].record = run(c, f);
    });
    return rows;
}

AxisAggregate aggregate_axis(std::uint64_t value, const std::vector<RunRow>& rows) {
    AxisAggregate a;
    a.value = value;
    a.replicates = rows.size();
    std::vector<std::uint64_t> gens, evals;
    gens.reserve(rows.size());
    evals.reserve(rows.size());
    for (const RunRow& r : rows) {
        switch (r.record.outcome) {
        case Outcome::OptimumFound:
            a.optimum_rate += 1;
            break;
        case Outcome::Trapped:
            a.trapped_rate += 1;
            break;
        case Outcome::BudgetExhausted:
            a.budget_rate += 1;
            break;
        }
        gens.push_back(r.record.generations);
        evals.push_back(r.record.evals.total());
    }
    const double n = static_cast<double>(rows.size());
    a.optimum_rate /= n;
    a.trapped_rate /= n;
    a.budget_rate /= n;
    a.generations_q1 = quantile(gens, 0.25);
    a.generations_median = quantile(gens, 0.5);
    a.generations_q3 = quantile(gens, 0.75);
    a.evaluations_q1 = quantile(evals, 0.25);
    a.evaluations_median = quantile(evals, 0.5);
    a.evaluations_q3 = quantile(evals, 0.75);
    return a;
}

const char* const kSweepCsvHeader =
    "value,replicates,optimum_rate,trapped_rate,budget_rate,"
    "generations_q1,generations_median,generations_q3,"
    "evaluations_q1,evaluations_median,evaluations_q3";

std::string aggregate_csv(const AxisAggregate& a) {
    std::ostringstream os;
    os << a.value << ',' << a.replicates << ',' << format_double(a.optimum_rate) << ','
       << format_double(a.trapped_rate) << ',' << format_double(a.budget_rate) << ','
       << a.generations_q1 << ',' << a.generations_median << ',' << a.generations_q3 << ','
       << a.evaluations_q1 << ',' << a.evaluations_median << ',' << a.evaluations_q3;
    return os.str();
}

namespace {

struct PilotOutcome {
    std::uint64_t budget_generations = 0;
    std::string note;
};

// Derives the main-phase generation budget: 10x the median generation count
// of decided runs at the best-performing axis value. Pilot replicates draw
// seeds from a disjoint child-index range so they never overlap main runs.
PilotOutcome pilot_budget(const ExperimentSpec& spec, const FitnessFunction& f,
                          const std::vector<std::uint64_t>& values,
                          const std::function<MAConfig(std::uint64_t)>& make_config,
                          bool count_trap_as_decided) {
    if (spec.ma.budget.max_generations != kUnlimited)
        return {spec.ma.budget.max_generations, "budget_source=config"};

    const RngStream master(spec.master_seed);
    const InitStrategy init = spec.resolve_init(f);
    const std::uint64_t reps = std::max<std::uint64_t>(spec.pilot_replicates, 1);

    struct Cell {
        double success = 0;
        std::vector<std::uint64_t> decided_gens;
    };
    std::vector<Cell> cells(values.size());
    std::vector<RunRow> rows(values.size() * reps);
    parallel_for(rows.size(), spec.workers, [&](std::size_t idx) {
        const std::size_t a = idx / reps;
        const std::size_t i = idx % reps;
        MAConfig c = make_config(values[a]);
        c.init = init;
        c.budget.max_generations = spec.pilot_max_generations;
        c.seed = master.child(kPilotIndexBase + a * reps + i).seed();
        rows[idx].record = run(c, f);
    });
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        Cell& cell = cells[idx / reps];
        const RunRecord& r = rows[idx].record;
        if (r.outcome == Outcome::OptimumFound ||
            (count_trap_as_decided && r.outcome == Outcome::Trapped))
            cell.decided_gens.push_back(r.generations);
        if (r.outcome == Outcome::OptimumFound)
            cell.success += 1;
    }

    std::size_t best = values.size();
    for (std::size_t a = 0; a < values.size(); ++a) {
        if (cells[a].decided_gens.empty())
            continue;
        if (best == values.size() || cells[a].success > cells[best].success ||
            (cells[a].success == cells[best].success &&
             quantile(cells[a].decided_gens, 0.5) < quantile(cells[best].decided_gens, 0.5)))
            best = a;
    }
    if (best == values.size())
        throw ConfigError("pilot phase found no decided run; set max_generations explicitly");
    const std::uint64_t median = quantile(cells[best].decided_gens, 0.5);
    PilotOutcome out;
    out.budget_generations = std::max<std::uint64_t>(10 * std::max<std::uint64_t>(median, 1), 10);
    out.note = "budget_source=pilot best_value=" + std::to_string(values[best]) +
               " pilot_median_generations=" + std::to_string(median) +
               " pilot_replicates=" + std::to_string(reps);
    return out;
}

SweepResult sweep_over(const ExperimentSpec& spec, const FitnessFunction& f,
                       const std::vector<std::uint64_t>& values,
                       const std::function<MAConfig(std::uint64_t)>& make_config,
                       bool count_trap_as_decided) {
    SweepResult res;
    const PilotOutcome pilot =
        pilot_budget(spec, f, values, make_config, count_trap_as_decided);
    res.budget_generations = pilot.budget_generations;
    res.pilot_note = pilot.note;
    for (std::size_t a = 0; a < values.size(); ++a) {
        MAConfig c = make_config(values[a]);
        c.budget.max_generations = pilot.budget_generations;
        std::vector<RunRow> rows = execute_replicates(spec, f, a, values[a], c);
        res.aggregates.push_back(aggregate_axis(values[a], rows));
        res.raw.insert(res.raw.end(), rows.begin(), rows.end());
    }
    return res;
}

} // namespace

SweepResult sweep_delta(const ExperimentSpec& spec) {
    if (spec.fn.name != "f_d")
        throw ConfigError("sweep-delta requires function=f_d");
    if (spec.sweep_deltas.empty())
        throw ConfigError("sweep-delta requires a deltas=... list");
    const std::uint64_t d = spec.fn.depth, g = spec.fn.gap;
    const auto& vs = spec.sweep_deltas;
    const bool has_center = std::find(vs.begin(), vs.end(), d) != vs.end();
    const bool has_low = std::any_of(vs.begin(), vs.end(),
                                     [&](std::uint64_t v) { return v + g <= d; });
    const bool has_high = std::any_of(vs.begin(), vs.end(),
                                      [&](std::uint64_t v) { return v >= d + g; });
    if (!has_center || !has_low || !has_high)
        std::cerr << "warning: deltas list does not bracket depth D with +/- gap values\n";

    auto f = make_function(spec.fn);
    auto make_config = [&](std::uint64_t delta) {
        MAConfig c = spec.ma;
        c.delta = delta;
        return c;
    };
    return sweep_over(spec, *f, spec.sweep_deltas, make_config, false);
}

SweepResult sweep_tau(const ExperimentSpec& spec) {
    if (spec.fn.name != "race_con" && spec.fn.name != "race_uncon")
        throw ConfigError("sweep-tau requires function=race_con or race_uncon");
    if (spec.sweep_taus.empty())
        throw ConfigError("sweep-tau requires a taus=... list");
    if (spec.ma.mu != 1 || spec.ma.lambda != 1)
        throw ConfigError("sweep-tau is defined for mu=1, lambda=1");
    if (spec.ma.delta < 36)
        std::cerr << "warning: delta=" << spec.ma.delta
                  << " is below the scaled analogue of the depth>=36 condition\n";
    for (std::uint64_t tau : spec.sweep_taus)
        if (static_cast<double>(spec.ma.delta) / static_cast<double>(tau) <
            2.0 / static_cast<double>(spec.fn.n))
            std::cerr << "warning: delta/tau < 2/n at tau=" << tau << "\n";

    auto f = make_function(spec.fn);
    auto make_config = [&](std::uint64_t tau) {
        MAConfig c = spec.ma;
        c.schedule = LsSchedule::every_tau(tau);
        return c;
    };
    return sweep_over(spec, *f, spec.sweep_taus, make_config, true);
}

namespace {

// Builds the Con-variant race used by calibration probes; the winner
// identity (which end is reached first) does not depend on the variant.
std::shared_ptr<const RaceFn> probe_race(const ExperimentSpec& spec, std::uint64_t l_con,
                                         std::uint64_t l_unc) {
    RaceParams p;
    p.half_dim = spec.fn.n / 2;
    p.k = spec.fn.k_or_default();
    p.l_con = l_con;
    p.l_unc = l_unc;
    p.weight = spec.fn.weight;
    p.variant = RaceVariant::Con;
    return std::make_shared<RaceFn>(p);
}

} // namespace

CalibrationResult race_calibrate(const ExperimentSpec& spec, CalibrationTargets targets) {
    CalibrationResult res;
    if (spec.fn.name != "race_con" && spec.fn.name != "race_uncon")
        throw ConfigError("race-calibrate requires function=race_con or race_uncon");
    if (spec.fn.n == 0 || spec.fn.n % 2 != 0)
        throw ConfigError("race-calibrate requires an even n");
    if (spec.ma.mu != 1 || spec.ma.lambda != 1)
        throw ConfigError("race-calibrate is defined for mu=1, lambda=1");
    if (spec.ma.schedule.kind != LsScheduleKind::EveryTau)
        throw ConfigError("race-calibrate requires schedule=every_tau");

    const std::uint64_t tau = spec.ma.schedule.tau;
    const RngStream master(spec.master_seed);
    auto path = LongKPath::build(spec.fn.n / 2, spec.fn.k_or_default());
    const std::uint64_t len = path->length();
    const std::uint64_t l_con_max = len - 1;
    const std::uint64_t l_unc_max = (len - 1) / 3;

    res.params.half_dim = spec.fn.n / 2;
    res.params.k = spec.fn.k_or_default();
    res.params.weight = spec.fn.weight;
    res.params.variant = spec.fn.name == "race_con" ? RaceVariant::Con : RaceVariant::Uncon;

    if (l_unc_max < 1 || spec.fn.start_unc >= l_unc_max || spec.fn.start_con >= l_con_max) {
        res.diagnosis = "path of length " + std::to_string(len) +
                        " leaves no usable unconnected range";
        return res;
    }

    std::uint64_t probe_seed = 0;
    auto next_probe_seed = [&] { return master.child(kCalibrateIndexBase + probe_seed++).seed(); };

    // Phase 1: progress rates on a no-terminal instance (maximal lengths).
    auto rate_probe = [&](std::uint64_t probe_tau, double& rho_con, double& rho_unc) {
        auto f = probe_race(spec, l_con_max, l_unc_max);
        const std::uint64_t gens = std::min<std::uint64_t>(spec.pilot_max_generations, 400000);
        const int reps = 4;
        double con = 0, unc = 0, total_gens = 0;
        for (int i = 0; i < reps; ++i) {
            MAConfig c = spec.ma;
            c.schedule = LsSchedule::every_tau(probe_tau);
            c.init = InitStrategy::copies_of(f->point_at(spec.fn.start_con, spec.fn.start_unc));
            c.budget.max_generations = gens;
            c.seed = next_probe_seed();
            const RunRecord r = run(c, *f);
            const auto pos = f->decode(r.best_point);
            if (pos) {
                con += static_cast<double>(pos->first - spec.fn.start_con);
                unc += static_cast<double>(pos->second - spec.fn.start_unc);
            }
            total_gens += static_cast<double>(std::max<std::uint64_t>(r.generations, 1));
        }
        rho_con = con / total_gens;
        rho_unc = unc / total_gens;
    };

    double rho_con_tau = 0, rho_unc_tau = 0, rho_con_2tau = 0, rho_unc_2tau = 0;
    rate_probe(tau, rho_con_tau, rho_unc_tau);
    rate_probe(2 * tau, rho_con_2tau, rho_unc_2tau);
    const double rho_unc = (rho_unc_tau + rho_unc_2tau) / 2;

    auto measure = [&](std::uint64_t l_con, std::uint64_t l_unc, std::uint64_t probe_tau,
                       std::uint64_t reps) {
        auto f = probe_race(spec, l_con, l_unc);
        // Cap generations well past both expected finishing times.
        double t_con_est = rho_con_2tau > 0
                               ? static_cast<double>(l_con) / rho_con_2tau
                               : 1e7;
        double t_unc_est = rho_unc > 0 ? static_cast<double>(l_unc) / rho_unc : 1e7;
        const std::uint64_t cap = std::min<std::uint64_t>(
            std::max<std::uint64_t>(
                static_cast<std::uint64_t>(30 * std::max(t_con_est, t_unc_est)), 100000),
            std::uint64_t{50000000});
        CalibrationProbe probe;
        probe.l_con = l_con;
        probe.l_unc = l_unc;
        probe.tau = probe_tau;
        probe.replicates = reps;
        std::vector<Outcome> outcomes(reps);
        std::vector<std::uint64_t> seeds(reps);
        for (std::uint64_t i = 0; i < reps; ++i)
            seeds[i] = next_probe_seed();
        parallel_for(reps, spec.workers, [&](std::size_t i) {
            MAConfig c = spec.ma;
            c.schedule = LsSchedule::every_tau(probe_tau);
            c.init = InitStrategy::copies_of(f->point_at(spec.fn.start_con, spec.fn.start_unc));
            c.budget.max_generations = cap;
            c.seed = seeds[i];
            outcomes[i] = run(c, *f).outcome;
        });
        for (Outcome o : outcomes) {
            if (o == Outcome::OptimumFound)
                ++probe.con_wins;
            else if (o == Outcome::Trapped)
                ++probe.unc_wins;
            else
                ++probe.undecided;
        }
        probe.con_win_rate = static_cast<double>(probe.con_wins) / static_cast<double>(reps);
        res.probes.push_back(probe);
        return probe.con_win_rate;
    };

    if (rho_unc <= 0) {
        const double p1 = measure(l_con_max, l_unc_max, tau, spec.replicates);
        const double p2 = measure(l_con_max, l_unc_max, 2 * tau, spec.replicates);
        res.params.l_con = l_con_max;
        res.params.l_unc = l_unc_max;
        res.p_con_at_tau = p1;
        res.p_con_at_2tau = p2;
        res.diagnosis = "no unconnected-path progress observed in the rate probes; "
                        "3-bit jumps are too rare at n=" +
                        std::to_string(spec.fn.n) + " to race within this budget";
        return res;
    }

    // Phase 2: coarse grid seeded by the measured rates.
    const double rho_con_geo = std::sqrt(std::max(rho_con_tau, 1e-12) *
                                         std::max(rho_con_2tau, 1e-12));
    std::vector<std::uint64_t> l_unc_grid;
    for (std::uint64_t cand : {l_unc_max, std::max<std::uint64_t>(l_unc_max / 2, 1),
                               std::max<std::uint64_t>(l_unc_max / 4, 1)})
        if (std::find(l_unc_grid.begin(), l_unc_grid.end(), cand) == l_unc_grid.end() &&
            cand > spec.fn.start_unc)
            l_unc_grid.push_back(cand);

    const std::uint64_t grid_reps = std::max<std::uint64_t>(spec.replicates / 3, 8);
    double best_score = -2.0;
    std::uint64_t best_l_con = l_con_max, best_l_unc = l_unc_max;
    double best_p1 = 0, best_p2 = 0;

    auto consider = [&](std::uint64_t l_con, std::uint64_t l_unc, std::uint64_t reps) {
        const double p1 = measure(l_con, l_unc, tau, reps);
        const double p2 = measure(l_con, l_unc, 2 * tau, reps);
        const double score = std::min(p1 - targets.win_hi, targets.win_lo - p2);
        if (score > best_score) {
            best_score = score;
            best_l_con = l_con;
            best_l_unc = l_unc;
            best_p1 = p1;
            best_p2 = p2;
        }
        return score;
    };

    for (std::uint64_t l_unc : l_unc_grid) {
        const double t_unc = static_cast<double>(l_unc - spec.fn.start_unc) / rho_unc;
        const double ideal = static_cast<double>(spec.fn.start_con) + rho_con_geo * t_unc;
        std::uint64_t l_con = static_cast<std::uint64_t>(std::llround(ideal));
        l_con = std::min(std::max<std::uint64_t>(l_con, spec.fn.start_con + 1), l_con_max);
        consider(l_con, l_unc, grid_reps);
    }
    consider(l_con_max, l_unc_max, grid_reps);

    // Phase 3: bisection on l_unc at the best l_con. Raising l_unc slows the
    // unconnected side, raising the connected win rate at both periods.
    std::uint64_t lo = spec.fn.start_unc + 1, hi = l_unc_max;
    std::uint64_t cur = best_l_unc;
    for (int iter = 0; iter < 8 && lo < hi; ++iter) {
        const double p1 = measure(best_l_con, cur, tau, grid_reps);
        const double p2 = measure(best_l_con, cur, 2 * tau, grid_reps);
        const double score = std::min(p1 - targets.win_hi, targets.win_lo - p2);
        if (score > best_score) {
            best_score = score;
            best_l_unc = cur;
            best_p1 = p1;
            best_p2 = p2;
        }
        if (p2 > targets.win_lo)
            hi = cur > lo ? cur - 1 : lo; // connected still wins at 2*tau: shrink l_unc
        else if (p1 < targets.win_hi)
            lo = cur + 1; // connected loses at tau: grow l_unc
        else
            break;
        if (lo > hi)
            break;
        cur = lo + (hi - lo) / 2;
    }

    // Final verification at full replicate count.
    const double p1 = measure(best_l_con, best_l_unc, tau, spec.replicates);
    const double p2 = measure(best_l_con, best_l_unc, 2 * tau, spec.replicates);
    res.params.l_con = best_l_con;
    res.params.l_unc = best_l_unc;
    res.p_con_at_tau = p1;
    res.p_con_at_2tau = p2;
    res.feasible = p1 >= targets.win_hi && p2 <= targets.win_lo;
    if (!res.feasible) {
        std::ostringstream os;
        os << "no feasible (l_con, l_unc) pair found: best pair (" << best_l_con << ", "
           << best_l_unc << ") has P(con wins | tau)=" << format_double(p1)
           << " and P(con wins | 2tau)=" << format_double(p2) << " against targets >= "
           << format_double(targets.win_hi) << " / <= " << format_double(targets.win_lo)
           << "; measured progress rates per generation: connected " << format_double(rho_con_tau)
           << " at tau, " << format_double(rho_con_2tau) << " at 2tau, unconnected "
           << format_double(rho_unc);
        res.diagnosis = os.str();
    }
    return res;
}

} // namespace malab
