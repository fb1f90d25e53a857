#include "malab/experiment/spec.hpp"

#include "malab/race_fn.hpp"
#include "malab/sectioned_path_fn.hpp"

#include <cstdio>

namespace malab {

unsigned FunctionSpec::k_or_default() const {
    if (k != 0)
        return k;
    if (name == "longpath")
        return 2;
    if (name == "race_con" || name == "race_uncon")
        return 4;
    return 0; // f_d has no default; onemax has no k
}

std::shared_ptr<const FitnessFunction> make_function(const FunctionSpec& fn) {
    if (fn.n == 0)
        throw ConfigError("function '" + fn.name + "' requires n >= 1");
    if (fn.name == "onemax")
        return std::make_shared<OneMax>(fn.n);
    if (fn.name == "longpath")
        return std::make_shared<LongPathFn>(fn.n, fn.k_or_default());
    if (fn.name == "f_d") {
        if (fn.k == 0)
            throw ConfigError("function 'f_d' requires k");
        SectionedPathParams p;
        p.dim = fn.n;
        p.k = fn.k;
        p.depth = fn.depth;
        p.gap = fn.gap;
        p.sections = fn.sections;
        try {
            return std::make_shared<SectionedPathFn>(p);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("f_d: ") + e.what());
        }
    }
    if (fn.name == "race_con" || fn.name == "race_uncon") {
        if (fn.n % 2 != 0)
            throw ConfigError("race functions require an even n");
        RaceParams p;
        p.half_dim = fn.n / 2;
        p.k = fn.k_or_default();
        p.l_con = fn.l_con;
        p.l_unc = fn.l_unc;
        p.weight = fn.weight;
        p.variant = fn.name == "race_con" ? RaceVariant::Con : RaceVariant::Uncon;
        try {
            return std::make_shared<RaceFn>(p);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("race: ") + e.what());
        }
    }
    throw ConfigError("unknown function name: " + fn.name +
                      " (expected onemax, longpath, f_d, race_con, race_uncon)");
}

InitStrategy ExperimentSpec::resolve_init(const FitnessFunction& f) const {
    if (init_mode == "uniform")
        return InitStrategy::uniform_random();
    if (init_mode == "path_start") {
        if (auto* lp = dynamic_cast<const LongPathFn*>(&f))
            return InitStrategy::copies_of(lp->path().point(0));
        if (auto* fd = dynamic_cast<const SectionedPathFn*>(&f))
            return InitStrategy::copies_of(fd->path().point(0));
        if (auto* race = dynamic_cast<const RaceFn*>(&f))
            return InitStrategy::copies_of(race->point_at(fn.start_con, fn.start_unc));
        throw ConfigError("init=path_start requires a path-based function");
    }
    if (init_mode.rfind("bits:", 0) == 0) {
        BitString p;
        try {
            p = BitString::parse(init_mode.substr(5));
        } catch (const std::exception&) {
            throw ConfigError("init=bits:... expects a string of 0s and 1s");
        }
        if (p.length() != f.dim())
            throw ConfigError("init=bits:... length does not match the function dimension");
        return InitStrategy::copies_of(std::move(p));
    }
    throw ConfigError("unknown init mode: " + init_mode +
                      " (expected uniform, path_start, bits:<01...>)");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> ExperimentSpec::echo() const {
    std::vector<std::pair<std::string, std::string>> kv;
    auto put = [&](const std::string& k, std::string v) { kv.emplace_back(k, std::move(v)); };
    put("function", fn.name);
    put("n", std::to_string(fn.n));
    if (fn.name != "onemax")
        put("k", std::to_string(fn.k_or_default()));
    if (fn.name == "f_d") {
        put("depth", std::to_string(fn.depth));
        put("gap", std::to_string(fn.gap));
        put("sections", std::to_string(fn.sections));
    }
    if (fn.name == "race_con" || fn.name == "race_uncon") {
        put("l_con", std::to_string(fn.l_con));
        put("l_unc", std::to_string(fn.l_unc));
        put("weight", std::to_string(fn.weight));
        put("start_con", std::to_string(fn.start_con));
        put("start_unc", std::to_string(fn.start_unc));
    }
    put("mu", std::to_string(ma.mu));
    put("lambda", std::to_string(ma.lambda));
    put("p_m", format_double(ma.mutation_rate()));
    switch (ma.schedule.kind) {
    case LsScheduleKind::EveryTau:
        put("schedule", "every_tau");
        put("tau", std::to_string(ma.schedule.tau));
        break;
    case LsScheduleKind::Probability:
        put("schedule", "probability");
        put("p_ls", format_double(ma.schedule.p_ls));
        break;
    case LsScheduleKind::Never:
        put("schedule", "never");
        break;
    }
    put("delta", std::to_string(ma.delta));
    switch (ma.pivot.kind) {
    case PivotKind::FirstImprovement:
        put("pivot", ma.pivot.order == ScanOrder::Fixed ? "first_fixed" : "first_shuffled");
        break;
    case PivotKind::SteepestAscent:
        put("pivot", "steepest");
        break;
    case PivotKind::RandomImprovement:
        put("pivot", "random");
        break;
    }
    put("init", init_mode);
    if (ma.budget.max_generations != kUnlimited)
        put("max_generations", std::to_string(ma.budget.max_generations));
    if (ma.budget.max_evaluations != kUnlimited)
        put("max_evaluations", std::to_string(ma.budget.max_evaluations));
    if (!sweep_deltas.empty()) {
        std::string s;
        for (std::size_t i = 0; i < sweep_deltas.size(); ++i)
            s += (i ? "," : "") + std::to_string(sweep_deltas[i]);
        put("deltas", s);
    }
    if (!sweep_taus.empty()) {
        std::string s;
        for (std::size_t i = 0; i < sweep_taus.size(); ++i)
            s += (i ? "," : "") + std::to_string(sweep_taus[i]);
        put("taus", s);
    }
    put("pilot_replicates", std::to_string(pilot_replicates));
    put("pilot_max_generations", std::to_string(pilot_max_generations));
    put("replicates", std::to_string(replicates));
    put("master_seed", std::to_string(master_seed));
    return kv;
}

const std::set<std::string>& run_schema_keys() {
    static const std::set<std::string> keys = {
        "function", "n", "k", "depth", "gap", "sections", "l_con", "l_unc", "weight",
        "start_con", "start_unc", "mu", "lambda", "p_m", "schedule", "tau", "p_ls",
        "delta", "pivot", "init", "max_generations", "max_evaluations", "replicates",
        "master_seed", "pilot_replicates", "pilot_max_generations",
    };
    return keys;
}

ExperimentSpec spec_from_config(const KeyValueConfig& cfg,
                                const std::set<std::string>& extra_allowed) {
    std::set<std::string> allowed = run_schema_keys();
    allowed.insert(extra_allowed.begin(), extra_allowed.end());
    cfg.require_known(allowed);

    ExperimentSpec spec;
    spec.fn.name = cfg.get_string("function", "onemax");
    spec.fn.n = cfg.get_u64("n", 0);
    spec.fn.k = static_cast<unsigned>(cfg.get_u64("k", 0));
    spec.fn.depth = cfg.get_u64("depth", 0);
    spec.fn.gap = cfg.get_u64("gap", 0);
    spec.fn.sections = cfg.get_u64("sections", 0);
    spec.fn.l_con = cfg.get_u64("l_con", 0);
    spec.fn.l_unc = cfg.get_u64("l_unc", 0);
    spec.fn.weight = cfg.get_i64("weight", -1);
    spec.fn.start_con = cfg.get_u64("start_con", 0);
    spec.fn.start_unc = cfg.get_u64("start_unc", 0);

    spec.ma.n = spec.fn.n;
    spec.ma.mu = cfg.get_u64("mu", 1);
    spec.ma.lambda = cfg.get_u64("lambda", 1);
    spec.ma.p_m = cfg.get_double("p_m", -1.0);
    const std::string sched = cfg.get_string("schedule", "every_tau");
    if (sched == "every_tau")
        spec.ma.schedule = LsSchedule::every_tau(cfg.get_u64("tau", 1));
    else if (sched == "probability")
        spec.ma.schedule = LsSchedule::probability(cfg.get_double("p_ls", 0.0));
    else if (sched == "never")
        spec.ma.schedule = LsSchedule::never();
    else
        throw ConfigError("unknown schedule: " + sched +
                          " (expected every_tau, probability, never)");
    spec.ma.delta = cfg.get_u64("delta", 0);
    const std::string pivot = cfg.get_string("pivot", "first_fixed");
    if (pivot == "first_fixed")
        spec.ma.pivot = PivotRule::first_improvement(ScanOrder::Fixed);
    else if (pivot == "first_shuffled")
        spec.ma.pivot = PivotRule::first_improvement(ScanOrder::Shuffled);
    else if (pivot == "steepest")
        spec.ma.pivot = PivotRule::steepest_ascent();
    else if (pivot == "random")
        spec.ma.pivot = PivotRule::random_improvement();
    else
        throw ConfigError("unknown pivot: " + pivot +
                          " (expected first_fixed, first_shuffled, steepest, random)");
    spec.ma.budget.max_generations = cfg.get_u64("max_generations", kUnlimited);
    spec.ma.budget.max_evaluations = cfg.get_u64("max_evaluations", kUnlimited);

    spec.init_mode = cfg.get_string("init", "uniform");
    spec.replicates = cfg.get_u64("replicates", 1);
    spec.master_seed = cfg.get_u64("master_seed", 1);
    spec.sweep_deltas = cfg.get_u64_list("deltas");
    spec.sweep_taus = cfg.get_u64_list("taus");
    spec.pilot_replicates = cfg.get_u64("pilot_replicates", 10);
    spec.pilot_max_generations = cfg.get_u64("pilot_max_generations", 1u << 21);

    if (spec.replicates < 1)
        throw ConfigError("replicates must be >= 1");
    return spec;
}

} // namespace malab
