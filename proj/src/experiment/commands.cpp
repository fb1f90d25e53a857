#include "malab/experiment/commands.hpp"

#include "malab/autocorrelation.hpp"
#include "malab/experiment/runner.hpp"
#include "malab/state_graph.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace malab {

namespace {

KeyValueConfig load_config(const CommandOptions& opts) {
    KeyValueConfig cfg;
    if (!opts.config_path.empty())
        cfg = KeyValueConfig::from_file(opts.config_path);
    for (const std::string& s : opts.sets)
        cfg.apply_set_arg(s);
    return cfg;
}

ExperimentSpec make_spec(const CommandOptions& opts, const std::set<std::string>& extra = {}) {
    ExperimentSpec spec = spec_from_config(load_config(opts), extra);
    if (opts.replicates > 0)
        spec.replicates = opts.replicates;
    if (opts.master_seed > 0)
        spec.master_seed = opts.master_seed;
    spec.workers = opts.workers;
    spec.out_dir = opts.out_dir;
    spec.format = opts.format;
    if (spec.format != "csv" && spec.format != "jsonl" && spec.format != "both")
        throw ConfigError("--format expects csv, jsonl or both");
    return spec;
}

std::ofstream open_out(const ExperimentSpec& spec, const std::string& file) {
    std::filesystem::create_directories(spec.out_dir);
    const std::string path = spec.out_dir + "/" + file;
    std::ofstream os(path, std::ios::binary); // \n endings on every platform
    if (!os)
        throw ConfigError("cannot open output file: " + path);
    return os;
}

void write_raw(const ExperimentSpec& spec, const std::vector<RunRow>& rows,
               const std::string& base,
               const std::vector<std::pair<std::string, std::string>>& extra = {}) {
    if (spec.format == "csv" || spec.format == "both") {
        auto os = open_out(spec, base + ".csv");
        write_header_block(os, spec, extra);
        os << kRunCsvHeader << "\n";
        for (const RunRow& r : rows)
            os << run_row_csv(spec, r) << "\n";
    }
    if (spec.format == "jsonl" || spec.format == "both") {
        auto os = open_out(spec, base + ".jsonl");
        nlohmann::ordered_json hdr;
        hdr["header"]["version"] = "malab 0.1.0";
        hdr["header"]["master_seed"] = spec.master_seed;
        for (const auto& [k, v] : spec.echo())
            hdr["header"]["spec"][k] = v;
        for (const auto& [k, v] : extra)
            hdr["header"][k] = v;
        os << hdr.dump() << "\n";
        for (const RunRow& r : rows)
            os << run_row_jsonl(spec, r) << "\n";
    }
}

void write_summary(const ExperimentSpec& spec, const SweepResult& sweep,
                   const std::string& base) {
    auto os = open_out(spec, base + ".csv");
    write_header_block(os, spec,
                       {{"budget_generations", std::to_string(sweep.budget_generations)},
                        {"pilot", sweep.pilot_note}});
    os << kSweepCsvHeader << "\n";
    for (const AxisAggregate& a : sweep.aggregates)
        os << aggregate_csv(a) << "\n";
}

} // namespace

int cmd_run(const CommandOptions& opts) {
    ExperimentSpec spec = make_spec(opts);
    auto f = make_function(spec.fn);
    if (spec.ma.n != f->dim())
        throw ConfigError("internal: n mismatch");
    std::vector<RunRow> rows = execute_replicates(spec, *f, 0, 0, spec.ma);
    write_raw(spec, rows, "run");
    std::cout << "wrote " << rows.size() << " runs to " << spec.out_dir << "/run."
              << (spec.format == "both" ? "csv+jsonl" : spec.format) << "\n";
    return 0;
}

int cmd_sweep_delta(const CommandOptions& opts) {
    ExperimentSpec spec = make_spec(opts, {"deltas"});
    SweepResult sweep = sweep_delta(spec);
    write_raw(spec, sweep.raw, "sweep_delta_raw",
              {{"budget_generations", std::to_string(sweep.budget_generations)},
               {"pilot", sweep.pilot_note}});
    write_summary(spec, sweep, "sweep_delta_summary");
    for (const AxisAggregate& a : sweep.aggregates)
        std::cout << "delta=" << a.value << " success=" << format_double(a.optimum_rate)
                  << " median_generations=" << a.generations_median << "\n";
    return 0;
}

int cmd_sweep_tau(const CommandOptions& opts) {
    ExperimentSpec spec = make_spec(opts, {"taus"});
    SweepResult sweep = sweep_tau(spec);
    write_raw(spec, sweep.raw, "sweep_tau_raw",
              {{"budget_generations", std::to_string(sweep.budget_generations)},
               {"pilot", sweep.pilot_note}});
    write_summary(spec, sweep, "sweep_tau_summary");
    for (const AxisAggregate& a : sweep.aggregates)
        std::cout << "tau=" << a.value << " optimum=" << format_double(a.optimum_rate)
                  << " trapped=" << format_double(a.trapped_rate) << "\n";
    return 0;
}

int cmd_race_calibrate(const CommandOptions& opts) {
    ExperimentSpec spec = make_spec(opts, {"cal_target_hi", "cal_target_lo"});
    const KeyValueConfig cfg = load_config(opts);
    CalibrationTargets targets;
    targets.win_hi = cfg.get_double("cal_target_hi", 0.9);
    targets.win_lo = cfg.get_double("cal_target_lo", 0.1);

    CalibrationResult cal = race_calibrate(spec, targets);

    {
        auto os = open_out(spec, "calibration_probes.csv");
        write_header_block(os, spec);
        os << "l_con,l_unc,tau,replicates,con_wins,unc_wins,undecided,con_win_rate\n";
        for (const CalibrationProbe& p : cal.probes)
            os << p.l_con << ',' << p.l_unc << ',' << p.tau << ',' << p.replicates << ','
               << p.con_wins << ',' << p.unc_wins << ',' << p.undecided << ','
               << format_double(p.con_win_rate) << "\n";
    }
    {
        auto os = open_out(spec, "calibration_result.txt");
        write_header_block(os, spec);
        os << "feasible=" << (cal.feasible ? "yes" : "no") << "\n";
        os << "l_con=" << cal.params.l_con << "\n";
        os << "l_unc=" << cal.params.l_unc << "\n";
        os << "weight=" << cal.params.weight_or_default() << "\n";
        os << "p_con_at_tau=" << format_double(cal.p_con_at_tau) << "\n";
        os << "p_con_at_2tau=" << format_double(cal.p_con_at_2tau) << "\n";
        if (!cal.diagnosis.empty())
            os << "diagnosis=" << cal.diagnosis << "\n";
    }

    std::cout << (cal.feasible ? "calibrated" : "infeasible") << ": l_con=" << cal.params.l_con
              << " l_unc=" << cal.params.l_unc
              << " P(con|tau)=" << format_double(cal.p_con_at_tau)
              << " P(con|2tau)=" << format_double(cal.p_con_at_2tau) << "\n";
    if (!cal.feasible) {
        std::cerr << cal.diagnosis << "\n";
        return 2;
    }
    return 0;
}

int cmd_stategraph(const CommandOptions& opts) {
    static const std::set<std::string> extra = {"analyses", "walk_length", "max_lag",
                                                "burn_in",  "samples",     "exhaustive_limit"};
    ExperimentSpec spec = make_spec(opts, extra);
    const KeyValueConfig cfg = load_config(opts);
    const std::string analyses = cfg.get_string("analyses", "sinks");
    const std::size_t limit = cfg.get_u64("exhaustive_limit", 20);

    auto f = make_function(spec.fn);
    auto wants = [&](const std::string& a) {
        return analyses.find(a) != std::string::npos || analyses == "all";
    };

    const bool needs_graph =
        wants("sinks") || wants("longest_path") || wants("edges") || wants("dot");
    StateGraph g;
    if (needs_graph)
        g = build_state_graph(*f, limit);

    if (wants("sinks")) {
        auto os = open_out(spec, "sinks.csv");
        write_header_block(os, spec);
        os << "bits,fitness\n";
        for (const BitString& s : sinks(g))
            os << s.str() << ',' << f->evaluate(s).value << "\n";
    }
    if (wants("longest_path")) {
        const LongestPathResult lp = longest_improving_path(g);
        auto os = open_out(spec, "longest_path.csv");
        write_header_block(os, spec, {{"length", std::to_string(lp.length)}});
        os << "step,bits,fitness\n";
        for (std::size_t i = 0; i < lp.witness.size(); ++i)
            os << i << ',' << lp.witness[i].str() << ',' << f->evaluate(lp.witness[i]).value
               << "\n";
        std::cout << "longest_improving_path=" << lp.length << "\n";
    }
    if (wants("trajectories")) {
        RngStream rng(spec.master_seed);
        const int samples = static_cast<int>(cfg.get_u64("samples", 1));
        const auto iters = pivot_trajectory_stats(*f, spec.ma.pivot, rng, samples, limit);
        auto os = open_out(spec, "trajectories.csv");
        write_header_block(os, spec);
        os << "bits,iterations\n";
        StateGraph ref = needs_graph ? std::move(g) : build_state_graph(*f, limit);
        for (std::uint64_t v = 0; v < ref.vertex_count(); ++v)
            os << ref.vertex_bits(v).str() << ',' << format_double(iters[v]) << "\n";
        g = std::move(ref);
    }
    if (wants("autocorrelation")) {
        RngStream rng(spec.master_seed);
        const std::uint64_t walk = cfg.get_u64("walk_length", 1000000);
        const std::size_t max_lag = cfg.get_u64("max_lag", 10);
        const std::uint64_t burn_in = cfg.get_u64("burn_in", 1000);
        const AutocorrResult ac = random_walk_autocorrelation(*f, walk, max_lag, rng, burn_in);
        auto os = open_out(spec, "autocorr.csv");
        write_header_block(
            os, spec,
            {{"correlation_length",
              ac.correlation_length ? format_double(*ac.correlation_length) : "undefined"}});
        os << "lag,r\n";
        for (std::size_t s = 0; s < ac.r.size(); ++s)
            os << s << ',' << format_double(ac.r[s]) << "\n";
    }
    if (wants("dot")) {
        auto os = open_out(spec, "graph.dot");
        write_dot(g, os);
    }
    return 0;
}

int cmd_verify_paths(const CommandOptions& opts) {
    KeyValueConfig cfg = load_config(opts);
    cfg.require_known({"ks", "max_dim"});
    std::vector<std::uint64_t> ks = cfg.get_u64_list("ks");
    if (ks.empty())
        ks = {2, 3};
    const std::uint64_t max_dim = cfg.get_u64("max_dim", 13);

    bool all_ok = true;
    for (std::uint64_t k : ks) {
        for (std::uint64_t dim = 1; dim <= max_dim; dim += k) {
            auto path = LongKPath::build(dim, static_cast<unsigned>(k));
            std::string fail;
            const std::uint64_t expect = LongKPath::recurrence_length(dim, static_cast<unsigned>(k));
            if (path->length() != expect)
                fail = "length != recurrence";
            std::unordered_map<BitString, std::size_t> seen;
            for (std::size_t i = 0; i < path->length() && fail.empty(); ++i) {
                if (!seen.emplace(path->point(i), i).second)
                    fail = "duplicate point";
                if (i > 0 && hamming(path->point(i - 1), path->point(i)) != 1)
                    fail = "consecutive points not adjacent";
            }
            for (std::size_t i = 0; i < path->length() && fail.empty(); ++i)
                for (std::size_t d = 1; d < k && i + d < path->length() && fail.empty(); ++d)
                    if (hamming(path->point(i), path->point(i + d)) != d)
                        fail = "shortcut below k";
            std::cout << "dim=" << dim << " k=" << k << " length=" << path->length() << " "
                      << (fail.empty() ? "OK" : ("FAIL: " + fail)) << "\n";
            if (!fail.empty())
                all_ok = false;
        }
    }
    return all_ok ? 0 : 3;
}

int run_command(const std::string& name, const CommandOptions& opts) {
    try {
        if (name == "run")
            return cmd_run(opts);
        if (name == "sweep-delta")
            return cmd_sweep_delta(opts);
        if (name == "sweep-tau")
            return cmd_sweep_tau(opts);
        if (name == "race-calibrate")
            return cmd_race_calibrate(opts);
        if (name == "stategraph")
            return cmd_stategraph(opts);
        if (name == "verify-paths")
            return cmd_verify_paths(opts);
        std::cerr << "unknown command: " << name << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace malab
