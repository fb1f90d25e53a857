#include "malab/experiment/commands.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"malab - memetic algorithm laboratory"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* desc;
    };
    const Sub subs[] = {
        {"run", "execute one configuration times R replicates"},
        {"sweep-delta", "success-rate curve over the local search depth (f_d)"},
        {"sweep-tau", "outcome rates over the local search period (race functions)"},
        {"race-calibrate", "search race path lengths for a frequency phase flip"},
        {"stategraph", "exhaustive landscape analyses at small dimensions"},
        {"verify-paths", "check long k-path invariants per (dim, k)"},
    };

    malab::CommandOptions opts;
    std::string chosen;
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.desc);
        cmd->add_option("--config", opts.config_path, "key=value configuration file");
        cmd->add_option("--set", opts.sets, "override KEY=VALUE (repeatable)");
        cmd->add_option("--out", opts.out_dir, "output directory (default .)");
        cmd->add_option("--format", opts.format, "csv | jsonl | both (default csv)");
        cmd->add_option("--replicates", opts.replicates, "replicates R");
        cmd->add_option("--master-seed", opts.master_seed, "master seed");
        cmd->add_option("--workers", opts.workers, "worker threads (0 = auto)");
        cmd->callback([&chosen, name = std::string(s.name)] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    return malab::run_command(chosen, opts);
}
