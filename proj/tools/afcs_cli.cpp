#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afcs/commands.hpp"
#include "afcs/config_io.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_path;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value lines)");
    cmd->add_option("--set", opts.overrides,
                    "Override a config key, e.g. --set mu=0.01 (repeatable)");
    cmd->add_option("-o,--output", opts.output_path, "Output file (default stdout)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

afcs::SystemConfig build_config(const CommonOpts& opts) {
    std::map<std::string, std::string> overrides;
    for (const auto& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw afcs::ValidationError("--set expects key=value, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (!opts.config_path.empty())
        return afcs::load_config(opts.config_path, overrides);
    return afcs::config_from_pairs(overrides);
}

int write_table(const afcs::OutputTable& table, const CommonOpts& opts) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.output_path.empty()) {
        file.open(opts.output_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file '" << opts.output_path
                      << "'\n";
            return 2;
        }
        out = &file;
    }
    if (opts.format == "json")
        afcs::write_json(table, *out);
    else
        afcs::write_csv(table, *out);
    return 0;
}

std::pair<int, int> parse_n_range(const std::string& spec) {
    const auto colon = spec.find(':');
    try {
        if (colon == std::string::npos) {
            const int n = std::stoi(spec);
            return {1, n};
        }
        return {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
    } catch (const std::exception&) {
        throw afcs::ValidationError("n_range: cannot parse '" + spec +
                                    "' (expected LO:HI or HI)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal adaptive-feedback link: theory, simulation and "
                 "efficiency tables"};
    app.require_subcommand(1);

    CommonOpts theory_opts, sim_opts, sweep_opts, eff_opts;

    auto* theory = app.add_subcommand(
        "theory", "Exact and closed-form MMSE trajectory per cycle");
    add_common(theory, theory_opts);

    auto* simulate = app.add_subcommand(
        "simulate", "Monte Carlo ensemble vs. theoretical MMSE");
    add_common(simulate, sim_opts);
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    bool check = false;
    simulate->add_option("--trials", trials, "Number of independent trials");
    simulate->add_option("--seed", seed, "64-bit master seed");
    simulate->add_option("--threads", threads,
                         "Worker threads (0 = hardware concurrency)");
    simulate->add_flag("--check", check,
                       "Exit 1 when the theory comparison fails");

    auto* sweep = app.add_subcommand(
        "sweep", "Output bit-rate as a function of cycle count");
    add_common(sweep, sweep_opts);
    std::string sweep_range = "1:50";
    sweep->add_option("--n-range", sweep_range, "Cycle range LO:HI");

    auto* efficiency = app.add_subcommand(
        "efficiency", "Power-bandwidth efficiency points and Shannon boundary");
    add_common(efficiency, eff_opts);
    std::string eff_range = "1:50";
    efficiency->add_option("--n-range", eff_range, "Cycle range LO:HI");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theory->parsed())
            return write_table(afcs::cmd_theory(build_config(theory_opts)),
                               theory_opts);
        if (simulate->parsed()) {
            if (trials == 0) {
                std::cerr << "error: trials must be >= 1\n";
                return 2;
            }
            afcs::ComparisonReport report;
            const auto table = afcs::cmd_simulate(build_config(sim_opts), trials,
                                                  seed, threads, report);
            const int rc = write_table(table, sim_opts);
            if (rc != 0) return rc;
            return (check && !report.pass) ? 1 : 0;
        }
        if (sweep->parsed()) {
            const auto [lo, hi] = parse_n_range(sweep_range);
            return write_table(afcs::cmd_sweep(build_config(sweep_opts), lo, hi),
                               sweep_opts);
        }
        const auto [lo, hi] = parse_n_range(eff_range);
        return write_table(afcs::cmd_efficiency(build_config(eff_opts), lo, hi),
                           eff_opts);
    } catch (const afcs::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
