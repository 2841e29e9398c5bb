// Command-line front end: parse a quiver, list its indecomposables, build the
// AR quiver, compute minimal right determiners, or run the verification and
// sweep harnesses. Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ardet/checks.hpp"
#include "ardet/report.hpp"
#include "ardet/sweep.hpp"

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// A path to a readable file, "-" for stdin, or the spec text itself.
ardet::Quiver load_quiver(const std::string& input) {
    if (input == "-") return ardet::parse_quiver(slurp(std::cin));
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream file(input);
        if (!file) throw ardet::ParseError(0, "cannot open " + input);
        return ardet::parse_quiver(slurp(file));
    }
    return ardet::parse_quiver(input);
}

int run_verify(const ardet::Quiver& q, bool force_oracle) {
    ardet::checks::Options opts;
    opts.with_oracle = force_oracle || q.n() <= 6;
    const auto failures = ardet::checks::run_invariant_suite(q, opts);
    if (failures.empty()) {
        std::cout << "verify: OK (n=" << q.n() << ", " << q.relations().size()
                  << " relations" << (opts.with_oracle ? ", with determinedness oracle" : "")
                  << ")\n";
        return 0;
    }
    std::cout << "verify: FAILED " << failures.size() << " check(s); first: "
              << failures.front().name << ": " << failures.front().detail << '\n';
    return 1;
}

int run_sweep_cmd(const ardet::SweepOptions& opts) {
    const ardet::SweepSummary summary = ardet::run_sweep(opts);
    std::cout << "sweep: checked " << summary.cases << " quivers (" << summary.bound_cases
              << " with relations)";
    if (summary.ok()) {
        std::cout << ", all OK\n";
        return 0;
    }
    std::cout << ", " << summary.failures.size() << " failure(s)\n";
    const ardet::SweepFailure& f = summary.failures.front();
    std::cout << "first failure: " << f.check << ": " << f.detail << "\non quiver:\n"
              << f.quiver;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"indecomposables, almost split sequences and minimal right determiners "
                 "for bound quiver algebras on the A_n line"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string out_path;
    bool force_oracle = false;

    auto add_input = [&input](CLI::App* cmd) {
        cmd->add_option("input", input, "quiver file, '-' for stdin, or inline quiver text")
            ->required();
    };

    CLI::App* indec = app.add_subcommand("indec", "list all indecomposable modules");
    add_input(indec);
    indec->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* ar = app.add_subcommand("ar", "almost split sequences and the AR quiver");
    add_input(ar);
    ar->add_option("--format", format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    ar->add_option("--out", out_path, "write DOT output to this path instead of stdout");

    CLI::App* det = app.add_subcommand("det", "minimal right determiners and Det counts");
    add_input(det);
    det->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    add_input(verify);
    verify->add_flag("--oracle", force_oracle,
                     "force the determinedness oracle even for large n (default: n <= 6)");

    ardet::SweepOptions sweep_opts;
    int cap = 12;
    std::string relations_mode = "none";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "check the counting formula over all orientations up to --n-max");
    sweep->add_option("--n-max", sweep_opts.n_max, "largest n to sweep (default 8)");
    sweep->add_option("--n-min", sweep_opts.n_min, "smallest n to sweep (default 2)");
    sweep->add_option("--cap", cap, "safety cap on --n-max (default 12)");
    sweep->add_option("--relations", relations_mode, "'random' adds seeded bound cases")
        ->check(CLI::IsMember({"none", "random"}));
    sweep->add_option("--seed", sweep_opts.seed, "seed for random relation sets");
    sweep->add_option("--trials", sweep_opts.trials, "relation sets per orientation");
    sweep->add_flag("--mod-reflection", sweep_opts.mod_reflection,
                    "skip mirror-image orientations");
    sweep->add_flag("--full", sweep_opts.full, "run the whole invariant suite per case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (indec->parsed()) {
            const ardet::Quiver q = load_quiver(input);
            if (format == "json")
                std::cout << ardet::indecomposables_to_json(q).dump(2) << '\n';
            else
                std::cout << ardet::indecomposables_text(q);
            return 0;
        }
        if (ar->parsed()) {
            const ardet::Quiver q = load_quiver(input);
            const ardet::ARQuiver arq = ardet::build_ar_quiver(q);
            if (format == "dot") {
                const std::string dot = ardet::export_dot(q, arq);
                if (out_path.empty()) {
                    std::cout << dot;
                } else {
                    std::ofstream file(out_path);
                    if (!file) throw ardet::ParseError(0, "cannot write " + out_path);
                    file << dot;
                }
            } else if (format == "json") {
                std::cout << ardet::sequences_to_json(arq).dump(2) << '\n';
            } else {
                std::cout << ardet::sequences_text(q, arq);
            }
            return 0;
        }
        if (det->parsed()) {
            const ardet::Quiver q = load_quiver(input);
            const ardet::DetReport report = ardet::det_set(q);
            if (format == "json")
                std::cout << ardet::det_report_to_json(q, report).dump(2) << '\n';
            else
                std::cout << ardet::det_report_text(q, report);
            return 0;
        }
        if (verify->parsed()) return run_verify(load_quiver(input), force_oracle);
        if (sweep->parsed()) {
            if (sweep_opts.n_max > cap) {
                std::cerr << "error: --n-max " << sweep_opts.n_max << " exceeds the cap of "
                          << cap << " (override with --cap)\n";
                return 2;
            }
            if (sweep_opts.n_min < 2 || sweep_opts.n_min > sweep_opts.n_max) {
                std::cerr << "error: need 2 <= --n-min <= --n-max\n";
                return 2;
            }
            sweep_opts.random_relations = relations_mode == "random";
            return run_sweep_cmd(sweep_opts);
        }
    } catch (const ardet::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ardet::ValidationError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ardet::InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
