// Command-line front end: closed-form bound reports, inversion-cell
// sweeps, single simulations and the brute-force verification suite.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ilifc/bounds.hpp"
#include "ilifc/serialize.hpp"
#include "ilifc/sim.hpp"
#include "ilifc/verify.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index-less flash rewriting codes with inversion cells"};
    app.require_subcommand(1);

    int n = 0, k = 0, q = 0, r = 0;
    long long epochs = 10000;
    std::uint64_t seed = 0;
    std::string strategy_name = "usual";
    std::string workload_name = "uniform";
    std::string scope_name = "quick";
    std::string out_path;
    bool as_json = false;
    bool audit = false;
    bool no_parallel = false;

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound report for (n, k, q)");
    bounds_cmd->add_option("--n", n, "block length in cells")->required();
    bounds_cmd->add_option("--k", k, "data bits")->required();
    bounds_cmd->add_option("--q", q, "levels per cell")->required();
    bounds_cmd->add_flag("--json", as_json, "emit JSON instead of a table");
    bounds_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* sweep_cmd = app.add_subcommand("sweep", "mean writes per admissible inversion-cell count (CSV)");
    sweep_cmd->add_option("--n", n)->required();
    sweep_cmd->add_option("--k", k)->required();
    sweep_cmd->add_option("--q", q)->required();
    sweep_cmd->add_option("--strategy", strategy_name, "usual|unusual");
    sweep_cmd->add_option("--workload", workload_name, "uniform|alternating|distance:<d>");
    sweep_cmd->add_option("--epochs", epochs, "erasures per sweep point");
    sweep_cmd->add_option("--seed", seed, "base RNG seed")->required();
    sweep_cmd->add_option("--out", out_path);
    sweep_cmd->add_flag("--no-parallel", no_parallel, "run sweep points sequentially");

    auto* sim_cmd = app.add_subcommand("simulate", "epoch statistics for one (n, k, q, r) instance");
    sim_cmd->add_option("--n", n)->required();
    sim_cmd->add_option("--k", k)->required();
    sim_cmd->add_option("--q", q)->required();
    sim_cmd->add_option("--r", r, "inversion cells")->required();
    sim_cmd->add_option("--strategy", strategy_name);
    sim_cmd->add_option("--workload", workload_name);
    sim_cmd->add_option("--epochs", epochs);
    sim_cmd->add_option("--seed", seed)->required();
    sim_cmd->add_flag("--audit", audit, "check used/unused-level bounds at every erasure");
    sim_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle suite");
    verify_cmd->add_option("--scope", scope_name, "quick|full");
    verify_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds_cmd->parsed()) {
            const ilifc::bounds::BoundsReport rep = ilifc::bounds::compute_report(n, k, q);
            emit(as_json ? ilifc::bounds::report_json(rep) + "\n" : ilifc::bounds::report_table(rep),
                 out_path);
            return 0;
        }

        if (sweep_cmd->parsed()) {
            const auto strategy = ilifc::strategy_from_string(strategy_name);
            const auto workload = ilifc::sim::Workload::parse(workload_name);
            const auto results = ilifc::sim::sweep_inversion_counts(n, k, q, strategy, workload,
                                                                    epochs, seed, !no_parallel);
            emit(ilifc::sim::to_csv(results), out_path);
            return 0;
        }

        if (sim_cmd->parsed()) {
            const auto strategy = ilifc::strategy_from_string(strategy_name);
            const auto workload = ilifc::sim::Workload::parse(workload_name);
            if (n - r < k * k) {
                std::cerr << "error: n - r leaves fewer than k slices\n";
                return kExitValidation;
            }
            if ((n - r) % k != 0)
                std::cerr << "warning: n - r is not a multiple of k; " << (n - r) % k
                          << " cells will never be used\n";
            const ilifc::CodeParams params(n, k, q, r);
            const auto result = ilifc::sim::run_average(params, strategy, workload, epochs, seed);
            std::string text = ilifc::sim::to_json(result) + "\n";
            if (audit) {
                const auto audit_res =
                    ilifc::sim::bound_audit(params, strategy, workload, epochs, seed);
                text += std::string("audit: ") + (audit_res.ok() ? "ok" : "VIOLATIONS") + " (" +
                        std::to_string(audit_res.erasures_checked) + " erasures checked, " +
                        std::to_string(audit_res.used_below_bound) + " used-level violations, " +
                        std::to_string(audit_res.unused_above_max) + " unused-level violations)\n";
            }
            emit(text, out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            ilifc::verify::Scope scope;
            if (scope_name == "quick")
                scope = ilifc::verify::Scope::Quick;
            else if (scope_name == "full")
                scope = ilifc::verify::Scope::Full;
            else {
                std::cerr << "error: scope must be quick or full\n";
                return kExitValidation;
            }
            const auto cert = ilifc::verify::run_suite(scope);
            emit(cert.json + "\n", out_path);
            return cert.all_pass ? 0 : kExitVerification;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
