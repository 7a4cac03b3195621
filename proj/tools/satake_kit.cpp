// Command-line front end: exact tables and verification suites for
// Kostka-Foulkes polynomials, Brylinski-Kostant filtrations, IC-stalk
// Poincare polynomials, equivariant twistor computations, Kostant
// sections/centralizers, and the graded branching functor.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "satake/cli_core.hpp"

namespace {

void add_common(CLI::App* cmd, satake::RunConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "seed for deterministic sampling");
    cmd->add_option("--cache-dir", cfg.cache_dir, "cache directory (or SATAKE_KIT_CACHE_DIR)");
    cmd->add_flag("--no-cache", cfg.no_cache, "disable the result cache");
    cmd->add_flag("--timing", cfg.timing, "include wall-clock timing in the envelope");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around the quaternionic Satake correspondence"};
    app.require_subcommand(1);

    satake::RunConfig cfg;

    auto* kostka = app.add_subcommand("kostka", "one Kostka-Foulkes polynomial");
    kostka->add_option("--n", cfg.n, "rank")->required();
    kostka->add_option("--lam", cfg.lam, "dominant coweight (n integers)")->required()->expected(-1);
    kostka->add_option("--mu", cfg.mu, "dominant coweight (n integers)")->required()->expected(-1);
    add_common(kostka, cfg);

    auto* ktable = app.add_subcommand("kostka-table", "table over dominant pairs");
    ktable->add_option("--n", cfg.n, "rank")->required();
    ktable->add_option("--size", cfg.size, "bound on |lam|")->required();
    ktable->add_option("--format", cfg.format, "json|csv");
    add_common(ktable, cfg);

    auto* bk = app.add_subcommand("bk", "Brylinski-Kostant filtration polynomials");
    bk->add_option("--n", cfg.n, "rank")->required();
    bk->add_option("--lam", cfg.lam, "dominant coweight")->required()->expected(-1);
    bk->add_option("--mu", cfg.mu, "optional weight; omit for the full table")->expected(-1);
    add_common(bk, cfg);

    auto* stalks = app.add_subcommand("stalks", "IC-stalk Poincare polynomial tables");
    stalks->add_option("--flavor", cfg.flavor, "complex|quaternionic|symmetric");
    stalks->add_option("--n", cfg.n, "rank")->required();
    stalks->add_option("--size", cfg.size, "bound on |lam|")->required();
    stalks->add_option("--format", cfg.format, "json|csv|latex");
    add_common(stalks, cfg);

    auto* twistor = app.add_subcommand("twistor", "equivariant rings, bases, cup matrices, Phi");
    twistor->add_option("--n", cfg.n, "rank")->required();
    add_common(twistor, cfg);

    auto* cent = app.add_subcommand("centralizers", "Kostant section and centralizer checks");
    cent->add_option("--check", cfg.check, "companion|tau|shalika|embedding (default: all)");
    cent->add_option("--n", cfg.n, "rank bound");
    add_common(cent, cfg);

    auto* branch = app.add_subcommand("branch", "branching along psi_X");
    branch->add_option("--n", cfg.n, "rank of the small group")->required();
    branch->add_option("--Lam", cfg.Lam, "dominant GL_2n coweight (2n integers)")->required()->expected(-1);
    add_common(branch, cfg);

    auto* shearcmd = app.add_subcommand("shear", "regrade a bigraded series");
    shearcmd->add_option("--input", cfg.input_path, "JSON file: list of [i, j, dim] triples")->required();
    add_common(shearcmd, cfg);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite,
                       "all|kostka|bk|stalks|twistor|phi|kostant|centralizers|shalika|spectral");
    verify->add_option("--n", cfg.n, "rank (echoed into the config)");
    add_common(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    try {
        satake::ResultEnvelope env = satake::run_command(cfg);
        if (!env.text_payload.empty()) {
            std::cout << env.text_payload;
        } else {
            std::cout << env.body.dump(2) << "\n";
        }
        return env.exit_code;
    } catch (const satake::structural_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const satake::precondition_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
