// omtest — experiment runner and verification harness for the omt library.
//
// Exit codes: 0 success / verification PASS, 1 verification FAIL,
// 2 bad flags or config errors, 3 invariant violation while running.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omt/closure/brute_force.hpp"
#include "omt/closure/checkers.hpp"
#include "omt/closure/shortcut.hpp"
#include "omt/experiment/csv.hpp"
#include "omt/experiment/runner.hpp"
#include "omt/procedures/addis.hpp"
#include "omt/procedures/alpha_spending.hpp"
#include "omt/procedures/engine.hpp"
#include "omt/procedures/online_graph.hpp"
#include "omt/sim/simulate.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct VerifyOptions {
    std::string family = "alpha-spending";
    std::size_t n = 10;
    std::size_t vectors = 200;
    std::uint64_t seed = 1;
    double alpha = 0.2;
    std::string gamma = "inv-square";
    double tau = 0.8;
    double lambda = 0.3;
    std::size_t batch = 1;
    std::size_t streams = 1000;
    double pi_alt = 0.3;
    double mu_alt = 3.0;
    double mu_null = 0.0;
    double rho = 0.8;
};

void add_common_flags(CLI::App& cmd, VerifyOptions& opt) {
    cmd.add_option("--family", opt.family, "family under test");
    cmd.add_option("--n", opt.n, "stream length");
    cmd.add_option("--seed", opt.seed, "rng seed");
    cmd.add_option("--alpha", opt.alpha, "overall level");
    cmd.add_option("--gamma", opt.gamma, "gamma sequence: inv-square or list:w1,w2,...");
    cmd.add_option("--tau", opt.tau, "addis discarding threshold");
    cmd.add_option("--lambda", opt.lambda, "addis candidacy threshold");
    cmd.add_option("--batch", opt.batch, "batch size for the lag structure");
}

std::unique_ptr<omt::IntersectionTestFamily> build_family(const VerifyOptions& opt) {
    omt::GammaSequence gamma = omt::experiment::parse_gamma_spec(opt.gamma);
    if (opt.family == "alpha-spending") {
        return std::make_unique<omt::AlphaSpendingFamily>(opt.alpha, std::move(gamma));
    }
    if (opt.family == "addis") {
        return std::make_unique<omt::AddisFamily>(
            opt.alpha, std::move(gamma), omt::LagStructure::batched(opt.batch),
            omt::AddisParams::constants(opt.tau, opt.lambda));
    }
    if (opt.family == "equal-split") {
        return std::make_unique<omt::EqualSplitFamily>(opt.alpha);
    }
    if (opt.family == "backward-graph") {
        return std::make_unique<omt::BackwardGraphFamily>(
            opt.alpha, std::move(gamma), static_cast<omt::Index>(opt.n));
    }
    throw CLI::ValidationError{
        "--family", "unknown family '" + opt.family +
                        "' (alpha-spending, addis, equal-split, backward-graph)"};
}

omt::PGrid build_grid(const omt::IntersectionTestFamily& family, const VerifyOptions& opt) {
    return omt::boundary_adversarial_grid(
        family.critical_levels(static_cast<omt::Index>(opt.n)), opt.n, opt.vectors,
        opt.seed);
}

int run_shortcut_oracle(const VerifyOptions& opt) {
    if (opt.n > omt::kBruteForceMaxN) {
        std::cerr << "shortcut-oracle: --n capped at " << omt::kBruteForceMaxN << "\n";
        return kExitUsage;
    }
    const auto family = build_family(opt);
    if (!family->has_levels()) {
        std::cerr << "family '" << opt.family << "' has no per-index levels\n";
        return kExitUsage;
    }
    const omt::PGrid grid = build_grid(*family, opt);
    std::size_t mismatches = 0;
    for (const std::vector<double>& p : grid) {
        const omt::ClosureDecisions brute = omt::brute_force_closed(*family, p);
        const omt::ClosureDecisions quick = omt::shortcut_run(*family, p);
        if (brute.rejected != quick.rejected) ++mismatches;
    }
    std::printf("shortcut-oracle: family=%s n=%zu vectors=%zu mismatches=%zu\n",
                std::string(family->name()).c_str(), opt.n, grid.size(), mismatches);
    std::puts(mismatches == 0 ? "PASS" : "FAIL");
    return mismatches == 0 ? kExitPass : kExitFail;
}

int run_structure_check(const VerifyOptions& opt, bool predictability) {
    const char* what = predictability ? "predictability" : "consonance";
    if (opt.n > omt::kCheckerMaxN) {
        std::cerr << what << ": --n capped at " << omt::kCheckerMaxN << "\n";
        return kExitUsage;
    }
    const auto family = build_family(opt);
    const omt::PGrid grid = build_grid(*family, opt);
    const omt::ViolationReport report =
        predictability
            ? omt::check_predictability(*family, static_cast<omt::Index>(opt.n), grid)
            : omt::check_consonance(*family, static_cast<omt::Index>(opt.n), grid);
    std::printf("%s: family=%s n=%zu vectors=%zu violations=%zu\n", what,
                std::string(family->name()).c_str(), opt.n, grid.size(),
                report.total_found);
    for (std::size_t k = 0; k < report.violations.size() && k < 3; ++k) {
        const omt::FamilyViolation& v = report.violations[k];
        std::printf("  violation: |I|=%zu |superset|=%zu grid-vector=%zu\n",
                    v.set.size(), v.superset.size(), v.grid_index);
    }
    std::puts(report.ok() ? "PASS" : "FAIL");
    return report.ok() ? kExitPass : kExitFail;
}

int run_improvement(const VerifyOptions& opt) {
    omt::ProcedureId plain, closed;
    if (opt.family == "alpha-spending") {
        plain = omt::ProcedureId::alpha_spending;
        closed = omt::ProcedureId::closed_alpha_spending;
    } else if (opt.family == "addis") {
        plain = omt::ProcedureId::addis_spending;
        closed = omt::ProcedureId::closed_addis_spending;
    } else {
        std::cerr << "improvement: --family must be alpha-spending or addis\n";
        return kExitUsage;
    }

    omt::sim::SimConfig sim;
    sim.n = opt.n;
    sim.batch = opt.batch;
    sim.rho = opt.rho;
    sim.pi_alt = opt.pi_alt;
    sim.mu_alt = opt.mu_alt;
    sim.mu_null = opt.mu_null;
    sim.alpha = opt.alpha;
    sim.trials = opt.streams;
    sim.base_seed = opt.seed;
    sim.gamma = omt::experiment::parse_gamma_spec(opt.gamma);
    sim.tau = opt.tau;
    sim.lambda = opt.lambda;
    sim.validate();

    std::size_t broken_streams = 0;
    std::size_t extra = 0, base = 0;
    for (std::size_t t = 0; t < opt.streams; ++t) {
        const omt::sim::TrialData trial = omt::sim::generate_trial(sim, t);
        const std::vector<bool> d_plain =
            omt::sim::run_procedure_on_trial(plain, sim, trial.pvalues);
        const std::vector<bool> d_closed =
            omt::sim::run_procedure_on_trial(closed, sim, trial.pvalues);
        bool contained = true;
        for (std::size_t i = 0; i < d_plain.size(); ++i) {
            base += d_plain[i];
            extra += d_closed[i] && !d_plain[i];
            if (d_plain[i] && !d_closed[i]) contained = false;
        }
        if (!contained) ++broken_streams;
    }
    std::printf("improvement: %s vs closed, streams=%zu n=%zu batch=%zu\n",
                opt.family.c_str(), opt.streams, opt.n, opt.batch);
    std::printf("  plain rejections=%zu extra closed rejections=%zu "
                "containment breaches=%zu\n",
                base, extra, broken_streams);
    std::puts(broken_streams == 0 ? "PASS" : "FAIL");
    return broken_streams == 0 ? kExitPass : kExitFail;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_override,
                       unsigned threads) {
    omt::experiment::ExperimentConfig cfg;
    try {
        cfg = omt::experiment::parse_config_file(config_path);
    } catch (const omt::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!out_override.empty()) cfg.out_path = out_override;
    try {
        const omt::experiment::ExperimentResult result =
            omt::experiment::run_experiment(cfg, threads);
        omt::experiment::write_text_file(cfg.out_path, result.csv);
        std::printf("wrote %s (%zu rows)\n", cfg.out_path.c_str(),
                    result.table.rows.size());
        return kExitPass;
    } catch (const omt::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"online multiple testing experiments and verification"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    unsigned threads = 0;
    CLI::App* run = app.add_subcommand("run", "run an experiment config to CSV");
    run->add_option("--config", config_path, "experiment config file")->required();
    run->add_option("--out", out_override, "override the config's output path");
    run->add_option("--threads", threads, "worker threads (0 = hardware)");

    CLI::App* verify = app.add_subcommand("verify", "self-checks and oracles");
    verify->require_subcommand(1);
    VerifyOptions opt;

    CLI::App* oracle =
        verify->add_subcommand("shortcut-oracle", "shortcut vs brute-force closure");
    add_common_flags(*oracle, opt);
    oracle->add_option("--vectors", opt.vectors, "boundary grid size");

    CLI::App* pred = verify->add_subcommand("predictability", "predictability check");
    add_common_flags(*pred, opt);
    pred->add_option("--vectors", opt.vectors, "boundary grid size");

    CLI::App* cons = verify->add_subcommand("consonance", "consonance check");
    add_common_flags(*cons, opt);
    cons->add_option("--vectors", opt.vectors, "boundary grid size");

    CLI::App* improve =
        verify->add_subcommand("improvement", "closed vs plain procedure containment");
    add_common_flags(*improve, opt);
    improve->add_option("--streams", opt.streams, "simulated streams");
    improve->add_option("--pi-alt", opt.pi_alt, "non-null probability");
    improve->add_option("--mu-alt", opt.mu_alt, "non-null mean shift");
    improve->add_option("--mu-null", opt.mu_null, "null mean shift (<= 0)");
    improve->add_option("--rho", opt.rho, "within-batch correlation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) return run_experiment_cmd(config_path, out_override, threads);
        if (oracle->parsed()) return run_shortcut_oracle(opt);
        if (pred->parsed()) return run_structure_check(opt, true);
        if (cons->parsed()) return run_structure_check(opt, false);
        if (improve->parsed()) return run_improvement(opt);
    } catch (const omt::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
