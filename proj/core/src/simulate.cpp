#include "omt/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "omt/sim/normal.hpp"

namespace omt::sim {

void SimConfig::validate() const {
    if (n == 0) throw invariant_error{"n must be positive"};
    if (batch == 0) throw invariant_error{"batch size must be positive"};
    if (n % batch != 0) throw invariant_error{"n must be a multiple of the batch size"};
    if (!(rho >= 0.0) || !(rho < 1.0)) throw invariant_error{"rho must lie in [0, 1)"};
    if (!(pi_alt > 0.0) || !(pi_alt < 1.0)) {
        throw invariant_error{"pi_A must lie in (0, 1)"};
    }
    if (!(mu_alt > 0.0)) throw invariant_error{"mu_A must be positive"};
    if (!(mu_null <= 0.0)) throw invariant_error{"mu_N must be non-positive"};
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw invariant_error{"alpha must lie in (0, 1)"};
    if (trials == 0) throw invariant_error{"trials must be positive"};
    if (!(tau > 0.0) || !(tau <= 1.0)) throw invariant_error{"tau must lie in (0, 1]"};
    if (!(lambda >= alpha * tau) || !(lambda < tau)) {
        throw invariant_error{"lambda must lie in [alpha*tau, tau)"};
    }
}

std::vector<double> draw_equicorrelated(CounterRng& rng, std::size_t b, double rho) {
    if (b == 0) throw std::invalid_argument{"batch size must be positive"};
    if (!(rho >= 0.0) || !(rho < 1.0)) throw std::invalid_argument{"rho must lie in [0, 1)"};
    const double w = normal_quantile(rng.uniform01());
    const double load = std::sqrt(rho);
    const double resid = std::sqrt(1.0 - rho);
    std::vector<double> x(b);
    for (std::size_t k = 0; k < b; ++k) {
        x[k] = load * w + resid * normal_quantile(rng.uniform01());
    }
    return x;
}

TrialData generate_trial(const SimConfig& config, std::uint64_t trial_index) {
    config.validate();
    TrialData out;
    out.pvalues.resize(config.n);
    out.is_null.resize(config.n);

    CounterRng assign{config.base_seed, trial_index, CounterRng::Role::assignment};
    for (std::size_t i = 0; i < config.n; ++i) {
        out.is_null[i] = !assign.bernoulli(config.pi_alt);
    }

    CounterRng noise{config.base_seed, trial_index, CounterRng::Role::noise};
    for (std::size_t start = 0; start < config.n; start += config.batch) {
        const std::vector<double> x = draw_equicorrelated(noise, config.batch, config.rho);
        for (std::size_t k = 0; k < config.batch; ++k) {
            const std::size_t i = start + k;
            const double z = x[k] + (out.is_null[i] ? config.mu_null : config.mu_alt);
            out.pvalues[i] = normal_cdf(-z);
        }
    }
    return out;
}

std::vector<bool> run_procedure_on_trial(ProcedureId id, const SimConfig& config,
                                         std::span<const double> pvalues) {
    auto engine = make_engine(id, config.alpha, config.gamma,
                              LagStructure::batched(config.batch),
                              AddisParams::constants(config.tau, config.lambda),
                              config.weights, config.graph_variant);
    std::vector<bool> decisions;
    decisions.reserve(pvalues.size());
    for (double p : pvalues) {
        decisions.push_back(engine->step(p).rejected);
    }
    return decisions;
}

TrialResult score_trial(const std::vector<bool>& decisions,
                        const std::vector<bool>& is_null) {
    if (decisions.size() != is_null.size()) {
        throw std::invalid_argument{"decision and truth vectors differ in length"};
    }
    TrialResult r;
    for (std::size_t i = 0; i < decisions.size(); ++i) {
        if (!is_null[i]) ++r.false_nulls;
        if (!decisions[i]) continue;
        ++r.rejections;
        if (is_null[i]) {
            r.any_false_rejection = true;
        } else {
            ++r.true_positives;
        }
    }
    return r;
}

MetricsTable estimate_power_fwer(const SimConfig& config,
                                 const std::vector<ProcedureId>& procedures,
                                 unsigned threads) {
    config.validate();
    if (procedures.empty()) throw std::invalid_argument{"no procedures requested"};

    const std::size_t nproc = procedures.size();
    // results[trial * nproc + proc], filled by whichever thread owns the
    // trial, reduced sequentially afterwards.
    std::vector<TrialResult> results(config.trials * nproc);

    unsigned nthreads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = static_cast<unsigned>(
        std::min<std::size_t>(nthreads, config.trials));

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = lo; t < hi; ++t) {
            const TrialData trial = generate_trial(config, t);
            for (std::size_t pi = 0; pi < nproc; ++pi) {
                const std::vector<bool> decisions =
                    run_procedure_on_trial(procedures[pi], config, trial.pvalues);
                results[t * nproc + pi] = score_trial(decisions, trial.is_null);
            }
        }
    };

    if (nthreads == 1) {
        worker(0, config.trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        const std::size_t chunk = (config.trials + nthreads - 1) / nthreads;
        for (unsigned w = 0; w < nthreads; ++w) {
            const std::size_t lo = std::min<std::size_t>(w * chunk, config.trials);
            const std::size_t hi = std::min<std::size_t>(lo + chunk, config.trials);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    worker(lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    MetricsTable table;
    for (std::size_t pi = 0; pi < nproc; ++pi) {
        std::size_t fwer_count = 0;
        std::vector<double> ratios; // per-trial true-positive proportions
        ratios.reserve(config.trials);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const TrialResult& r = results[t * nproc + pi];
            if (r.any_false_rejection) ++fwer_count;
            if (r.false_nulls > 0) {
                ratios.push_back(static_cast<double>(r.true_positives) /
                                 static_cast<double>(r.false_nulls));
            }
        }
        const auto trials_d = static_cast<double>(config.trials);
        const double fwer = static_cast<double>(fwer_count) / trials_d;

        double power = 0.0;
        double power_se = 0.0;
        if (!ratios.empty()) {
            for (double v : ratios) power += v;
            power /= static_cast<double>(ratios.size());
            if (ratios.size() > 1) {
                double ss = 0.0;
                for (double v : ratios) ss += (v - power) * (v - power);
                const double var = ss / static_cast<double>(ratios.size() - 1);
                power_se = std::sqrt(var / static_cast<double>(ratios.size()));
            }
        }

        MetricsRow row;
        row.procedure = std::string(to_string(procedures[pi]));
        row.batch_size = config.batch;
        row.pi_alt = config.pi_alt;
        row.mu_alt = config.mu_alt;
        row.mu_null = config.mu_null;
        row.rho = config.rho;
        row.n = config.n;
        row.trials = config.trials;
        row.seed = config.base_seed;
        row.power = power;
        row.power_se = power_se;
        row.fwer = fwer;
        row.fwer_se = std::sqrt(fwer * (1.0 - fwer) / trials_d);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace omt::sim
