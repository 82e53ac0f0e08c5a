#ifndef OMT_SIM_SIMULATE_HPP
#define OMT_SIM_SIMULATE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omt/gamma.hpp"
#include "omt/procedures/engine.hpp"
#include "omt/rng.hpp"

namespace omt::sim {

// One simulated scenario: n hypotheses arriving in batches of size `batch`,
// test statistics equicorrelated within a batch (correlation rho, independent
// across batches), each hypothesis non-null with probability pi_alt. Non-null
// statistics are shifted by mu_alt > 0, null ones by mu_null <= 0; one-sided
// p-values P_i = Phi(-Z_i). mu_null < 0 makes the nulls conservative.
struct SimConfig {
    std::size_t n = 1000;
    std::size_t batch = 1;
    double rho = 0.8;
    double pi_alt = 0.5;
    double mu_alt = 4.0;
    double mu_null = 0.0;
    double alpha = 0.2;
    std::size_t trials = 2000;
    std::uint64_t base_seed = 1;
    GammaSequence gamma = GammaSequence::inverse_square();
    double tau = 0.8;
    double lambda = 0.3;
    GraphWeights weights = GraphWeights::zero();
    GraphVariant graph_variant = GraphVariant::scaled;

    void validate() const; // throws invariant_error on a bad field
};

struct TrialData {
    std::vector<double> pvalues;
    std::vector<bool> is_null; // is_null[i-1] for hypothesis i
};

// Draws a batch of b standard normals with pairwise correlation rho via the
// one-factor construction X_i = sqrt(rho) W + sqrt(1-rho) xi_i.
std::vector<double> draw_equicorrelated(CounterRng& rng, std::size_t b, double rho);

// Deterministic function of (config.base_seed, trial_index): the null/alt
// assignment comes from one RNG stream, the noise from another, so the same
// trial is bit-identical no matter how trials are scheduled across threads.
TrialData generate_trial(const SimConfig& config, std::uint64_t trial_index);

// Feeds one trial's p-values through a fresh engine; lags are batched(batch)
// except under plain alpha-spending / online-graph, which ignore lags anyway.
std::vector<bool> run_procedure_on_trial(ProcedureId id, const SimConfig& config,
                                         std::span<const double> pvalues);

struct TrialResult {
    std::size_t rejections = 0;
    std::size_t true_positives = 0;  // rejected non-nulls
    std::size_t false_nulls = 0;     // non-null hypotheses in the trial
    bool any_false_rejection = false;
};

TrialResult score_trial(const std::vector<bool>& decisions,
                        const std::vector<bool>& is_null);

struct MetricsRow {
    std::string procedure;
    std::size_t batch_size = 1;
    double pi_alt = 0.0;
    double mu_alt = 0.0;
    double mu_null = 0.0;
    double rho = 0.0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double power = 0.0;
    double power_se = 0.0;
    double fwer = 0.0;
    double fwer_se = 0.0;
};

struct MetricsTable {
    std::vector<MetricsRow> rows;
};

// Monte Carlo estimate of power and FWER for each procedure on the given
// scenario. Power is the expected fraction of non-nulls rejected, averaged
// over trials that contain at least one non-null; FWER is the fraction of
// trials with a false rejection. Standard errors: sample SE for power,
// binomial SE for FWER.
//
// threads = 0 picks the hardware count. Results are bit-identical for every
// thread count: trials are assigned deterministically and reduced in trial
// order.
MetricsTable estimate_power_fwer(const SimConfig& config,
                                 const std::vector<ProcedureId>& procedures,
                                 unsigned threads = 1);

} // namespace omt::sim

#endif // OMT_SIM_SIMULATE_HPP
