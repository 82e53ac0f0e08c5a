#ifndef OMT_EXPERIMENT_CONFIG_HPP
#define OMT_EXPERIMENT_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "omt/sim/simulate.hpp"

namespace omt::experiment {

// A parsed experiment: the scenario grid is the cross product of batch_sizes
// and pi_alts, run for every listed procedure with shared alpha / gamma /
// tau / lambda. Parsed from a flat key=value file ('#' starts a comment):
//
//   procedure  = addis-spending, closed-addis-spending
//   alpha      = 0.2
//   gamma      = inv-square            # or list:0.5,0.3,0.2
//   tau        = 0.8
//   lambda     = 0.3
//   batch_size = 1, 10
//   pi_A       = 0.2, 0.5
//   mu_A       = 4
//   mu_N       = -2
//   rho        = 0.8
//   n          = 200
//   trials     = 2000
//   seed       = 20240811            # required, no default
//   out        = results.csv
//   graph_variant = scaled           # or direct (online-graph only)
//   g          = lag1:0.5            # or explicit edges 1-2:0.3,2-5:0.7
//
// Unknown keys, duplicate keys, malformed values and out-of-range values are
// config_error with the 1-based line number; missing required keys (n,
// trials, seed, procedure) report line 0.
struct ExperimentConfig {
    std::vector<ProcedureId> procedures;
    double alpha = 0.2;
    GammaSequence gamma = GammaSequence::inverse_square();
    double tau = 0.8;
    double lambda = 0.3;
    std::vector<std::size_t> batch_sizes{1};
    std::vector<double> pi_alts{0.5};
    double mu_alt = 4.0;
    double mu_null = 0.0;
    double rho = 0.8;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string out_path = "results.csv";
    GraphVariant graph_variant = GraphVariant::scaled;
    GraphWeights weights = GraphWeights::zero();

    // The scenario for one (batch_size, pi_A) grid point.
    sim::SimConfig scenario(std::size_t batch_size, double pi_alt) const;
};

ExperimentConfig parse_config_string(std::string_view text);
ExperimentConfig parse_config_file(const std::string& path);

// "inv-square" or "list:w1,w2,..."; used by the config parser and the CLI.
GammaSequence parse_gamma_spec(std::string_view spec);

} // namespace omt::experiment

#endif // OMT_EXPERIMENT_CONFIG_HPP
