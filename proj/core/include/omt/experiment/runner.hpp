#ifndef OMT_EXPERIMENT_RUNNER_HPP
#define OMT_EXPERIMENT_RUNNER_HPP

#include "omt/experiment/config.hpp"

namespace omt::experiment {

struct ExperimentResult {
    sim::MetricsTable table; // sorted by (procedure, batch_size, pi_A)
    std::string csv;         // render_csv(table)
};

// Runs every (batch_size, pi_A) scenario of the config for every listed
// procedure. The row order — and therefore the CSV — is independent of the
// thread count and of scenario execution order.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads = 1);

// Plain file write helper for the CLI; throws std::runtime_error when the
// file cannot be created.
void write_text_file(const std::string& path, std::string_view content);

} // namespace omt::experiment

#endif // OMT_EXPERIMENT_RUNNER_HPP
