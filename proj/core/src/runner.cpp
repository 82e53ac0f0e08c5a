#include "omt/experiment/runner.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "omt/experiment/csv.hpp"

namespace omt::experiment {

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads) {
    ExperimentResult result;
    for (std::size_t b : config.batch_sizes) {
        for (double pi : config.pi_alts) {
            const sim::SimConfig scenario = config.scenario(b, pi);
            sim::MetricsTable part =
                sim::estimate_power_fwer(scenario, config.procedures, threads);
            for (sim::MetricsRow& row : part.rows) {
                result.table.rows.push_back(std::move(row));
            }
        }
    }
    std::sort(result.table.rows.begin(), result.table.rows.end(),
              [](const sim::MetricsRow& a, const sim::MetricsRow& b) {
                  return std::tie(a.procedure, a.batch_size, a.pi_alt) <
                         std::tie(b.procedure, b.batch_size, b.pi_alt);
              });
    result.csv = render_csv(result.table);
    return result;
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out{path, std::ios::binary};
    if (!out) throw std::runtime_error{"cannot write file: " + path};
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error{"short write to file: " + path};
}

} // namespace omt::experiment
