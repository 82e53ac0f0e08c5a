#ifndef OMT_EXPERIMENT_CSV_HPP
#define OMT_EXPERIMENT_CSV_HPP

#include <string>
#include <string_view>

#include "omt/sim/simulate.hpp"

namespace omt::experiment {

inline constexpr std::string_view kCsvHeader =
    "procedure,batch_size,pi_A,mu_A,mu_N,rho,n,trials,seed,power,power_se,fwer,fwer_se";

// Shortest-round-trip style rendering with six significant digits (printf
// %.6g); integers keep their exact decimal form.
std::string format_sig6(double value);

// Header line plus one line per row, '\n' separated, trailing newline.
std::string render_csv(const sim::MetricsTable& table);

// Strict inverse of render_csv: the header must match kCsvHeader exactly and
// every row must have 13 well-formed fields. Throws config_error with the
// offending 1-based line.
sim::MetricsTable parse_csv(std::string_view text);

} // namespace omt::experiment

#endif // OMT_EXPERIMENT_CSV_HPP
