#ifndef OMT_TYPES_HPP
#define OMT_TYPES_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace omt {

// Hypotheses, gamma weights and lags are indexed from 1.
using Index = std::uint64_t;

// A finite set of hypothesis indices, kept sorted ascending without duplicates.
using IndexSet = std::vector<Index>;

// Thrown when a declared data invariant is broken at evaluation time
// (gamma summability, weight row sums, tau/lambda ranges, record order, ...).
class invariant_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by the experiment-config parser; `line` is 1-based, 0 when the
// error is not tied to a specific line.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

enum class ViolationKind {
    negative_weight,         // gamma_i < 0
    partial_sum_exceeds_one, // sum_{j<=i} gamma_j > 1 + tolerance
    not_nonincreasing,       // declared non-increasing but gamma_{i} > gamma_{i-1}
    lag_too_large,           // l_i > i - 1
    lag_growth,              // l_{i+1} > l_i + 1
    row_sum_exceeds_one,     // sum_{i>j} g_{j,i} > 1 + tolerance for a source j
    negative_edge_weight,    // g_{j,i} < 0
};

const char* to_string(ViolationKind kind);

struct Violation {
    Index index = 0; // first offending index (target index for edge kinds)
    ViolationKind kind{};
    double value = 0.0; // the offending value (weight, partial sum, lag, ...)

    std::string describe() const;
};

// Outcome of validating a sequence over a horizon. Violations are data, not
// failures: at most one entry per kind, the first offending index.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

// Absolute tolerance on summability checks. Comparisons that drive
// rejection decisions are always exact.
inline constexpr double kSumTolerance = 1e-12;

// Read-only view of the p-values P_1..P_k observed so far (1-based access).
// Level computations only ever receive the prefix they are entitled to.
class PValuePrefix {
public:
    PValuePrefix() = default;
    explicit PValuePrefix(std::span<const double> values) : values_(values) {}

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    double at(Index i) const {
        if (i == 0 || i > values_.size())
            throw std::out_of_range("PValuePrefix: index " + std::to_string(i) +
                                    " outside prefix of length " + std::to_string(values_.size()));
        return values_[i - 1];
    }

    // Sub-prefix P_1..P_k (k may exceed size(), in which case the full view
    // is returned; it never grows).
    PValuePrefix first(std::size_t k) const {
        return PValuePrefix(values_.subspan(0, std::min(k, values_.size())));
    }

    std::span<const double> span() const noexcept { return values_; }

private:
    std::span<const double> values_{};
};

} // namespace omt

#endif // OMT_TYPES_HPP
