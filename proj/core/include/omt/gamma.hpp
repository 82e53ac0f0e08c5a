#ifndef OMT_GAMMA_HPP
#define OMT_GAMMA_HPP

#include <functional>
#include <optional>

#include "omt/types.hpp"

namespace omt {

// Spending weights (gamma_i)_{i>=1}: non-negative, partial sums bounded by 1.
// Backed by a generator so infinite sequences are representable; invariants
// are validated lazily and cached up to the largest queried index.
//
// Copies are independent (the cache is deep-copied). A single instance is not
// internally synchronized; hand each thread its own copy.
class GammaSequence {
public:
    using Generator = std::function<double(Index)>;

    GammaSequence(Generator generator, bool nonincreasing,
                  std::optional<Index> tail_bound_after = std::nullopt);

    // gamma_i = 6 / (pi^2 i^2); sums to 1, strictly decreasing.
    static GammaSequence inverse_square();

    // Finite list, zero beyond the end. Monotonicity is detected from the
    // entries; the tail bound is the list length (sums are constant past it).
    static GammaSequence from_list(std::vector<double> values);

    // (1, 0, 0, ...).
    static GammaSequence point_mass();

    // gamma_i, validating every invariant up to i. Throws invariant_error on
    // the first violation at or before i.
    double weight(Index i) const;

    // sum_{j<=n} gamma_j with the same lazy validation as weight().
    double partial_sum(Index n) const;

    bool nonincreasing() const noexcept { return nonincreasing_; }
    std::optional<Index> tail_bound_after() const noexcept { return tail_bound_after_; }

    // Scans 1..horizon and reports the first offending index per kind.
    // Violations are data here; nothing throws.
    ValidationReport validate(Index horizon) const;

private:
    struct Cache {
        std::vector<double> values; // values[k] = gamma_{k+1}
        std::vector<double> sums;   // sums[k] = gamma_1 + ... + gamma_{k+1}
        std::vector<Violation> found; // at most one per kind, ordered by discovery
    };

    void extend(Index n) const;
    bool has_kind(ViolationKind kind) const;
    void record(Index index, ViolationKind kind, double value) const;

    Generator generator_;
    bool nonincreasing_ = false;
    std::optional<Index> tail_bound_after_;
    mutable Cache cache_;
};

// Free-function form of GammaSequence::validate.
ValidationReport validate_gamma(const GammaSequence& seq, Index horizon);

} // namespace omt

#endif // OMT_GAMMA_HPP
