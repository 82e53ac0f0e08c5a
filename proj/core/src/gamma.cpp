#include "omt/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace omt {

GammaSequence::GammaSequence(Generator generator, bool nonincreasing,
                             std::optional<Index> tail_bound_after)
    : generator_(std::move(generator)),
      nonincreasing_(nonincreasing),
      tail_bound_after_(tail_bound_after) {
    if (!generator_) throw std::invalid_argument("GammaSequence: null generator");
}

GammaSequence GammaSequence::inverse_square() {
    return GammaSequence(
        [](Index i) {
            const double x = static_cast<double>(i);
            return 6.0 / (std::numbers::pi * std::numbers::pi * x * x);
        },
        /*nonincreasing=*/true);
}

GammaSequence GammaSequence::from_list(std::vector<double> values) {
    bool mono = true;
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] > values[k - 1]) mono = false;
    if (!values.empty() && values.back() < 0.0) mono = false; // tail of zeros would increase
    const Index tail = static_cast<Index>(values.size());
    return GammaSequence(
        [vals = std::move(values)](Index i) {
            return i <= vals.size() ? vals[i - 1] : 0.0;
        },
        mono, tail);
}

GammaSequence GammaSequence::point_mass() {
    return GammaSequence([](Index i) { return i == 1 ? 1.0 : 0.0; },
                         /*nonincreasing=*/true, Index{1});
}

bool GammaSequence::has_kind(ViolationKind kind) const {
    return std::any_of(cache_.found.begin(), cache_.found.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

void GammaSequence::record(Index index, ViolationKind kind, double value) const {
    if (!has_kind(kind)) cache_.found.push_back(Violation{index, kind, value});
}

void GammaSequence::extend(Index n) const {
    while (cache_.values.size() < n) {
        const Index i = static_cast<Index>(cache_.values.size()) + 1;
        const double g = generator_(i);
        const double sum = (cache_.sums.empty() ? 0.0 : cache_.sums.back()) + g;
        if (g < 0.0) record(i, ViolationKind::negative_weight, g);
        const bool tail_guaranteed = tail_bound_after_ && i > *tail_bound_after_;
        if (!tail_guaranteed && sum > 1.0 + kSumTolerance)
            record(i, ViolationKind::partial_sum_exceeds_one, sum);
        if (nonincreasing_ && i > 1 && g > cache_.values.back())
            record(i, ViolationKind::not_nonincreasing, g);
        cache_.values.push_back(g);
        cache_.sums.push_back(sum);
    }
}

double GammaSequence::weight(Index i) const {
    if (i == 0) throw std::invalid_argument("GammaSequence::weight: index is 1-based");
    extend(i);
    for (const Violation& v : cache_.found)
        if (v.index <= i)
            throw invariant_error("gamma sequence invalid: " + v.describe());
    return cache_.values[i - 1];
}

double GammaSequence::partial_sum(Index n) const {
    if (n == 0) return 0.0;
    extend(n);
    for (const Violation& v : cache_.found)
        if (v.index <= n)
            throw invariant_error("gamma sequence invalid: " + v.describe());
    return cache_.sums[n - 1];
}

ValidationReport GammaSequence::validate(Index horizon) const {
    if (horizon == 0) throw std::invalid_argument("validate: horizon must be >= 1");
    extend(horizon);
    ValidationReport report;
    for (const Violation& v : cache_.found)
        if (v.index <= horizon) report.violations.push_back(v);
    return report;
}

ValidationReport validate_gamma(const GammaSequence& seq, Index horizon) {
    return seq.validate(horizon);
}

} // namespace omt
