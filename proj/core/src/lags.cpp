#include "omt/lags.hpp"

#include <algorithm>
#include <utility>

namespace omt {

LagStructure::LagStructure(Generator generator) : generator_(std::move(generator)) {
    if (!generator_) throw std::invalid_argument("LagStructure: null generator");
}

LagStructure LagStructure::independent() {
    return LagStructure([](Index) { return Index{0}; });
}

LagStructure LagStructure::batched(Index batch_size) {
    if (batch_size == 0) throw std::invalid_argument("LagStructure::batched: batch size must be >= 1");
    return LagStructure([batch_size](Index i) { return (i - 1) % batch_size; });
}

LagStructure LagStructure::full() {
    return LagStructure([](Index i) { return i - 1; });
}

LagStructure LagStructure::from_list(std::vector<Index> lags) {
    return LagStructure([vals = std::move(lags)](Index i) -> Index {
        if (i > vals.size())
            throw std::out_of_range("LagStructure::from_list: index " + std::to_string(i) +
                                    " beyond provided lags");
        return vals[i - 1];
    });
}

bool LagStructure::has_kind(ViolationKind kind) const {
    return std::any_of(found_.begin(), found_.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

void LagStructure::extend(Index n) const {
    while (cache_.size() < n) {
        const Index i = static_cast<Index>(cache_.size()) + 1;
        const Index l = generator_(i);
        if (l > i - 1 && !has_kind(ViolationKind::lag_too_large))
            found_.push_back(Violation{i, ViolationKind::lag_too_large, static_cast<double>(l)});
        if (i > 1 && l > cache_.back() + 1 && !has_kind(ViolationKind::lag_growth))
            found_.push_back(Violation{i, ViolationKind::lag_growth, static_cast<double>(l)});
        cache_.push_back(l);
    }
}

Index LagStructure::lag(Index i) const {
    if (i == 0) throw std::invalid_argument("LagStructure::lag: index is 1-based");
    extend(i);
    for (const Violation& v : found_)
        if (v.index <= i) throw invariant_error("lag structure invalid: " + v.describe());
    return cache_[i - 1];
}

ValidationReport LagStructure::validate(Index horizon) const {
    if (horizon == 0) throw std::invalid_argument("validate: horizon must be >= 1");
    extend(horizon);
    ValidationReport report;
    for (const Violation& v : found_)
        if (v.index <= horizon) report.violations.push_back(v);
    return report;
}

ValidationReport validate_lags(const LagStructure& lags, Index horizon) {
    return lags.validate(horizon);
}

} // namespace omt
