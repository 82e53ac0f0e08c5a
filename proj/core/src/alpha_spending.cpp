#include "omt/procedures/alpha_spending.hpp"

#include <algorithm>
#include <stdexcept>

namespace omt {

double alpha_spending_next(const ProcedureState& state, const GammaSequence& gamma) {
    return state.overall_alpha() * gamma.weight(state.next_index());
}

double closed_alpha_spending_next(const ProcedureState& state, const GammaSequence& gamma) {
    if (!gamma.nonincreasing()) {
        throw std::invalid_argument{
            "closed alpha-spending requires a non-increasing gamma sequence"};
    }
    // t(i) = 1 + number of past non-rejections; rejected hypotheses do not
    // advance the spending clock, so their weight is recycled forward.
    Index t = 1;
    for (const StepRecord& rec : state.records()) {
        if (!rec.rejected) ++t;
    }
    return state.overall_alpha() * gamma.weight(t);
}

double alpha_spending_intersection_level(const IndexSet& I, Index i, double alpha,
                                         const GammaSequence& gamma) {
    require_index_set(I, "alpha_spending_intersection_level");
    require_member(I, i, "alpha_spending_intersection_level");
    // Rank of i within I: Alpha-Spending run on the subsequence indexed by I.
    const auto rank = static_cast<Index>(
        std::upper_bound(I.begin(), I.end(), i) - I.begin());
    return alpha * gamma.weight(rank);
}

AlphaSpendingFamily::AlphaSpendingFamily(double alpha, GammaSequence gamma)
    : alpha_{alpha}, gamma_{std::move(gamma)} {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument{"alpha must lie in (0, 1)"};
    }
}

double AlphaSpendingFamily::level(const IndexSet& I, Index i, PValuePrefix) const {
    return alpha_spending_intersection_level(I, i, alpha_, gamma_);
}

std::vector<double> AlphaSpendingFamily::critical_levels(Index n) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index k = 1; k <= n; ++k) {
        out.push_back(alpha_ * gamma_.weight(k));
    }
    return out;
}

} // namespace omt
