#ifndef OMT_PROCEDURES_ALPHA_SPENDING_HPP
#define OMT_PROCEDURES_ALPHA_SPENDING_HPP

#include "omt/closure/family.hpp"
#include "omt/gamma.hpp"
#include "omt/record.hpp"

namespace omt {

// Next level of plain Alpha-Spending: alpha_i = alpha * gamma_i for the
// upcoming index i = state.next_index().
double alpha_spending_next(const ProcedureState& state, const GammaSequence& gamma);

// Next level of closed Alpha-Spending: alpha_i = alpha * gamma_{t(i)} with
// t(i) = 1 + #{j < i : H_j not rejected}. Requires a non-increasing gamma.
double closed_alpha_spending_next(const ProcedureState& state, const GammaSequence& gamma);

// Per-index level of the Alpha-Spending intersection test:
// alpha_i^I = alpha * gamma_{t_I(i)} with t_I(i) = |{j in I : j <= i}|,
// i.e. Alpha-Spending applied to the subsequence I, ignoring other indices.
double alpha_spending_intersection_level(const IndexSet& I, Index i, double alpha,
                                         const GammaSequence& gamma);

// The family of Alpha-Spending intersection tests sharing one gamma.
// Predictable for any gamma; consonant when gamma is non-increasing. The
// non-monotone case is allowed here so the brute-force oracle and the
// consonance checker can exercise it.
class AlphaSpendingFamily final : public IntersectionTestFamily {
public:
    AlphaSpendingFamily(double alpha, GammaSequence gamma);

    std::string_view name() const override { return "alpha-spending"; }
    double level(const IndexSet& I, Index i, PValuePrefix prefix) const override;
    std::vector<double> critical_levels(Index n) const override;

    double alpha() const noexcept { return alpha_; }
    const GammaSequence& gamma() const noexcept { return gamma_; }

private:
    double alpha_;
    GammaSequence gamma_;
};

} // namespace omt

#endif // OMT_PROCEDURES_ALPHA_SPENDING_HPP
