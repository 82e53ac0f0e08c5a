#ifndef OMT_PROCEDURES_ADDIS_HPP
#define OMT_PROCEDURES_ADDIS_HPP

#include <functional>

#include "omt/closure/family.hpp"
#include "omt/gamma.hpp"
#include "omt/lags.hpp"
#include "omt/record.hpp"

namespace omt {

// Discarding/adaptivity parameters of ADDIS-Spending. tau_i in (0, 1] is the
// discarding threshold, lambda_i in [alpha * tau_i, tau_i) the candidacy
// threshold. Both may depend on the index and on the p-values the procedure is
// allowed to see at that point: the prefix handed to the callbacks is already
// cut down to P_1..P_{i - l_i - 1}, so a conforming callback cannot peek past
// the local-dependence window even if it tries.
struct AddisParams {
    std::function<double(Index, PValuePrefix)> tau;
    std::function<double(Index, PValuePrefix)> lambda;

    static AddisParams constants(double tau, double lambda);
};

// tau_i / lambda_i resolved and range-checked for one index.
struct TauLambda {
    double tau;
    double lambda;
};

// Evaluates the callbacks on the permitted prefix and validates the ranges;
// throws invariant_error with the offending index on a violation.
TauLambda resolve_addis_params(const AddisParams& params, double alpha, Index i,
                               Index lag_i, PValuePrefix prefix);

// Next level of ADDIS-Spending for i = state.next_index():
//
//   alpha_i = alpha * (tau_i - lambda_i) * gamma_{t(i)}
//   t(i)    = 1 + l_i + sum_{j <= i - l_i - 1} (s_j - c_j)
//
// where s_j = 1{P_j <= tau_j} and c_j = 1{P_j <= lambda_j}. Hypotheses inside
// the dependence window count as spent; discarded (P_j > tau_j) and candidate
// (P_j <= lambda_j) past hypotheses both hand their weight forward. Requires a
// non-increasing gamma.
double addis_spending_next(const ProcedureState& state, const GammaSequence& gamma,
                           const LagStructure& lags, const AddisParams& params);

// Per-index level of the ADDIS intersection test:
//
//   t_I(i) = 1 + |L_i ∩ I| + sum_{j in I, j <= i - l_i - 1} (s_j - c_j)
//
// with L_i = {i - l_i, .., i - 1} the dependence window of i. The prefix must
// hold P_1..P_{i-1}; tau_j/lambda_j inside the sum are re-resolved from their
// own permitted prefixes.
double addis_intersection_level(const IndexSet& I, Index i, double alpha,
                                const GammaSequence& gamma, const LagStructure& lags,
                                const AddisParams& params, PValuePrefix prefix);

// Next level of closed ADDIS-Spending:
//
//   t(i) = 1 + sum_{j <= i - l_i - 1} (s_j - c_j) + sum_{j = i - l_i}^{i-1} (1 - r_j)
//
// i.e. the shortcut of the closure over the ADDIS family: outside the window
// the usual ADDIS clock, inside it only non-rejections count. With lag zero
// everywhere this collapses to plain ADDIS-Spending exactly.
double closed_addis_spending_next(const ProcedureState& state, const GammaSequence& gamma,
                                  const LagStructure& lags, const AddisParams& params);

// The family of ADDIS intersection tests; predictable and consonant for
// non-increasing gamma. Constructor rejects gamma sequences that are not
// non-increasing.
class AddisFamily final : public IntersectionTestFamily {
public:
    AddisFamily(double alpha, GammaSequence gamma, LagStructure lags, AddisParams params);

    std::string_view name() const override { return "addis"; }
    double level(const IndexSet& I, Index i, PValuePrefix prefix) const override;
    std::vector<double> critical_levels(Index n) const override;

    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
    GammaSequence gamma_;
    LagStructure lags_;
    AddisParams params_;
};

} // namespace omt

#endif // OMT_PROCEDURES_ADDIS_HPP
