#include "omt/procedures/addis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace omt {

namespace {

std::vector<double> collect_pvalues(const ProcedureState& state) {
    std::vector<double> out;
    out.reserve(state.records().size());
    for (const StepRecord& rec : state.records()) out.push_back(rec.p_value);
    return out;
}

void require_nonincreasing(const GammaSequence& gamma) {
    if (!gamma.nonincreasing()) {
        throw std::invalid_argument{"addis requires a non-increasing gamma sequence"};
    }
}

} // namespace

AddisParams AddisParams::constants(double tau, double lambda) {
    AddisParams p;
    p.tau = [tau](Index, PValuePrefix) { return tau; };
    p.lambda = [lambda](Index, PValuePrefix) { return lambda; };
    return p;
}

TauLambda resolve_addis_params(const AddisParams& params, double alpha, Index i,
                               Index lag_i, PValuePrefix prefix) {
    if (!params.tau || !params.lambda) {
        throw std::invalid_argument{"addis parameters need both tau and lambda callbacks"};
    }
    if (i == 0 || lag_i >= i) {
        throw std::invalid_argument{"lag must satisfy 0 <= l_i <= i - 1"};
    }
    // The callbacks only ever see P_1..P_{i - l_i - 1}; anything later is
    // inside the dependence window and off-limits by construction.
    const Index visible = i - lag_i - 1;
    if (prefix.size() < visible) {
        throw std::invalid_argument{"prefix too short for the requested index"};
    }
    const PValuePrefix permitted = prefix.first(visible);
    const double tau = params.tau(i, permitted);
    const double lambda = params.lambda(i, permitted);
    if (!(tau > 0.0) || !(tau <= 1.0)) {
        throw invariant_error{"tau at index " + std::to_string(i) +
                              " must lie in (0, 1], got " + std::to_string(tau)};
    }
    if (!(lambda >= alpha * tau) || !(lambda < tau)) {
        throw invariant_error{"lambda at index " + std::to_string(i) +
                              " must lie in [alpha*tau, tau), got " +
                              std::to_string(lambda)};
    }
    return {tau, lambda};
}

double addis_spending_next(const ProcedureState& state, const GammaSequence& gamma,
                           const LagStructure& lags, const AddisParams& params) {
    require_nonincreasing(gamma);
    const Index i = state.next_index();
    const Index lag = lags.lag(i);
    const std::vector<double> past = collect_pvalues(state);
    const TauLambda tl =
        resolve_addis_params(params, state.overall_alpha(), i, lag, PValuePrefix{past});

    // t(i) = 1 + l_i + sum of (s_j - c_j) over the prefix outside the window.
    Index t = 1 + lag;
    const Index cutoff = i - lag - 1; // last index that counts toward the sum
    for (const StepRecord& rec : state.records()) {
        if (rec.index > cutoff) break;
        if (rec.below_tau && !rec.below_lambda) ++t;
    }
    return state.overall_alpha() * (tl.tau - tl.lambda) * gamma.weight(t);
}

double addis_intersection_level(const IndexSet& I, Index i, double alpha,
                                const GammaSequence& gamma, const LagStructure& lags,
                                const AddisParams& params, PValuePrefix prefix) {
    require_index_set(I, "addis_intersection_level");
    require_member(I, i, "addis_intersection_level");
    if (prefix.size() + 1 < i) {
        throw std::invalid_argument{"prefix must hold all p-values before i"};
    }
    const Index lag = lags.lag(i);
    const TauLambda tl = resolve_addis_params(params, alpha, i, lag, prefix);

    // Window members of I count as spent regardless of their p-values ...
    const Index window_lo = i - lag; // window is {window_lo, .., i - 1}
    const auto lo = std::lower_bound(I.begin(), I.end(), window_lo);
    const auto hi = std::lower_bound(I.begin(), I.end(), i);
    Index t = 1 + static_cast<Index>(hi - lo);

    // ... while earlier members advance the clock only when kept and not a
    // candidate, exactly as in the one-dimensional procedure.
    for (Index j : I) {
        if (j >= window_lo) break;
        const Index lag_j = lags.lag(j);
        const TauLambda tlj = resolve_addis_params(params, alpha, j, lag_j, prefix);
        const double pj = prefix.at(j);
        if (pj <= tlj.tau && !(pj <= tlj.lambda)) ++t;
    }
    return alpha * (tl.tau - tl.lambda) * gamma.weight(t);
}

double closed_addis_spending_next(const ProcedureState& state, const GammaSequence& gamma,
                                  const LagStructure& lags, const AddisParams& params) {
    require_nonincreasing(gamma);
    const Index i = state.next_index();
    const Index lag = lags.lag(i);
    const std::vector<double> past = collect_pvalues(state);
    const TauLambda tl =
        resolve_addis_params(params, state.overall_alpha(), i, lag, PValuePrefix{past});

    // Before the window the ADDIS clock, inside it the closure clock: only
    // hypotheses that were not rejected take up a spot.
    const Index window_lo = i - lag;
    Index t = 1;
    for (const StepRecord& rec : state.records()) {
        if (rec.index < window_lo) {
            if (rec.below_tau && !rec.below_lambda) ++t;
        } else if (!rec.rejected) {
            ++t;
        }
    }
    return state.overall_alpha() * (tl.tau - tl.lambda) * gamma.weight(t);
}

AddisFamily::AddisFamily(double alpha, GammaSequence gamma, LagStructure lags,
                         AddisParams params)
    : alpha_{alpha},
      gamma_{std::move(gamma)},
      lags_{std::move(lags)},
      params_{std::move(params)} {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument{"alpha must lie in (0, 1)"};
    }
    require_nonincreasing(gamma_);
    if (!params_.tau || !params_.lambda) {
        throw std::invalid_argument{"addis parameters need both tau and lambda callbacks"};
    }
}

double AddisFamily::level(const IndexSet& I, Index i, PValuePrefix prefix) const {
    return addis_intersection_level(I, i, alpha_, gamma_, lags_, params_, prefix);
}

std::vector<double> AddisFamily::critical_levels(Index n) const {
    // Seeded from the index-1 thresholds; for constant tau/lambda these are
    // the exact spending levels alpha * (tau - lambda) * gamma_k.
    const TauLambda tl = resolve_addis_params(params_, alpha_, 1, 0, PValuePrefix{});
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 2);
    for (Index k = 1; k <= n; ++k) {
        out.push_back(alpha_ * (tl.tau - tl.lambda) * gamma_.weight(k));
    }
    out.push_back(tl.tau);
    out.push_back(tl.lambda);
    return out;
}

} // namespace omt
