#include "omt/procedures/engine.hpp"

#include <stdexcept>

#include "omt/procedures/alpha_spending.hpp"

namespace omt {

const StepRecord& ProcedureEngine::step(double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument{"p-values must lie in [0, 1]"};
    }
    const StepPlan what = plan();
    StepRecord rec;
    rec.index = state_.next_index();
    rec.p_value = p;
    rec.alpha_i = what.alpha_i;
    rec.rejected = (p <= what.alpha_i);
    rec.tau_i = what.tau_i;
    rec.lambda_i = what.lambda_i;
    rec.below_tau = (p <= what.tau_i);
    rec.below_lambda = (p <= what.lambda_i);
    rec.lag = what.lag;
    state_.append(rec);
    const StepRecord& stored = state_.records().back();
    after_append(stored);
    return stored;
}

AlphaSpendingEngine::AlphaSpendingEngine(double alpha, GammaSequence gamma)
    : ProcedureEngine{ProcedureId::alpha_spending, alpha}, gamma_{std::move(gamma)} {}

StepPlan AlphaSpendingEngine::plan() {
    StepPlan p;
    p.alpha_i = alpha_spending_next(state_, gamma_);
    return p;
}

ClosedAlphaSpendingEngine::ClosedAlphaSpendingEngine(double alpha, GammaSequence gamma)
    : ProcedureEngine{ProcedureId::closed_alpha_spending, alpha},
      gamma_{std::move(gamma)} {
    if (!gamma_.nonincreasing()) {
        throw std::invalid_argument{
            "closed alpha-spending requires a non-increasing gamma sequence"};
    }
}

StepPlan ClosedAlphaSpendingEngine::plan() {
    StepPlan p;
    p.alpha_i = state_.overall_alpha() * gamma_.weight(t_);
    return p;
}

void ClosedAlphaSpendingEngine::after_append(const StepRecord& rec) {
    if (!rec.rejected) ++t_;
}

OnlineGraphEngine::OnlineGraphEngine(double alpha, GammaSequence gamma,
                                     GraphWeights weights, GraphVariant variant)
    : ProcedureEngine{ProcedureId::online_graph, alpha},
      gamma_{std::move(gamma)},
      weights_{std::move(weights)},
      variant_{variant} {}

StepPlan OnlineGraphEngine::plan() {
    const Index i = state_.next_index();
    double inherited = 0.0;
    // Same accumulation order as online_graph_next so the sums round
    // identically.
    for (const StepRecord& rec : rejected_) {
        const double g = weights_.weight(rec.index, i);
        if (g != 0.0) inherited += g * rec.alpha_i;
    }
    const double alpha = state_.overall_alpha();
    StepPlan p;
    p.alpha_i = variant_ == GraphVariant::scaled
                    ? alpha * (gamma_.weight(i) + inherited)
                    : alpha * gamma_.weight(i) + inherited;
    return p;
}

void OnlineGraphEngine::after_append(const StepRecord& rec) {
    if (rec.rejected) rejected_.push_back(rec);
}

AddisSpendingEngine::AddisSpendingEngine(double alpha, GammaSequence gamma,
                                         LagStructure lags, AddisParams params)
    : ProcedureEngine{ProcedureId::addis_spending, alpha},
      gamma_{std::move(gamma)},
      lags_{std::move(lags)},
      params_{std::move(params)},
      cum_sc_{0} {
    if (!gamma_.nonincreasing()) {
        throw std::invalid_argument{"addis requires a non-increasing gamma sequence"};
    }
    if (!params_.tau || !params_.lambda) {
        throw std::invalid_argument{"addis parameters need both tau and lambda callbacks"};
    }
}

StepPlan AddisSpendingEngine::plan() {
    const Index i = state_.next_index();
    const Index lag = lags_.lag(i);
    const TauLambda tl = resolve_addis_params(params_, state_.overall_alpha(), i, lag,
                                              PValuePrefix{pvalues_});
    const Index t = 1 + lag + cum_sc_[static_cast<std::size_t>(i - lag - 1)];
    StepPlan p;
    p.alpha_i = state_.overall_alpha() * (tl.tau - tl.lambda) * gamma_.weight(t);
    p.tau_i = tl.tau;
    p.lambda_i = tl.lambda;
    p.lag = lag;
    return p;
}

void AddisSpendingEngine::after_append(const StepRecord& rec) {
    pvalues_.push_back(rec.p_value);
    cum_sc_.push_back(cum_sc_.back() + ((rec.below_tau && !rec.below_lambda) ? 1 : 0));
}

ClosedAddisSpendingEngine::ClosedAddisSpendingEngine(double alpha, GammaSequence gamma,
                                                     LagStructure lags,
                                                     AddisParams params)
    : ProcedureEngine{ProcedureId::closed_addis_spending, alpha},
      gamma_{std::move(gamma)},
      lags_{std::move(lags)},
      params_{std::move(params)},
      cum_sc_{0},
      cum_nonrej_{0} {
    if (!gamma_.nonincreasing()) {
        throw std::invalid_argument{"addis requires a non-increasing gamma sequence"};
    }
    if (!params_.tau || !params_.lambda) {
        throw std::invalid_argument{"addis parameters need both tau and lambda callbacks"};
    }
}

StepPlan ClosedAddisSpendingEngine::plan() {
    const Index i = state_.next_index();
    const Index lag = lags_.lag(i);
    const TauLambda tl = resolve_addis_params(params_, state_.overall_alpha(), i, lag,
                                              PValuePrefix{pvalues_});
    const auto before = static_cast<std::size_t>(i - lag - 1); // prefix outside window
    const Index in_window_nonrej =
        cum_nonrej_[static_cast<std::size_t>(i - 1)] - cum_nonrej_[before];
    const Index t = 1 + cum_sc_[before] + in_window_nonrej;
    StepPlan p;
    p.alpha_i = state_.overall_alpha() * (tl.tau - tl.lambda) * gamma_.weight(t);
    p.tau_i = tl.tau;
    p.lambda_i = tl.lambda;
    p.lag = lag;
    return p;
}

void ClosedAddisSpendingEngine::after_append(const StepRecord& rec) {
    pvalues_.push_back(rec.p_value);
    cum_sc_.push_back(cum_sc_.back() + ((rec.below_tau && !rec.below_lambda) ? 1 : 0));
    cum_nonrej_.push_back(cum_nonrej_.back() + (rec.rejected ? 0 : 1));
}

std::unique_ptr<ProcedureEngine> make_engine(ProcedureId id, double alpha,
                                             GammaSequence gamma, LagStructure lags,
                                             AddisParams params, GraphWeights weights,
                                             GraphVariant variant) {
    switch (id) {
    case ProcedureId::alpha_spending:
        return std::make_unique<AlphaSpendingEngine>(alpha, std::move(gamma));
    case ProcedureId::closed_alpha_spending:
        return std::make_unique<ClosedAlphaSpendingEngine>(alpha, std::move(gamma));
    case ProcedureId::online_graph:
        return std::make_unique<OnlineGraphEngine>(alpha, std::move(gamma),
                                                   std::move(weights), variant);
    case ProcedureId::addis_spending:
        return std::make_unique<AddisSpendingEngine>(alpha, std::move(gamma),
                                                     std::move(lags), std::move(params));
    case ProcedureId::closed_addis_spending:
        return std::make_unique<ClosedAddisSpendingEngine>(
            alpha, std::move(gamma), std::move(lags), std::move(params));
    case ProcedureId::custom:
        break;
    }
    throw std::invalid_argument{"no engine for this procedure id"};
}

} // namespace omt
