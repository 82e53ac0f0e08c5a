#ifndef OMT_PROCEDURES_ENGINE_HPP
#define OMT_PROCEDURES_ENGINE_HPP

#include <memory>

#include "omt/gamma.hpp"
#include "omt/graph_weights.hpp"
#include "omt/lags.hpp"
#include "omt/procedures/addis.hpp"
#include "omt/procedures/online_graph.hpp"
#include "omt/record.hpp"

namespace omt {

// What an engine intends to do with the next hypothesis, before seeing its
// p-value.
struct StepPlan {
    double alpha_i = 0.0;
    double tau_i = 1.0;
    double lambda_i = 0.0;
    Index lag = 0;
};

// Streaming driver for one online procedure. Owns the append-only state and
// keeps whatever running counters the procedure needs so a step costs O(1)
// amortized work (plus the rejected-set scan for graph procedures), while the
// free functions in alpha_spending.hpp / addis.hpp recompute the same levels
// from the records alone. The two routes must agree exactly; tests hold them
// to that.
class ProcedureEngine {
public:
    virtual ~ProcedureEngine() = default;
    ProcedureEngine(const ProcedureEngine&) = delete;
    ProcedureEngine& operator=(const ProcedureEngine&) = delete;

    // Level the next hypothesis will be tested at; does not advance anything.
    double next_level() { return plan().alpha_i; }

    // Feed the next p-value: decide, record, advance the internal clocks.
    const StepRecord& step(double p);

    const ProcedureState& state() const noexcept { return state_; }
    ProcedureId id() const noexcept { return state_.procedure_id(); }

protected:
    ProcedureEngine(ProcedureId id, double alpha) : state_{id, alpha} {}

    virtual StepPlan plan() = 0;
    virtual void after_append(const StepRecord&) {}

    ProcedureState state_;
};

class AlphaSpendingEngine final : public ProcedureEngine {
public:
    AlphaSpendingEngine(double alpha, GammaSequence gamma);

private:
    StepPlan plan() override;

    GammaSequence gamma_;
};

class ClosedAlphaSpendingEngine final : public ProcedureEngine {
public:
    ClosedAlphaSpendingEngine(double alpha, GammaSequence gamma);

private:
    StepPlan plan() override;
    void after_append(const StepRecord& rec) override;

    GammaSequence gamma_;
    Index t_ = 1; // spending clock: 1 + past non-rejections
};

class OnlineGraphEngine final : public ProcedureEngine {
public:
    OnlineGraphEngine(double alpha, GammaSequence gamma, GraphWeights weights,
                      GraphVariant variant);

private:
    StepPlan plan() override;
    void after_append(const StepRecord& rec) override;

    GammaSequence gamma_;
    GraphWeights weights_;
    GraphVariant variant_;
    std::vector<StepRecord> rejected_; // rejected steps, in index order
};

class AddisSpendingEngine final : public ProcedureEngine {
public:
    AddisSpendingEngine(double alpha, GammaSequence gamma, LagStructure lags,
                        AddisParams params);

private:
    StepPlan plan() override;
    void after_append(const StepRecord& rec) override;

    GammaSequence gamma_;
    LagStructure lags_;
    AddisParams params_;
    std::vector<double> pvalues_;
    std::vector<Index> cum_sc_; // cum_sc_[k] = sum_{j<=k} (s_j - c_j)
};

class ClosedAddisSpendingEngine final : public ProcedureEngine {
public:
    ClosedAddisSpendingEngine(double alpha, GammaSequence gamma, LagStructure lags,
                              AddisParams params);

private:
    StepPlan plan() override;
    void after_append(const StepRecord& rec) override;

    GammaSequence gamma_;
    LagStructure lags_;
    AddisParams params_;
    std::vector<double> pvalues_;
    std::vector<Index> cum_sc_;     // as in AddisSpendingEngine
    std::vector<Index> cum_nonrej_; // cum_nonrej_[k] = sum_{j<=k} (1 - r_j)
};

// Builds the engine for `id`. Addis engines require params with both
// callbacks set; the graph engine uses `weights` and `variant`; the other
// procedures ignore the extra arguments.
std::unique_ptr<ProcedureEngine> make_engine(
    ProcedureId id, double alpha, GammaSequence gamma,
    LagStructure lags = LagStructure::independent(), AddisParams params = {},
    GraphWeights weights = GraphWeights::zero(),
    GraphVariant variant = GraphVariant::scaled);

} // namespace omt

#endif // OMT_PROCEDURES_ENGINE_HPP
