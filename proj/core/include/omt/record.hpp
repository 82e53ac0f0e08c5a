#ifndef OMT_RECORD_HPP
#define OMT_RECORD_HPP

#include <string_view>

#include "omt/types.hpp"

namespace omt {

enum class ProcedureId {
    alpha_spending,
    closed_alpha_spending,
    online_graph,
    addis_spending,
    closed_addis_spending,
    custom,
};

std::string_view to_string(ProcedureId id);

// Inverse of to_string for the runnable procedures ("alpha-spending", ...).
// Throws std::invalid_argument on anything else, including "custom".
ProcedureId parse_procedure_id(std::string_view name);

// One step of an online procedure. `below_tau` is the candidate flag
// s_i = 1{P_i <= tau_i}; `below_lambda` is c_i = 1{P_i <= lambda_i}.
// Procedures without discarding record tau_i = 1, lambda_i = 0.
struct StepRecord {
    Index index = 0;
    double p_value = 0.0;
    double alpha_i = 0.0;
    bool rejected = false;
    bool below_tau = true;
    bool below_lambda = false;
    double tau_i = 1.0;
    double lambda_i = 0.0;
    Index lag = 0;
};

// Append-only history of one stream. Indices run 1,2,3,... without gaps and
// past records are immutable: decisions are never reversed.
//
// Single-writer sequential; transfer between threads, never share mutably.
class ProcedureState {
public:
    ProcedureState(ProcedureId id, double overall_alpha);

    ProcedureId procedure_id() const noexcept { return id_; }
    double overall_alpha() const noexcept { return alpha_; }

    const std::vector<StepRecord>& records() const noexcept { return records_; }

    // Index the next appended record must carry.
    Index next_index() const noexcept { return static_cast<Index>(records_.size()) + 1; }

    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    const StepRecord& record(Index i) const;

    // Validates the record against every StepRecord invariant before
    // appending; throws invariant_error on any breach.
    void append(const StepRecord& r);

private:
    ProcedureId id_;
    double alpha_;
    std::vector<StepRecord> records_;
};

} // namespace omt

#endif // OMT_RECORD_HPP
