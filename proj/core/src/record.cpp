#include "omt/record.hpp"

#include <cmath>
#include <sstream>

namespace omt {

std::string_view to_string(ProcedureId id) {
    switch (id) {
    case ProcedureId::alpha_spending: return "alpha-spending";
    case ProcedureId::closed_alpha_spending: return "closed-alpha-spending";
    case ProcedureId::online_graph: return "online-graph";
    case ProcedureId::addis_spending: return "addis-spending";
    case ProcedureId::closed_addis_spending: return "closed-addis-spending";
    case ProcedureId::custom: return "custom";
    }
    return "unknown";
}

ProcedureId parse_procedure_id(std::string_view name) {
    for (ProcedureId id :
         {ProcedureId::alpha_spending, ProcedureId::closed_alpha_spending,
          ProcedureId::online_graph, ProcedureId::addis_spending,
          ProcedureId::closed_addis_spending}) {
        if (name == to_string(id)) return id;
    }
    throw std::invalid_argument("unknown procedure: " + std::string(name));
}

ProcedureState::ProcedureState(ProcedureId id, double overall_alpha)
    : id_(id), alpha_(overall_alpha) {
    if (!(overall_alpha > 0.0 && overall_alpha < 1.0))
        throw std::invalid_argument("ProcedureState: overall alpha must lie in (0,1)");
}

const StepRecord& ProcedureState::record(Index i) const {
    if (i == 0 || i > records_.size())
        throw std::out_of_range("ProcedureState::record: no record with index " + std::to_string(i));
    return records_[i - 1];
}

void ProcedureState::append(const StepRecord& r) {
    std::ostringstream os;
    if (r.index != next_index()) {
        os << "record index " << r.index << " breaks the gap-free order (expected "
           << next_index() << ")";
        throw invariant_error(os.str());
    }
    if (!(r.p_value >= 0.0 && r.p_value <= 1.0) || std::isnan(r.p_value))
        throw invariant_error("p-value outside [0,1] at index " + std::to_string(r.index));
    if (!(r.alpha_i >= 0.0 && r.alpha_i < 1.0))
        throw invariant_error("alpha_i outside [0,1) at index " + std::to_string(r.index));
    if (r.rejected != (r.p_value <= r.alpha_i))
        throw invariant_error("rejection flag inconsistent with p <= alpha at index " +
                              std::to_string(r.index));
    if (r.below_lambda && !r.below_tau)
        throw invariant_error("c_i set without s_i at index " + std::to_string(r.index));
    if (r.below_tau != (r.p_value <= r.tau_i) || r.below_lambda != (r.p_value <= r.lambda_i))
        throw invariant_error("candidate flags inconsistent with tau/lambda at index " +
                              std::to_string(r.index));
    if (r.lag > r.index - 1)
        throw invariant_error("lag exceeds index-1 at index " + std::to_string(r.index));
    records_.push_back(r);
}

} // namespace omt
