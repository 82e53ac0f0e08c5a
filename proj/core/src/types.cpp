#include "omt/types.hpp"

#include <sstream>

namespace omt {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::negative_weight: return "negative_weight";
    case ViolationKind::partial_sum_exceeds_one: return "partial_sum_exceeds_one";
    case ViolationKind::not_nonincreasing: return "not_nonincreasing";
    case ViolationKind::lag_too_large: return "lag_too_large";
    case ViolationKind::lag_growth: return "lag_growth";
    case ViolationKind::row_sum_exceeds_one: return "row_sum_exceeds_one";
    case ViolationKind::negative_edge_weight: return "negative_edge_weight";
    }
    return "unknown";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << to_string(kind) << " at index " << index << " (value " << value << ")";
    return os.str();
}

} // namespace omt
