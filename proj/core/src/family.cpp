#include "omt/closure/family.hpp"

#include <algorithm>
#include <utility>

namespace omt {

double IntersectionTestFamily::level(const IndexSet&, Index, PValuePrefix) const {
    throw std::logic_error(std::string(name()) + ": family provides no per-index levels");
}

bool IntersectionTestFamily::evaluate(const IndexSet& I, PValuePrefix pvalues) const {
    require_index_set(I, "evaluate");
    if (I.back() > pvalues.size())
        throw std::invalid_argument("evaluate: p-values missing for index " +
                                    std::to_string(I.back()));
    for (Index i : I) {
        const double alpha_iI = level(I, i, pvalues.first(i - 1));
        if (pvalues.at(i) <= alpha_iI) return true;
    }
    return false;
}

void require_member(const IndexSet& I, Index i, const char* where) {
    require_index_set(I, where);
    if (!std::binary_search(I.begin(), I.end(), i))
        throw std::invalid_argument(std::string(where) + ": index " + std::to_string(i) +
                                    " is not a member of I");
}

void require_index_set(const IndexSet& I, const char* where) {
    if (I.empty())
        throw std::invalid_argument(std::string(where) + ": index set must be nonempty");
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (I[k] == 0 || (k > 0 && I[k] <= I[k - 1]))
            throw std::invalid_argument(std::string(where) +
                                        ": index set must be sorted ascending, 1-based");
    }
}

// ---------------------------------------------------------------------------

EqualSplitFamily::EqualSplitFamily(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("EqualSplitFamily: alpha must lie in (0,1)");
}

bool EqualSplitFamily::evaluate(const IndexSet& I, PValuePrefix pvalues) const {
    require_index_set(I, "evaluate");
    const double threshold = alpha_ / static_cast<double>(I.size());
    return std::any_of(I.begin(), I.end(),
                       [&](Index i) { return pvalues.at(i) <= threshold; });
}

std::vector<double> EqualSplitFamily::critical_levels(Index n) const {
    std::vector<double> levels;
    for (Index k = 1; k <= n; ++k) levels.push_back(alpha_ / static_cast<double>(k));
    return levels;
}

// ---------------------------------------------------------------------------

namespace {

class ProcedureClosureFamily final : public IntersectionTestFamily {
public:
    ProcedureClosureFamily(OnlineProcedureFn procedure, std::string name)
        : procedure_(std::move(procedure)), name_(std::move(name)) {}

    std::string_view name() const override { return name_; }
    bool has_levels() const override { return false; }

    bool evaluate(const IndexSet& I, PValuePrefix pvalues) const override {
        require_index_set(I, "evaluate");
        const std::vector<bool> decisions = procedure_(pvalues.first(I.back()));
        if (decisions.size() < I.back())
            throw std::runtime_error(name_ + ": procedure returned too few decisions");
        return std::any_of(I.begin(), I.end(), [&](Index i) { return decisions[i - 1]; });
    }

private:
    OnlineProcedureFn procedure_;
    std::string name_;
};

} // namespace

std::shared_ptr<IntersectionTestFamily> closure_of_procedure(OnlineProcedureFn procedure,
                                                             std::string name) {
    if (!procedure) throw std::invalid_argument("closure_of_procedure: null procedure");
    return std::make_shared<ProcedureClosureFamily>(std::move(procedure), std::move(name));
}

} // namespace omt
