#ifndef OMT_LAGS_HPP
#define OMT_LAGS_HPP

#include <functional>

#include "omt/types.hpp"

namespace omt {

// Local-dependence lags (l_i)_{i>=1}: P_i may depend on the l_i p-values
// immediately before it. Constraints: l_i in {0,...,i-1} and l_{i+1} <= l_i + 1.
// Validation is lazy, like GammaSequence; copies are independent.
class LagStructure {
public:
    using Generator = std::function<Index(Index)>;

    explicit LagStructure(Generator generator);

    // l_i = 0: independent p-values.
    static LagStructure independent();

    // l_i = (i-1) mod b: batches of size b (within-batch dependence only).
    static LagStructure batched(Index batch_size);

    // l_i = i-1: arbitrary dependence.
    static LagStructure full();

    static LagStructure from_list(std::vector<Index> lags);

    // l_i with lazy validation up to i; throws invariant_error on violation.
    Index lag(Index i) const;

    ValidationReport validate(Index horizon) const;

private:
    void extend(Index n) const;
    bool has_kind(ViolationKind kind) const;

    Generator generator_;
    mutable std::vector<Index> cache_;
    mutable std::vector<Violation> found_;
};

ValidationReport validate_lags(const LagStructure& lags, Index horizon);

} // namespace omt

#endif // OMT_LAGS_HPP
