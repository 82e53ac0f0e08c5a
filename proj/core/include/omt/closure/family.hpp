#ifndef OMT_CLOSURE_FAMILY_HPP
#define OMT_CLOSURE_FAMILY_HPP

#include <functional>
#include <memory>
#include <string_view>

#include "omt/types.hpp"

namespace omt {

// A family of intersection tests I -> phi_I over finite, nonempty index sets.
//
// When the family is built from per-index significance levels, phi_I = 1 iff
// some i in I has P_i <= alpha_i^I, and level() exposes alpha_i^I. A level may
// depend only on information up to step i-1; this is enforced structurally:
// level() is handed exactly the p-value prefix P_1..P_{i-1}.
class IntersectionTestFamily {
public:
    virtual ~IntersectionTestFamily() = default;

    virtual std::string_view name() const = 0;

    // Whether per-index levels alpha_i^I exist (required by the short-cut).
    virtual bool has_levels() const { return true; }

    // alpha_i^I for i in I. `prefix` must be exactly P_1..P_{i-1}.
    virtual double level(const IndexSet& I, Index i, PValuePrefix prefix) const;

    // phi_I evaluated on P_1..P_n with n >= max(I). The default derives
    // phi_I from the levels, restricting each level call to its prefix.
    virtual bool evaluate(const IndexSet& I, PValuePrefix pvalues) const;

    // Level values the family can attain on streams of length <= n; used to
    // build boundary-adversarial grids for the checkers. Optional.
    virtual std::vector<double> critical_levels(Index n) const { return {}; }
};

// Requires i to be a member of the sorted set I; throws std::invalid_argument.
void require_member(const IndexSet& I, Index i, const char* where);

// Requires I nonempty and sorted strictly ascending.
void require_index_set(const IndexSet& I, const char* where);

// ---------------------------------------------------------------------------

// Bonferroni family splitting alpha equally: phi_I = 1 iff some i in I has
// P_i <= alpha / |I|. A valid level-alpha intersection test for each I, but
// the level of an early hypothesis shrinks as future indices join the set, so
// the family is not predictable and its closure is not an online procedure.
class EqualSplitFamily final : public IntersectionTestFamily {
public:
    explicit EqualSplitFamily(double alpha);

    std::string_view name() const override { return "equal-split"; }
    bool has_levels() const override { return false; }
    bool evaluate(const IndexSet& I, PValuePrefix pvalues) const override;
    std::vector<double> critical_levels(Index n) const override;

private:
    double alpha_;
};

// ---------------------------------------------------------------------------

// An online procedure as a black box: given P_1..P_k, the per-index
// decisions phi_1..phi_k. Must be online (decisions depend only on the
// prefix up to their own index).
using OnlineProcedureFn = std::function<std::vector<bool>(PValuePrefix)>;

// The closure of an FWER-controlling online procedure: phi_I = 1 iff some
// i in I is rejected by the procedure. Predictable by construction, and its
// brute-force closed procedure reproduces the original decisions.
std::shared_ptr<IntersectionTestFamily> closure_of_procedure(OnlineProcedureFn procedure,
                                                             std::string name = "procedure-closure");

} // namespace omt

#endif // OMT_CLOSURE_FAMILY_HPP
