#ifndef OMT_CLOSURE_SHORTCUT_HPP
#define OMT_CLOSURE_SHORTCUT_HPP

#include "omt/closure/decisions.hpp"
#include "omt/closure/family.hpp"

namespace omt {

// Sequential short-cut of a closed procedure built from per-index levels.
//
// Maintains I_1 = {1} and I_i = {j < i : P_j > alpha_j^{I_j}} union {i};
// step i computes the single level alpha_i^{I_i} and rejects H_i iff
// P_i <= alpha_i^{I_i}. For a predictable, consonant family this reproduces
// the full closed procedure with one level evaluation per step.
class ShortcutRunner {
public:
    struct Step {
        Index index = 0;
        double level = 0.0;
        bool rejected = false;
    };

    // The family must outlive the runner and supply per-index levels.
    explicit ShortcutRunner(const IntersectionTestFamily& family);

    Step push(double p_value);

    const ClosureDecisions& decisions() const noexcept { return decisions_; }
    const std::vector<double>& pvalues() const noexcept { return pvalues_; }
    Index next_index() const noexcept { return static_cast<Index>(pvalues_.size()) + 1; }

private:
    const IntersectionTestFamily* family_;
    IndexSet surviving_; // j < next with P_j > alpha_j^{I_j}
    std::vector<double> pvalues_;
    ClosureDecisions decisions_;
};

// Runs the whole stream through a ShortcutRunner. An empty stream yields
// empty decisions.
ClosureDecisions shortcut_run(const IntersectionTestFamily& family,
                              std::span<const double> pvalues);

} // namespace omt

#endif // OMT_CLOSURE_SHORTCUT_HPP
