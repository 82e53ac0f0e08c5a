#include "omt/closure/shortcut.hpp"

namespace omt {

ShortcutRunner::ShortcutRunner(const IntersectionTestFamily& family) : family_(&family) {
    if (!family.has_levels())
        throw std::invalid_argument("ShortcutRunner: family \"" + std::string(family.name()) +
                                    "\" supplies no per-index levels");
}

ShortcutRunner::Step ShortcutRunner::push(double p_value) {
    const Index i = next_index();
    IndexSet active = surviving_;
    active.push_back(i);

    const double alpha = family_->level(active, i, PValuePrefix(pvalues_));
    const bool rejected = p_value <= alpha;

    pvalues_.push_back(p_value);
    if (!rejected) surviving_.push_back(i);
    decisions_.rejected.push_back(rejected);
    decisions_.levels.push_back(alpha);
    decisions_.active_sets.push_back(std::move(active));
    return Step{i, alpha, rejected};
}

ClosureDecisions shortcut_run(const IntersectionTestFamily& family,
                              std::span<const double> pvalues) {
    ShortcutRunner runner(family);
    for (double p : pvalues) runner.push(p);
    return runner.decisions();
}

} // namespace omt
