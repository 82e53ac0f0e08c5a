#ifndef OMT_CLOSURE_DECISIONS_HPP
#define OMT_CLOSURE_DECISIONS_HPP

#include "omt/types.hpp"

namespace omt {

// Per-index rejections produced by a closed procedure. The short-cut
// additionally records, for every step i, the tested set I_i and the level
// alpha_i^{I_i}; the brute-force route leaves those empty.
//
// Decisions are monotone in evidence: appending further stream indices never
// changes an earlier entry.
struct ClosureDecisions {
    std::vector<bool> rejected;            // rejected[k] decides H_{k+1}
    std::vector<IndexSet> active_sets;     // short-cut only: I_i per step
    std::vector<double> levels;            // short-cut only: alpha_i^{I_i}

    std::size_t size() const noexcept { return rejected.size(); }

    IndexSet rejection_set() const {
        IndexSet out;
        for (std::size_t k = 0; k < rejected.size(); ++k)
            if (rejected[k]) out.push_back(static_cast<Index>(k) + 1);
        return out;
    }
};

} // namespace omt

#endif // OMT_CLOSURE_DECISIONS_HPP
