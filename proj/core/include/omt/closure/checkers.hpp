#ifndef OMT_CLOSURE_CHECKERS_HPP
#define OMT_CLOSURE_CHECKERS_HPP

#include <cstdint>

#include "omt/closure/family.hpp"

namespace omt {

// Enumeration guard for the checkers (they touch pairs of subsets).
inline constexpr Index kCheckerMaxN = 12;

// One falsifying instance found on the grid. `superset` is filled by the
// predictability checker (phi_I = 1 but phi_K = 0 for K = I + future
// indices); the consonance checker leaves it empty.
struct FamilyViolation {
    IndexSet set;         // I
    IndexSet superset;    // K (predictability only)
    std::size_t grid_index = 0;
    std::vector<double> pvalues;
};

// Checkers are falsifiers, not provers: an empty report means no violation
// was found on the supplied grid.
struct ViolationReport {
    std::vector<FamilyViolation> violations; // stored up to `stored_cap`
    std::uint64_t total_found = 0;
    std::size_t stored_cap = 0;

    bool ok() const noexcept { return total_found == 0; }
};

using PGrid = std::vector<std::vector<double>>;

// Searches the grid for (I, K = I union J) with I subseteq {1..i},
// J subseteq {i+1..n}, phi_I = 1 and phi_K = 0.
ViolationReport check_predictability(const IntersectionTestFamily& family, Index n,
                                     const PGrid& grid, std::size_t stored_cap = 64);

// Searches the grid for I with phi_I = 1 but no i in I such that phi_J = 1
// for every J subseteq I containing i.
ViolationReport check_consonance(const IntersectionTestFamily& family, Index n,
                                 const PGrid& grid, std::size_t stored_cap = 64);

// Grid of p-vectors biased toward decision boundaries: coordinates are drawn
// from the supplied critical levels nudged by one ulp in both directions,
// the endpoints 0 and 1, and uniform noise. Deterministic in `seed`.
PGrid boundary_adversarial_grid(std::span<const double> critical_levels, Index n,
                                std::size_t count, std::uint64_t seed);

} // namespace omt

#endif // OMT_CLOSURE_CHECKERS_HPP
