#ifndef OMT_CLOSURE_BRUTE_FORCE_HPP
#define OMT_CLOSURE_BRUTE_FORCE_HPP

#include "omt/closure/decisions.hpp"
#include "omt/closure/family.hpp"

namespace omt {

// Largest prefix length the exhaustive closed procedure will enumerate
// (2^n - 1 intersection tests).
inline constexpr Index kBruteForceMaxN = 20;

// The closed procedure by exhaustive enumeration: H_i is rejected iff
// phi_I = 1 for every nonempty I subseteq {1..n} with i in I.
//
// This is the oracle the short-cut is checked against. Restricting the
// enumeration to the observed prefix gives the full closed decision only for
// predictable families; callers asserting nothing get prefix semantics.
ClosureDecisions brute_force_closed(const IntersectionTestFamily& family,
                                    std::span<const double> pvalues);

} // namespace omt

#endif // OMT_CLOSURE_BRUTE_FORCE_HPP
