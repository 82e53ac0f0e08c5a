#include "omt/closure/brute_force.hpp"

namespace omt {

namespace {

IndexSet mask_to_set(std::uint32_t mask) {
    IndexSet I;
    for (Index i = 1; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) I.push_back(i);
    return I;
}

} // namespace

ClosureDecisions brute_force_closed(const IntersectionTestFamily& family,
                                    std::span<const double> pvalues) {
    const std::size_t n = pvalues.size();
    if (n > kBruteForceMaxN)
        throw std::invalid_argument("brute_force_closed: n = " + std::to_string(n) +
                                    " exceeds the enumeration guard of " +
                                    std::to_string(kBruteForceMaxN));
    ClosureDecisions out;
    out.rejected.assign(n, true);
    if (n == 0) {
        out.rejected.clear();
        return out;
    }

    const PValuePrefix view(pvalues);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (family.evaluate(mask_to_set(mask), view)) continue;
        // phi_I = 0: every member of I keeps its H_i alive.
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) out.rejected[k] = false;
    }
    return out;
}

} // namespace omt
