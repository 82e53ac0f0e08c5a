#include "omt/closure/checkers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "omt/rng.hpp"

namespace omt {

namespace {

using Mask = std::uint32_t;

IndexSet mask_to_set(Mask mask) {
    IndexSet I;
    for (Index i = 1; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) I.push_back(i);
    return I;
}

void guard(Index n, const char* where) {
    if (n == 0) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
    if (n > kCheckerMaxN)
        throw std::invalid_argument(std::string(where) + ": n = " + std::to_string(n) +
                                    " exceeds the enumeration guard of " +
                                    std::to_string(kCheckerMaxN));
}

// phi_I for every nonempty I subseteq {1..n}, indexed by bitmask.
std::vector<char> evaluate_all(const IntersectionTestFamily& family, Index n,
                               const std::vector<double>& pvalues) {
    if (pvalues.size() < n)
        throw std::invalid_argument("checker grid vector shorter than n");
    const PValuePrefix view{std::span<const double>(pvalues.data(), n)};
    const Mask full = (Mask{1} << n) - 1u;
    std::vector<char> phi(full + 1u, 0);
    for (Mask mask = 1; mask <= full; ++mask)
        phi[mask] = family.evaluate(mask_to_set(mask), view) ? 1 : 0;
    return phi;
}

void store(ViolationReport& report, FamilyViolation violation) {
    ++report.total_found;
    if (report.violations.size() < report.stored_cap)
        report.violations.push_back(std::move(violation));
}

} // namespace

ViolationReport check_predictability(const IntersectionTestFamily& family, Index n,
                                     const PGrid& grid, std::size_t stored_cap) {
    guard(n, "check_predictability");
    ViolationReport report;
    report.stored_cap = stored_cap;
    const Mask full = (Mask{1} << n) - 1u;

    for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto phi = evaluate_all(family, n, grid[g]);
        for (Mask I = 1; I <= full; ++I) {
            if (!phi[I]) continue;
            // Future indices are those strictly above max(I).
            const int top = std::bit_width(I); // == max(I)
            const Mask future = full & ~((Mask{1} << top) - 1u);
            for (Mask J = future; J != 0; J = (J - 1) & future) {
                if (!phi[I | J])
                    store(report, FamilyViolation{mask_to_set(I), mask_to_set(I | J), g,
                                                  std::vector<double>(grid[g].begin(),
                                                                      grid[g].begin() + n)});
            }
        }
    }
    return report;
}

ViolationReport check_consonance(const IntersectionTestFamily& family, Index n,
                                 const PGrid& grid, std::size_t stored_cap) {
    guard(n, "check_consonance");
    ViolationReport report;
    report.stored_cap = stored_cap;
    const Mask full = (Mask{1} << n) - 1u;

    for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto phi = evaluate_all(family, n, grid[g]);
        for (Mask I = 1; I <= full; ++I) {
            if (!phi[I]) continue;
            // i in I witnesses consonance iff no J subseteq I with i in J
            // has phi_J = 0; collect the members ruled out by some such J.
            Mask ruled_out = 0;
            for (Mask J = I; J != 0; J = (J - 1) & I)
                if (!phi[J]) ruled_out |= J;
            if ((I & ~ruled_out) == 0)
                store(report, FamilyViolation{mask_to_set(I), {}, g,
                                              std::vector<double>(grid[g].begin(),
                                                                  grid[g].begin() + n)});
        }
    }
    return report;
}

PGrid boundary_adversarial_grid(std::span<const double> critical_levels, Index n,
                                std::size_t count, std::uint64_t seed) {
    guard(n, "boundary_adversarial_grid");
    std::vector<double> pool{0.0, 1.0};
    for (double level : critical_levels) {
        if (!(level >= 0.0 && level <= 1.0)) continue;
        pool.push_back(level);
        pool.push_back(std::nextafter(level, 0.0));
        pool.push_back(std::nextafter(level, 1.0));
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    CounterRng rng(seed, 0, CounterRng::Role::grid);
    PGrid grid(count);
    for (auto& vec : grid) {
        vec.resize(n);
        for (Index i = 0; i < n; ++i) {
            // Mostly boundary coordinates, some uniform noise.
            vec[i] = rng.bernoulli(0.7) ? pool[rng.below(pool.size())] : rng.uniform01();
        }
    }
    return grid;
}

} // namespace omt
