#ifndef OMT_RNG_HPP
#define OMT_RNG_HPP

#include <cstdint>

namespace omt {

// Counter-based splittable generator (SplitMix64 output function over an
// affine counter). A stream is keyed by (seed, trial, role); draws depend
// only on the key and the number of values already taken, so trials are
// reproducible independent of execution order.
class CounterRng {
public:
    enum class Role : std::uint64_t {
        assignment = 1, // Bernoulli(pi_A) non-null assignment
        noise = 2,      // batch normal draws
        grid = 3,       // checker grid construction
        stream = 4,     // generic test streams
    };

    CounterRng(std::uint64_t seed, std::uint64_t trial, Role role)
        : key_(derive(derive(mix(seed), trial), static_cast<std::uint64_t>(role))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

    // Uniform on the open interval (0,1); never returns an endpoint, so it
    // is safe to feed through a normal quantile.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z += kGolden;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive(std::uint64_t key, std::uint64_t word) {
        return mix(key ^ (word + kGolden));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace omt

#endif // OMT_RNG_HPP
