#pragma once

#include <cstdint>
#include <random>

namespace hamqaoa {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// One RNG stream per (master seed, stream index) pair. Streams with distinct
// indices are statistically independent, and every draw is derived from raw
// 64-bit engine output so sequences are identical across standard libraries.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0) {
        std::uint64_t s = master_seed;
        detail::splitmix64(s);
        s ^= 0xd1342543de82ef95ULL * (stream_index + 1);
        eng_.seed(detail::splitmix64(s));
    }

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound) by rejection, bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = raw();
        } while (x >= limit);
        return x % bound;
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (raw() & 1ULL) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace hamqaoa
