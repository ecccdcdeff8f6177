#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nnbo {

// All randomness in a campaign flows from one base seed. Sub-seeds are
// derived as base ^ fnv1a64(tag), with tags like "init", "fit/12/ugf" or
// "acq/12", so independent consumers never share a stream.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    return base ^ fnv1a64(tag);
}

// mt19937_64 with self-owned double conversion. std::uniform_real_distribution
// is implementation-defined, so we map raw 64-bit draws ourselves to keep
// streams reproducible under a fixed toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // standard normal via Box-Muller; consumes two uniforms per call
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift rejection-free mapping; bias < 2^-64, irrelevant here
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace nnbo
