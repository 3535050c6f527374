#ifndef HESSREG_DETAIL_RNG_HPP
#define HESSREG_DETAIL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hessreg::detail {

// Deterministic draws on top of mt19937_64. The standard distributions are
// implementation-defined, so the mapping from raw bits to values is spelled
// out here; seeded runs reproduce bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). Lemire multiply-shift; n must be > 0.
    std::uint64_t index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    // Standard normal via Box-Muller (cosine branch only).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hessreg::detail

#endif
