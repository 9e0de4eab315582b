#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

// Deterministic randomness: SplitMix64 expands seeds, xoshiro256** generates.
// Substreams are derived by hashing (seed, stream_index), so trial k of a
// suite sees the same draws whether trials run serially or concurrently.

namespace ncm::rng {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (own implementation: std distributions
    // are not reproducible across standard libraries)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // complex standard normal: N(0,1/2) + i N(0,1/2), unit variance overall
    std::complex<double> cnormal() {
        const double inv_sqrt2 = 0.70710678118654752440;
        const double re = normal() * inv_sqrt2;
        const double im = normal() * inv_sqrt2;
        return {re, im};
    }

    // integer in [0, bound) by rejection-free multiply-shift (bound <= 2^32)
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4]{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Substream derivation: mixes the stream index into the seed before state
// expansion, decorrelating trials drawn from the same master seed.
inline Xoshiro256 substream(uint64_t seed, uint64_t stream) {
    uint64_t sm = seed;
    const uint64_t a = splitmix64(sm);
    sm = stream ^ 0xA5A5A5A55A5A5A5AULL;
    const uint64_t b = splitmix64(sm);
    return Xoshiro256(a ^ (b * 0xD1B54A32D192ED03ULL));
}

}  // namespace ncm::rng
