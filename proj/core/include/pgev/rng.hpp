#pragma once

#include <cmath>
#include <cstdint>

namespace pgev {

// Deterministic random source used by every randomized routine in the library.
//
// Algorithm: PCG64 XSL-RR (O'Neill's permuted congruential generator family,
// 128-bit LCG state, 64-bit xorshift-low / random-rotate output), seeded with
// the reference initialization sequence on a fixed stream. Uniform doubles are
// built as (k + 0.5) * 2^-53 from the top 53 bits of one output word, so they
// lie strictly inside (0,1). Normal deviates use Box-Muller with the second
// value of each pair cached.
//
// Instances are cheap value types; each instance must be owned by a single
// thread (no internal locking). The same seed always reproduces the same
// stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        state_ = 0;
        inc_ = (static_cast<u128>(0xda3e39cb94b95bdbULL) << 64 |
                0xabcd1234fedc5678ULL) |
               1;
        step();
        state_ += static_cast<u128>(seed);
        step();
    }

    std::uint64_t next_u64() {
        const u128 old = state_;
        step();
        const std::uint64_t xored =
            static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
        const unsigned rot = static_cast<unsigned>(old >> 122);
        return (xored >> rot) | (xored << ((64u - rot) & 63u));
    }

    // Uniform on the open interval (0,1).
    double uniform() {
        const std::uint64_t k = next_u64() >> 11;
        return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Standard normal via Box-Muller (pairs; second draw cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

  private:
    using u128 = unsigned __int128;

    void step() { state_ = state_ * kMult + inc_; }

    static constexpr u128 kMult =
        (static_cast<u128>(2549297995355413924ULL) << 64) | 4865540595714422341ULL;

    u128 state_ = 0;
    u128 inc_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace pgev
