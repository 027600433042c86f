#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace orbitlab {

// Deterministic random source. All sampling in the library goes through this
// wrapper so that a seed pins the whole stream: uniforms are built from raw
// 53-bit draws and normals from an explicit Box-Muller transform, keeping the
// output independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Standard exponential via inversion.
    double exponential() {
        double u = 0.0;
        do {
            u = uniform01();
        } while (u <= 0.0);
        return -std::log(u);
    }

    // Random sign in {-1.0, +1.0}.
    double sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

    // Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace orbitlab
