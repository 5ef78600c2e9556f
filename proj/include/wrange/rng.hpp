#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "wrange/matrix.hpp"

namespace wrange::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Derives an independent engine seed from (master seed, purpose tag, index).
/// Distinct tags or indices give unrelated streams, so adding a new consumer
/// never perturbs existing ones.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
    return splitmix64(splitmix64(seed ^ fnv1a64(tag)) ^ index);
}

/// Deterministic random stream. The engine is std::mt19937_64 (whose output
/// sequence the standard pins down exactly); all variate transforms are done
/// here rather than with std::*_distribution, which is implementation
/// defined, so draws are bit-identical across standard libraries.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0)
        : eng_(derive_seed(seed, tag, index)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Unbiased draw from {0, 1, ..., bound-1}.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % bound;
    }

    /// Standard normal via Box-Muller; the log argument is kept in (0, 1).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = two_pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Standard complex normal: E|z|^2 = 1.
    cplx complex_normal() {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const double re = normal();
        const double im = normal();
        return cplx{re * inv_sqrt2, im * inv_sqrt2};
    }

    /// Haar-uniform unit vector in C^n.
    std::vector<cplx> unit_vector(std::size_t n) {
        std::vector<cplx> v(n);
        double nrm2 = 0.0;
        do {
            nrm2 = 0.0;
            for (auto& z : v) {
                z = complex_normal();
                nrm2 += std::norm(z);
            }
        } while (nrm2 < 1e-280);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (auto& z : v) z *= inv;
        return v;
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wrange::rng
