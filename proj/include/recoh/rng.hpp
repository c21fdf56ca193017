#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>
#include <random>

#include "recoh/matrix.hpp"

namespace recoh {

/// splitmix64 finalizer; used to derive independent per-sample seeds so that
/// sampling order (and thread count) never changes results.
inline std::uint64_t split_mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return split_mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Seeded Gaussian source. Box-Muller on top of mt19937_64, so the stream
/// depends only on the seed, not on the standard library's distribution
/// implementation.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cnormal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// d x d matrix of i.i.d. standard complex Gaussians.
CMat gaussian_matrix(std::size_t d, GaussianRng& rng);

/// Haar-distributed unitary: Gram-Schmidt applied to a Gaussian matrix.
CMat haar_unitary(std::size_t d, GaussianRng& rng);

/// Orthonormalize the columns of m in place (twice-iterated Gram-Schmidt).
/// Returns false if a column collapses below 1e-12 and cannot be normalized.
bool orthonormalize_columns(CMat& m);

}  // namespace recoh
