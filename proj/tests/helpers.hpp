#pragma once

#include <cstdint>

#include "recoh/matrix.hpp"
#include "recoh/rng.hpp"
#include "recoh/states.hpp"

namespace recoh::test {

inline CMat random_complex(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    GaussianRng rng(seed);
    CMat m(rows, cols);
    for (auto& v : m.a) v = rng.cnormal();
    return m;
}

inline CMat random_hermitian(std::size_t n, std::uint64_t seed) {
    const CMat g = random_complex(n, n, seed);
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

inline CMat random_psd(std::size_t n, std::uint64_t seed) {
    const CMat g = random_complex(n, n, seed);
    return adjoint(g) * g;
}

// Random mixed state of dimension d as the reduction of a Haar pure state
// on d x m; m = 1 gives a pure state. Independent of the states module.
inline DensityOperator random_mixed_state(std::size_t d, std::size_t m, std::uint64_t seed) {
    GaussianRng rng(seed);
    std::vector<cplx> psi(d * m);
    double n2 = 0.0;
    for (auto& v : psi) {
        v = rng.cnormal();
        n2 += std::norm(v);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : psi) v *= inv;
    CMat rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < m; ++k) acc += psi[i * m + k] * std::conj(psi[j * m + k]);
            rho(i, j) = acc;
        }
    return DensityOperator{std::move(rho), {d}};
}

inline PureState bell_state_ab() {
    const double s = 1.0 / std::sqrt(2.0);
    return from_amplitudes(TripartiteDims{2, 2, 1}, {s, 0.0, 0.0, s});
}

inline PureState ghz_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return from_amplitudes(TripartiteDims{2, 2, 2}, {s, 0, 0, 0, 0, 0, 0, s});
}

}  // namespace recoh::test
