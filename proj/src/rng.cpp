#include "recoh/rng.hpp"

#include <cmath>

namespace recoh {

CMat gaussian_matrix(std::size_t d, GaussianRng& rng) {
    CMat m(d, d);
    for (auto& v : m.a) v = rng.cnormal();
    return m;
}

bool orthonormalize_columns(CMat& m) {
    const std::size_t n = m.rows;
    for (std::size_t k = 0; k < m.cols; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                cplx ov = 0.0;
                for (std::size_t i = 0; i < n; ++i) ov += std::conj(m(i, j)) * m(i, k);
                for (std::size_t i = 0; i < n; ++i) m(i, k) -= ov * m(i, j);
            }
        }
        double n2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) n2 += std::norm(m(i, k));
        if (n2 < 1e-24) return false;
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t i = 0; i < n; ++i) m(i, k) *= inv;
    }
    return true;
}

CMat haar_unitary(std::size_t d, GaussianRng& rng) {
    CMat m = gaussian_matrix(d, rng);
    while (!orthonormalize_columns(m)) m = gaussian_matrix(d, rng);
    return m;
}

}  // namespace recoh
