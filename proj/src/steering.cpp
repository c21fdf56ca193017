#include "recoh/steering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "recoh/measures.hpp"
#include "recoh/rng.hpp"

namespace recoh {

namespace {

// sum_k 2 |<0_B| Tr_A[(|u_k><u_k| (x) 1_B) rho_AB] |1_B>| for an already
// orthonormal basis given as matrix columns. Outcome contributions are
// summed in sorted order, which makes the value bitwise invariant under
// permutations of the basis vectors.
double evaluate_basis(const CMat& rho_ab, const CMat& basis) {
    const std::size_t dA = basis.rows;
    std::vector<double> contrib;
    contrib.reserve(dA);
    for (std::size_t k = 0; k < dA; ++k) {
        cplx m01 = 0.0;
        double pk = 0.0;
        for (std::size_t i = 0; i < dA; ++i) {
            const cplx ui = basis(i, k);
            for (std::size_t l = 0; l < dA; ++l) {
                const cplx w = ui * std::conj(basis(l, k));
                m01 += w * rho_ab(l * 2 + 0, i * 2 + 1);
                pk += (w * (rho_ab(l * 2 + 0, i * 2 + 0) + rho_ab(l * 2 + 1, i * 2 + 1))).real();
            }
        }
        contrib.push_back(pk >= 1e-12 ? 2.0 * std::abs(m01) : 0.0);
    }
    std::sort(contrib.begin(), contrib.end());
    double total = 0.0;
    for (double c : contrib) total += c;
    return total;
}

CMat basis_to_matrix(const MeasurementBasis& basis, std::size_t dA) {
    CMat m(dA, dA);
    for (std::size_t k = 0; k < dA; ++k)
        for (std::size_t i = 0; i < dA; ++i) m(i, k) = basis.vectors[k][i];
    return m;
}

MeasurementBasis matrix_to_basis(const CMat& m) {
    MeasurementBasis b;
    b.vectors.resize(m.cols);
    for (std::size_t k = 0; k < m.cols; ++k) {
        b.vectors[k].resize(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) b.vectors[k][i] = m(i, k);
    }
    return b;
}

}  // namespace

MeasurementBasis random_basis(std::size_t d, std::uint64_t seed) {
    GaussianRng rng(seed);
    return matrix_to_basis(haar_unitary(d, rng));
}

double average_coherence(const PureState& psi, const MeasurementBasis& basis) {
    const std::size_t dA = psi.dims.dA;
    if (basis.vectors.size() != dA)
        throw std::invalid_argument("average_coherence: basis size does not match dim(A)");
    for (const auto& u : basis.vectors)
        if (u.size() != dA)
            throw std::invalid_argument("average_coherence: basis vector length mismatch");
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dA; ++j) {
            cplx ov = 0.0;
            for (std::size_t k = 0; k < dA; ++k)
                ov += std::conj(basis.vectors[i][k]) * basis.vectors[j][k];
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(ov - cplx{target}) > 1e-9)
                throw std::invalid_argument("average_coherence: basis not orthonormal");
        }
    const DensityOperator rho_ab = reduced_density(psi, {0, 1});
    return evaluate_basis(rho_ab.matrix, basis_to_matrix(basis, dA));
}

SteeringResult optimize_steering(const PureState& psi, std::uint64_t budget, std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("optimize_steering: budget must be >= 1");
    const std::size_t dA = psi.dims.dA;
    const DensityOperator rho_ab = reduced_density(psi, {0, 1});

    SteeringResult res;
    res.analytic_bound = ca_trace_norm(psi);

    CMat best(dA, dA);
    double best_value = -1.0;

    // Candidate phase: per-index seeds, so the argmax does not depend on
    // evaluation order (lowest index wins ties via strict improvement).
    for (std::uint64_t i = 0; i < budget; ++i) {
        GaussianRng rng(derive_seed(seed, i));
        const CMat cand = haar_unitary(dA, rng);
        const double v = evaluate_basis(rho_ab.matrix, cand);
        ++res.evaluations;
        if (v > best_value) {
            best_value = v;
            best = cand;
        }
    }

    // Local refinement: perturb all basis vectors, re-orthonormalize, keep
    // strict improvements. Step halves from 0.3 down to 1e-4.
    GaussianRng refine_rng(derive_seed(seed, 0x5245464E45ULL));  // refinement stream
    for (double step = 0.3; step >= 1e-4; step *= 0.5) {
        for (int trial = 0; trial < 25; ++trial) {
            CMat cand = best;
            for (auto& v : cand.a) v += step * refine_rng.cnormal();
            if (!orthonormalize_columns(cand)) continue;
            const double v = evaluate_basis(rho_ab.matrix, cand);
            ++res.evaluations;
            if (v > best_value) {
                best_value = v;
                best = cand;
            }
        }
    }

    res.best_value = best_value;
    res.best_basis = matrix_to_basis(best);
    return res;
}

}  // namespace recoh
