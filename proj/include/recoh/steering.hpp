#pragma once

#include <cstdint>
#include <vector>

#include "recoh/states.hpp"

namespace recoh {

/// Rank-1 projective measurement on A: dA orthonormal vectors.
struct MeasurementBasis {
    std::vector<std::vector<cplx>> vectors;
};

struct SteeringResult {
    double best_value = 0.0;
    MeasurementBasis best_basis;
    std::uint64_t evaluations = 0;
    double analytic_bound = 0.0;  // ca_trace_norm of the state
};

/// Haar-random orthonormal basis on a d-dimensional space.
MeasurementBasis random_basis(std::size_t d, std::uint64_t seed);

/// Average coherence of B after measuring A in the given basis:
/// sum_k 2 |<0_B| Tr_A[(|u_k><u_k| (x) 1_B) rho_AB] |1_B>| on
/// rho_AB = Tr_E |psi><psi|. Outcomes with probability below 1e-12
/// contribute 0. Throws on shape mismatch or a non-orthonormal basis
/// (tolerance 1e-9).
double average_coherence(const PureState& psi, const MeasurementBasis& basis);

/// Brute-force oracle for the measurement supremum: evaluates `budget`
/// Haar-random bases (each from a seed derived from (seed, index), so the
/// argmax is order-independent with lowest-index tie-break) and then runs a
/// stochastic local refinement on the incumbent, halving the perturbation
/// step from 0.3 down to 1e-4. Deterministic in (psi, budget, seed).
SteeringResult optimize_steering(const PureState& psi, std::uint64_t budget, std::uint64_t seed);

}  // namespace recoh
