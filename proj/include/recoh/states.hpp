#pragma once

#include <cstdint>
#include <vector>

#include "recoh/matrix.hpp"

namespace recoh {

/// Dimensions of the A (x) B (x) E factorization. B is always a qubit: its
/// two basis states are the "alternatives" whose coherence we track. A is
/// the steering system, E the environment. Trivial factors (dimension 1)
/// are legal, so a bipartite B-E state is {1, 2, dE}.
///
/// Amplitude index convention, shared by every module and the state file
/// format: idx = (iA * 2 + iB) * dE + iE.
struct TripartiteDims {
    std::size_t dA = 1;
    std::size_t dB = 2;
    std::size_t dE = 1;

    std::size_t total() const { return dA * dB * dE; }
};

/// Throws std::invalid_argument unless dB == 2, all factors >= 1 and the
/// total dimension is at most 4096.
void validate_dims(const TripartiteDims& dims);

struct PureState {
    TripartiteDims dims;
    std::vector<cplx> amp;  // unit norm, indexed (iA*2 + iB)*dE + iE
};

struct DensityOperator {
    CMat matrix;                            // Hermitian, unit trace, PSD
    std::vector<std::size_t> subsystem_dims;  // product equals matrix dimension
};

/// Probabilities of B's alternatives and the normalized environment states
/// conditional on them. If an alternative has probability below 1e-12 its
/// conditional state is undefined; the corresponding degenerate flag is set
/// and rho_b is left as a zero matrix. Measures treat that limit as 0.
struct ConditionalEnvPair {
    double p0 = 0.0;
    double p1 = 0.0;
    DensityOperator rho0;
    DensityOperator rho1;
    bool degenerate0 = false;
    bool degenerate1 = false;

    bool degenerate() const { return degenerate0 || degenerate1; }
};

/// The off-diagonal block <0_B| rho_AB |1_B>, a dA x dA matrix. Twice its
/// trace norm is the steering optimum C_a; for a valid state that value
/// never exceeds 1.
struct CrossOperator {
    CMat matrix;
};

/// Build a state from raw amplitudes; the result is renormalized exactly.
/// Throws if the length does not match dims, the norm deviates from 1 by
/// more than 1e-6, or the norm is below 1e-12.
PureState from_amplitudes(const TripartiteDims& dims, std::vector<cplx> amps);

/// Haar-random pure state: i.i.d. complex standard normal amplitudes,
/// normalized. Deterministic in (dims, seed).
PureState haar_sample(const TripartiteDims& dims, std::uint64_t seed);

/// |psi><psi| with subsystem_dims (dA, 2, dE).
DensityOperator density(const PureState& psi);

/// Reduced operator on the kept factors. `keep` must be non-empty strictly
/// increasing valid indices into subsystem_dims; the kept order is
/// preserved. Trace, hermiticity and positivity carry over.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::size_t>& keep);

/// Partial trace of |psi><psi| computed directly from the amplitudes,
/// without forming the global density matrix. Agrees with
/// partial_trace(density(psi), keep) entrywise.
DensityOperator reduced_density(const PureState& psi, const std::vector<std::size_t>& keep);

ConditionalEnvPair conditional_env_states(const PureState& psi);

/// rho_ab must carry subsystem_dims (dA, 2).
CrossOperator cross_operator(const DensityOperator& rho_ab);

/// Interferometer state with a which-path marker in the environment:
/// dims (1,2,2), (|0_B>|m0> + e^{i phi} |1_B>|m1>)/sqrt(2) with
/// <m0|m1> = gamma (m0 = |0>, m1 = gamma|0> + sqrt(1-gamma^2)|1>).
PureState mzi_state(double gamma, double phi);

/// Same interferometer with the marker purified into a steering qubit A and,
/// optionally, a second marker of overlap env_overlap kept in E:
/// (|a0>_A |0_B> |e0>_E + e^{i phi} |a1>_A |1_B> |e1>_E)/sqrt(2) with
/// <a0|a1> = gamma and <e0|e1> = env_overlap. env_overlap == 1 gives the
/// dims (2,2,1) eraser state.
PureState mzi_steering_state(double gamma, double phi, double env_overlap = 1.0);

/// Checks the DensityOperator invariants (shape, hermiticity 1e-10, trace
/// within 1e-9 of 1 and, when check_psd, eigenvalues >= -1e-10); throws
/// std::invalid_argument on violation.
void validate_density(const DensityOperator& rho, bool check_psd = false);

}  // namespace recoh
