#pragma once

#include <optional>
#include <vector>

#include "recoh/states.hpp"

namespace recoh {

/// Qubit coherence: twice the modulus of the off-diagonal element, i.e. the
/// Bloch vector's distance from the z axis and the fringe visibility.
double coherence(const DensityOperator& rho_qubit);

/// Hilbert-Schmidt overlap Tr(x y) of two Hermitian operators. The trace is
/// real for Hermitian inputs; an imaginary part above 1e-8 throws.
double hs_overlap(const DensityOperator& x, const DensityOperator& y);

/// Sub-fidelity Tr(xy) + sqrt(2) sqrt(Tr(xy)^2 - Tr(xyxy)). The radicand is
/// non-negative for PSD pairs; values in [-1e-10, 0) are clamped to 0 and
/// anything lower throws std::runtime_error (the inputs were not PSD).
double sub_fidelity(const DensityOperator& x, const DensityOperator& y);

/// Uhlmann fidelity (Tr sqrt(sqrt(x) y sqrt(x)))^2, clamped to [0, 1].
/// Implemented to exercise the sub_fidelity <= fidelity bound.
double uhlmann_fidelity(const DensityOperator& x, const DensityOperator& y);

/// Coherence of B with no steering: the qubit coherence of Tr_{A,E} |psi><psi|.
double c1(const PureState& psi);

/// 2 Tr|chi_A| -- the maximal average coherence of B over measurements on A.
/// This is C_2 for dA = 2, C_3 for dA = 3, and the generic C_a otherwise.
double ca_trace_norm(const PureState& psi);

/// C_2 through the sub-fidelity of the conditional environment states:
/// 2 sqrt(p0 p1 E(rho0, rho1)), with E alone as the environment (A excluded).
/// Returns 0 when an alternative is degenerate. Requires dA == 2; this route
/// is kept fully independent of ca_trace_norm so the two can cross-validate.
double c2_subfidelity(const PureState& psi);

/// Elementary symmetric polynomials (s1..sn) from power sums (t1..tn) via
/// Newton's identities: i*s_i = sum_{j=1..i} (-1)^(j-1) s_{i-j} t_j, s0 = 1.
std::vector<double> elementary_symmetric_from_power_sums(const std::vector<double>& t);

/// Tr|chi| for a 3x3 matrix through the Newton-identities route: power sums
/// of y = chi^dagger chi give (s1, s2, s3), and Tr|chi| is the largest real
/// root of t^4 - 2 s1 t^2 - 8 sqrt(s3) t + (s1^2 - 4 s2). The full C_3 is
/// twice this value.
double c3_newton(const CMat& chi);

/// Everything the measures module can say about one state. c2_subfid is
/// present only for dA == 2 and c3_newton (the full 2 Tr|chi|) only for
/// dA == 3; hs and subfid are the raw functionals of the conditional
/// environment states and are absent when an alternative is degenerate.
struct MeasureReport {
    double p0 = 0.0;
    double p1 = 0.0;
    double c1 = 0.0;
    double ca_tracenorm = 0.0;
    std::optional<double> c2_subfid;
    std::optional<double> c3_newton;
    std::optional<double> hs;
    std::optional<double> subfid;
};

MeasureReport measure_report(const PureState& psi);

struct MziRow {
    double gamma = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Interferometer sweep over marker overlaps [gamma_start, gamma_end] in
/// steps of gamma_step. With steering, the marker lives on a steering qubit
/// A (env_overlap optionally splits marker information into E) and c2 is the
/// sub-fidelity route; without, the marker sits in E (mzi_state) and c2 is
/// the trace-norm value 2 Tr|chi| of the dA = 1 state.
std::vector<MziRow> mzi_table(double gamma_start, double gamma_end, double gamma_step,
                              double phi, bool steering, double env_overlap = 1.0);

}  // namespace recoh
