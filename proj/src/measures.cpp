#include "recoh/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace recoh {

namespace {

void require_same_shape(const DensityOperator& x, const DensityOperator& y, const char* who) {
    if (!x.matrix.square() || !y.matrix.square() || x.matrix.rows != y.matrix.rows)
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

void require_hermitian(const DensityOperator& x, const char* who) {
    if (hermiticity_defect(x.matrix) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": input not hermitian");
}

// Tr(x y) for explicit matrices; the imaginary part must vanish. The (i,k)
// and (k,i) terms are grouped so that swapping the arguments performs the
// same additions in the same order: the result is bitwise symmetric in
// (x, y) for exactly hermitian inputs.
double real_trace_product(const CMat& x, const CMat& y, const char* who) {
    const std::size_t n = x.rows;
    cplx t = 0.0;
    for (std::size_t i = 0; i < n; ++i) t += x(i, i) * y(i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) t += x(i, k) * y(k, i) + x(k, i) * y(i, k);
    if (std::abs(t.imag()) > 1e-8)
        throw std::runtime_error(std::string(who) + ": trace not real");
    return t.real();
}

}  // namespace

double coherence(const DensityOperator& rho_qubit) {
    if (!rho_qubit.matrix.square() || rho_qubit.matrix.rows != 2)
        throw std::invalid_argument("coherence: expected a 2x2 density operator");
    return 2.0 * std::abs(rho_qubit.matrix(0, 1));
}

double hs_overlap(const DensityOperator& x, const DensityOperator& y) {
    require_same_shape(x, y, "hs_overlap");
    require_hermitian(x, "hs_overlap");
    require_hermitian(y, "hs_overlap");
    return real_trace_product(x.matrix, y.matrix, "hs_overlap");
}

double sub_fidelity(const DensityOperator& x, const DensityOperator& y) {
    require_same_shape(x, y, "sub_fidelity");
    require_hermitian(x, "sub_fidelity");
    require_hermitian(y, "sub_fidelity");
    const double txy = real_trace_product(x.matrix, y.matrix, "sub_fidelity");
    const CMat z = x.matrix * y.matrix;
    const double txyxy = real_trace_product(z, z, "sub_fidelity");
    double radicand = txy * txy - txyxy;
    if (radicand < -1e-10)
        throw std::runtime_error("sub_fidelity: radicand below -1e-10, inputs are not PSD");
    // The radicand vanishes identically for rank-1 products (pure inputs);
    // what survives there is cancellation noise, so flush it to zero.
    if (radicand <= 1e-13 * std::max(1.0, txy * txy)) radicand = 0.0;
    return txy + std::sqrt(2.0) * std::sqrt(radicand);
}

double uhlmann_fidelity(const DensityOperator& x, const DensityOperator& y) {
    require_same_shape(x, y, "uhlmann_fidelity");
    const CMat sx = psd_sqrt(x.matrix);
    const CMat inner = sx * y.matrix * sx;
    const auto vals = hermitian_eigenvalues(inner);
    // sqrt(x) y sqrt(x) has exact zeros whenever x or y is rank deficient;
    // flush the eigensolver's noise band so they do not leak into the sum.
    const double floor = 1e-13 * std::max(1.0, vals.empty() ? 0.0 : vals.back());
    double sum = 0.0;
    for (double lam : vals)
        if (lam > floor) sum += std::sqrt(lam);
    const double f = sum * sum;
    return std::min(std::max(f, 0.0), 1.0);
}

double c1(const PureState& psi) {
    const DensityOperator rho_b = reduced_density(psi, {1});
    return 2.0 * std::abs(rho_b.matrix(0, 1));
}

double ca_trace_norm(const PureState& psi) {
    const DensityOperator rho_ab = reduced_density(psi, {0, 1});
    const CrossOperator chi = cross_operator(rho_ab);
    return 2.0 * trace_norm(chi.matrix);
}

double c2_subfidelity(const PureState& psi) {
    if (psi.dims.dA != 2)
        throw std::invalid_argument("c2_subfidelity: requires dim(A) == 2");
    const ConditionalEnvPair pair = conditional_env_states(psi);
    if (pair.degenerate()) return 0.0;
    const double e = sub_fidelity(pair.rho0, pair.rho1);
    return 2.0 * std::sqrt(std::max(pair.p0 * pair.p1 * e, 0.0));
}

std::vector<double> elementary_symmetric_from_power_sums(const std::vector<double>& t) {
    if (t.empty())
        throw std::invalid_argument("elementary_symmetric_from_power_sums: empty input");
    const std::size_t n = t.size();
    std::vector<double> s(n + 1, 0.0);
    s[0] = 1.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double acc = 0.0;
        double sign = 1.0;
        for (std::size_t j = 1; j <= i; ++j) {
            acc += sign * s[i - j] * t[j - 1];
            sign = -sign;
        }
        s[i] = acc / static_cast<double>(i);
    }
    return {s.begin() + 1, s.end()};
}

double c3_newton(const CMat& chi) {
    if (!chi.square() || chi.rows != 3)
        throw std::invalid_argument("c3_newton: expected a 3x3 matrix");
    const CMat y = adjoint(chi) * chi;
    const auto tc = power_sums(y, 3);
    std::vector<double> t(3);
    for (int j = 0; j < 3; ++j) t[j] = tc[j].real();
    auto s = elementary_symmetric_from_power_sums(t);
    // y is PSD, so s2, s3 >= 0 up to rounding
    s[1] = std::max(s[1], 0.0);
    s[2] = std::max(s[2], 0.0);
    // Tr|chi| = sqrt(a)+sqrt(b)+sqrt(c) solves the double-squared equation
    // t^4 - 2 s1 t^2 - 8 sqrt(s3) t + (s1^2 - 4 s2) = 0 as its largest root.
    const auto roots =
        real_quartic_roots(1.0, 0.0, -2.0 * s[0], -8.0 * std::sqrt(s[2]), s[0] * s[0] - 4.0 * s[1]);
    if (roots.empty())
        throw std::runtime_error("c3_newton: numerical breakdown, quartic has no real root");
    return std::max(roots.back(), 0.0);
}

MeasureReport measure_report(const PureState& psi) {
    MeasureReport r;
    const ConditionalEnvPair pair = conditional_env_states(psi);
    r.p0 = pair.p0;
    r.p1 = pair.p1;
    r.c1 = c1(psi);
    r.ca_tracenorm = ca_trace_norm(psi);
    if (!pair.degenerate()) {
        r.hs = hs_overlap(pair.rho0, pair.rho1);
        r.subfid = sub_fidelity(pair.rho0, pair.rho1);
    }
    if (psi.dims.dA == 2) r.c2_subfid = c2_subfidelity(psi);
    if (psi.dims.dA == 3) {
        const CrossOperator chi = cross_operator(reduced_density(psi, {0, 1}));
        r.c3_newton = 2.0 * c3_newton(chi.matrix);
    }
    return r;
}

std::vector<MziRow> mzi_table(double gamma_start, double gamma_end, double gamma_step,
                              double phi, bool steering, double env_overlap) {
    if (!(gamma_step > 0.0) || gamma_start > gamma_end)
        throw std::invalid_argument("mzi_table: bad gamma grid");
    std::vector<MziRow> rows;
    for (int i = 0;; ++i) {
        const double gamma = gamma_start + i * gamma_step;
        if (gamma > gamma_end + 1e-12) break;
        const double g = std::min(gamma, 1.0);
        MziRow row;
        row.gamma = g;
        if (steering) {
            const PureState psi = mzi_steering_state(g, phi, env_overlap);
            row.c1 = c1(psi);
            row.c2 = c2_subfidelity(psi);
        } else {
            const PureState psi = mzi_state(g, phi);
            row.c1 = c1(psi);
            row.c2 = ca_trace_norm(psi);  // marker inaccessible: only the trivial A remains
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace recoh
