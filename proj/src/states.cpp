#include "recoh/states.hpp"

#include <cmath>
#include <stdexcept>

#include "recoh/rng.hpp"

namespace recoh {

void validate_dims(const TripartiteDims& dims) {
    if (dims.dB != 2) throw std::invalid_argument("dims: dB must be exactly 2");
    if (dims.dA < 1 || dims.dE < 1) throw std::invalid_argument("dims: factors must be >= 1");
    if (dims.total() > 4096) throw std::invalid_argument("dims: total dimension above 4096");
}

PureState from_amplitudes(const TripartiteDims& dims, std::vector<cplx> amps) {
    validate_dims(dims);
    if (amps.size() != dims.total())
        throw std::invalid_argument("from_amplitudes: amplitude count does not match dims");
    double n2 = 0.0;
    for (const auto& v : amps) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("from_amplitudes: non-finite amplitude");
        n2 += std::norm(v);
    }
    const double n = std::sqrt(n2);
    if (n < 1e-12) throw std::invalid_argument("from_amplitudes: not normalizable, norm below 1e-12");
    if (std::abs(n - 1.0) > 1e-6)
        throw std::invalid_argument("from_amplitudes: norm deviates from 1 by more than 1e-6");
    for (auto& v : amps) v /= n;
    return PureState{dims, std::move(amps)};
}

PureState haar_sample(const TripartiteDims& dims, std::uint64_t seed) {
    validate_dims(dims);
    GaussianRng rng(seed);
    const std::size_t n = dims.total();
    std::vector<cplx> amps(n);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& v : amps) {
            v = rng.cnormal();
            n2 += std::norm(v);
        }
    } while (n2 < 1e-280);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : amps) v *= inv;
    return PureState{dims, std::move(amps)};
}

DensityOperator density(const PureState& psi) {
    const std::size_t n = psi.amp.size();
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
    return DensityOperator{std::move(m), {psi.dims.dA, psi.dims.dB, psi.dims.dE}};
}

namespace {

// Linear offsets contributed by the kept / traced factor groups; a full
// index is always baseK[ki] + baseT[ti].
struct SplitBases {
    std::vector<std::size_t> kept;    // size = product of kept dims
    std::vector<std::size_t> traced;  // size = product of traced dims
    std::vector<std::size_t> kept_dims;
};

SplitBases split_bases(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dims.size())
            throw std::invalid_argument("partial_trace: bad subsystem index");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw std::invalid_argument("partial_trace: keep indices must be strictly increasing");
    }

    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t f = dims.size(); f-- > 1;) stride[f - 1] = stride[f] * dims[f];

    std::vector<bool> is_kept(dims.size(), false);
    for (auto k : keep) is_kept[k] = true;

    SplitBases sb;
    sb.kept = {0};
    sb.traced = {0};
    for (std::size_t f = 0; f < dims.size(); ++f) {
        auto& group = is_kept[f] ? sb.kept : sb.traced;
        std::vector<std::size_t> next;
        next.reserve(group.size() * dims[f]);
        for (auto base : group)
            for (std::size_t d = 0; d < dims[f]; ++d) next.push_back(base + d * stride[f]);
        group = std::move(next);
        if (is_kept[f]) sb.kept_dims.push_back(dims[f]);
    }
    return sb;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::size_t>& keep) {
    const SplitBases sb = split_bases(rho.subsystem_dims, keep);
    const std::size_t dk = sb.kept.size();
    CMat out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx acc = 0.0;
            for (auto t : sb.traced) acc += rho.matrix(sb.kept[i] + t, sb.kept[j] + t);
            out(i, j) = acc;
        }
    return DensityOperator{std::move(out), sb.kept_dims};
}

DensityOperator reduced_density(const PureState& psi, const std::vector<std::size_t>& keep) {
    const std::vector<std::size_t> dims{psi.dims.dA, psi.dims.dB, psi.dims.dE};
    const SplitBases sb = split_bases(dims, keep);
    const std::size_t dk = sb.kept.size();
    CMat out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            cplx acc = 0.0;
            for (auto t : sb.traced)
                acc += psi.amp[sb.kept[i] + t] * std::conj(psi.amp[sb.kept[j] + t]);
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
    return DensityOperator{std::move(out), sb.kept_dims};
}

ConditionalEnvPair conditional_env_states(const PureState& psi) {
    const std::size_t dA = psi.dims.dA, dE = psi.dims.dE;
    ConditionalEnvPair pair;
    double p[2] = {0.0, 0.0};
    CMat rho[2] = {CMat(dE, dE), CMat(dE, dE)};
    for (int bb = 0; bb < 2; ++bb) {
        for (std::size_t ia = 0; ia < dA; ++ia) {
            const std::size_t base = (ia * 2 + static_cast<std::size_t>(bb)) * dE;
            for (std::size_t ie = 0; ie < dE; ++ie) {
                const cplx vi = psi.amp[base + ie];
                p[bb] += std::norm(vi);
                for (std::size_t je = 0; je < dE; ++je)
                    rho[bb](ie, je) += vi * std::conj(psi.amp[base + je]);
            }
        }
    }
    pair.p0 = p[0];
    pair.p1 = p[1];
    pair.degenerate0 = p[0] < 1e-12;
    pair.degenerate1 = p[1] < 1e-12;
    for (int bb = 0; bb < 2; ++bb) {
        if (!(bb == 0 ? pair.degenerate0 : pair.degenerate1)) {
            const double inv = 1.0 / p[bb];
            for (auto& v : rho[bb].a) v *= inv;
        } else {
            rho[bb] = CMat(dE, dE);  // flagged undefined; keep zeros
        }
    }
    pair.rho0 = DensityOperator{std::move(rho[0]), {dE}};
    pair.rho1 = DensityOperator{std::move(rho[1]), {dE}};
    return pair;
}

CrossOperator cross_operator(const DensityOperator& rho_ab) {
    if (rho_ab.subsystem_dims.size() != 2 || rho_ab.subsystem_dims[1] != 2)
        throw std::invalid_argument("cross_operator: expected subsystem dims (dA, 2)");
    const std::size_t dA = rho_ab.subsystem_dims[0];
    if (!rho_ab.matrix.square() || rho_ab.matrix.rows != dA * 2)
        throw std::invalid_argument("cross_operator: matrix shape does not match dims");
    CMat chi(dA, dA);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dA; ++j) chi(i, j) = rho_ab.matrix(i * 2 + 0, j * 2 + 1);
    return CrossOperator{std::move(chi)};
}

PureState mzi_state(double gamma, double phi) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("mzi_state: gamma out of [0, 1]");
    const TripartiteDims dims{1, 2, 2};
    const double inv = 1.0 / std::sqrt(2.0);
    const cplx ph = std::polar(inv, phi);
    std::vector<cplx> amps(4);
    amps[0] = inv;                                    // (iB=0, iE=0)
    amps[1] = 0.0;                                    // (iB=0, iE=1)
    amps[2] = ph * gamma;                             // (iB=1, iE=0)
    amps[3] = ph * std::sqrt(1.0 - gamma * gamma);    // (iB=1, iE=1)
    return PureState{dims, std::move(amps)};
}

PureState mzi_steering_state(double gamma, double phi, double env_overlap) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("mzi_steering_state: gamma out of [0, 1]");
    if (!(env_overlap >= 0.0 && env_overlap <= 1.0))
        throw std::invalid_argument("mzi_steering_state: env_overlap out of [0, 1]");
    const std::size_t dE = (env_overlap == 1.0) ? 1 : 2;
    const TripartiteDims dims{2, 2, dE};
    const double m0[2] = {1.0, 0.0};
    const double m1[2] = {gamma, std::sqrt(1.0 - gamma * gamma)};
    const double e0[2] = {1.0, 0.0};
    const double e1[2] = {env_overlap, std::sqrt(1.0 - env_overlap * env_overlap)};
    const double inv = 1.0 / std::sqrt(2.0);
    const cplx ph = std::polar(inv, phi);
    std::vector<cplx> amps(dims.total());
    for (std::size_t ia = 0; ia < 2; ++ia)
        for (std::size_t ie = 0; ie < dE; ++ie) {
            amps[(ia * 2 + 0) * dE + ie] = inv * m0[ia] * e0[ie];
            amps[(ia * 2 + 1) * dE + ie] = ph * m1[ia] * e1[ie];
        }
    return PureState{dims, std::move(amps)};
}

void validate_density(const DensityOperator& rho, bool check_psd) {
    if (!rho.matrix.square()) throw std::invalid_argument("density operator: matrix not square");
    std::size_t prod = 1;
    for (auto d : rho.subsystem_dims) prod *= d;
    if (prod != rho.matrix.rows)
        throw std::invalid_argument("density operator: subsystem dims do not match matrix");
    if (hermiticity_defect(rho.matrix) > 1e-10)
        throw std::invalid_argument("density operator: not hermitian within 1e-10");
    if (std::abs(trace(rho.matrix) - cplx{1.0}) > 1e-9)
        throw std::invalid_argument("density operator: trace deviates from 1 by more than 1e-9");
    if (check_psd) {
        for (double lam : hermitian_eigenvalues(rho.matrix))
            if (lam < -1e-10)
                throw std::invalid_argument("density operator: eigenvalue below -1e-10");
    }
}

}  // namespace recoh
