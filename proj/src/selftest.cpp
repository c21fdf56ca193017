#include "recoh/selftest.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "recoh/ensemble.hpp"
#include "recoh/measures.hpp"
#include "recoh/rng.hpp"
#include "recoh/states.hpp"
#include "recoh/steering.hpp"

namespace recoh {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Random mixed state of dimension d: a Haar pure state on d x m, ancilla
// traced out. m = 1 gives a pure state.
DensityOperator random_mixed(std::size_t d, std::size_t m, std::uint64_t seed) {
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

CMat random_rank_le2(std::uint64_t seed) {
    GaussianRng rng(seed);
    CMat chi(3, 3);
    for (int r = 0; r < 2; ++r) {
        cplx u[3], v[3];
        for (auto& x : u) x = rng.cnormal();
        for (auto& x : v) x = rng.cnormal();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) chi(i, j) += 0.5 * u[i] * std::conj(v[j]);
    }
    return chi;
}

CriterionResult theorem_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{1, "theorem-c2-equals-2tr-chi", false, 0.0, 1e-9, ""};
    const int per_k = scale == SelftestScale::full ? 1000 : 150;
    std::uint64_t idx = 0;
    for (int K : {1, 2, 3, 4, 6, 8}) {
        const TripartiteDims dims{2, 2, static_cast<std::size_t>(K)};
        for (int i = 0; i < per_k; ++i) {
            const PureState psi = haar_sample(dims, derive_seed(seed, idx++));
            const double dev = std::abs(c2_subfidelity(psi) - ca_trace_norm(psi));
            r.max_dev = std::max(r.max_dev, dev);
        }
    }
    r.passed = r.max_dev <= r.tolerance;
    r.note = std::to_string(6 * per_k) + " Haar states, K in {1,2,3,4,6,8}";
    return r;
}

CriterionResult dim3_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{2, "dim3-newton-route", false, 0.0, 1e-8, ""};
    const int n = scale == SelftestScale::full ? 1000 : 200;
    for (int i = 0; i < n; ++i) {
        GaussianRng rng(derive_seed(seed, 0x300000 + i));
        const CMat chi = gaussian_matrix(3, rng);
        const double dev = std::abs(c3_newton(chi) - trace_norm(chi));
        r.max_dev = std::max(r.max_dev, dev);
    }
    // rank-<=2 inputs: with s3 at its analytic value 0 the selected root
    // must reproduce sqrt(s1 + 2 sqrt(s2))
    double degen_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        const CMat chi = random_rank_le2(derive_seed(seed, 0x310000 + i));
        const CMat y = adjoint(chi) * chi;
        const auto tc = power_sums(y, 3);
        const auto s = elementary_symmetric_from_power_sums({tc[0].real(), tc[1].real(), tc[2].real()});
        const double s1 = s[0], s2 = std::max(s[1], 0.0);
        const auto roots = real_quartic_roots(1.0, 0.0, -2.0 * s1, 0.0, s1 * s1 - 4.0 * s2);
        const double expected = std::sqrt(s1 + 2.0 * std::sqrt(s2));
        const double got = roots.empty() ? -1.0 : roots.back();
        degen_dev = std::max(degen_dev, std::abs(got - expected));
    }
    r.passed = r.max_dev <= r.tolerance && degen_dev <= 1e-9;
    r.note = "rank<=2 degeneration max dev " + fmt(degen_dev) + " (tol 1e-9)";
    return r;
}

CriterionResult steering_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{3, "steering-oracle-sandwich", false, 0.0, 5e-3, ""};
    const int n_states = scale == SelftestScale::full ? 100 : 8;
    const std::uint64_t budget = scale == SelftestScale::full ? 20000 : 2000;
    const TripartiteDims dims{2, 2, 2};
    double worst_violation = 0.0;
    for (int i = 0; i < n_states; ++i) {
        const PureState psi = haar_sample(dims, derive_seed(seed, 0x500000 + i));
        const SteeringResult sr = optimize_steering(psi, budget, derive_seed(seed, 0x510000 + i));
        worst_violation = std::max(worst_violation, sr.best_value - sr.analytic_bound);
        r.max_dev = std::max(r.max_dev, sr.analytic_bound - sr.best_value);
    }
    r.passed = worst_violation <= 1e-9 && r.max_dev <= r.tolerance;
    r.note = "bound violation " + fmt(worst_violation) + " (tol 1e-9), budget " + std::to_string(budget);
    return r;
}

CriterionResult ensemble_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{4, "ensemble-haar-averages", false, 0.0, 4.0, ""};
    const std::uint64_t samples = scale == SelftestScale::full ? 100000 : 10000;
    struct Case {
        int a;
        int K;
        double exact;
    };
    const Case cases[] = {{1, 1, kPi / 4.0},
                          {1, 2, 3.0 * kPi / 16.0},
                          {2, 1, 9.0 * kPi / 32.0},
                          {2, 2, 31.0 * kPi / 128.0},
                          {3, 1, 75.0 * kPi / 256.0}};
    double closed_form_dev = 0.0;
    std::string zs;
    for (const auto& c : cases) {
        const EnsembleReport rep = compare(c.a, c.K, samples, derive_seed(seed, 0x600000 + c.a * 16 + c.K));
        closed_form_dev = std::max(closed_form_dev, std::abs(rep.closed_form - c.exact));
        r.max_dev = std::max(r.max_dev, std::abs(rep.z_score));
        zs += (zs.empty() ? "z=" : ",") + fmt(rep.z_score);
    }
    r.passed = r.max_dev <= r.tolerance && closed_form_dev <= 1e-12;
    r.note = std::to_string(samples) + " samples each; " + zs + "; closed-form pin dev " +
             fmt(closed_form_dev);
    return r;
}

CriterionResult fidelity_bound_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{5, "fidelity-bound", false, 0.0, 1e-9, ""};
    const int n = scale == SelftestScale::full ? 10000 : 1000;
    double worst_violation = -1.0;  // max(sub - uhl), should stay <= 0 + tol
    for (int i = 0; i < n; ++i) {
        const std::size_t d = (i % 2 == 0) ? 2 : 3;
        const DensityOperator x = random_mixed(d, d, derive_seed(seed, 0x700000 + 2 * i));
        const DensityOperator y = random_mixed(d, d, derive_seed(seed, 0x700001 + 2 * i));
        worst_violation = std::max(worst_violation, sub_fidelity(x, y) - uhlmann_fidelity(x, y));
    }
    double pure_dev = 0.0;
    for (int i = 0; i < n / 10 + 10; ++i) {
        const std::size_t d = (i % 2 == 0) ? 2 : 3;
        const DensityOperator x = random_mixed(d, 1, derive_seed(seed, 0x710000 + 2 * i));
        const DensityOperator y = random_mixed(d, 1, derive_seed(seed, 0x710001 + 2 * i));
        pure_dev = std::max(pure_dev, std::abs(sub_fidelity(x, y) - uhlmann_fidelity(x, y)));
    }
    r.max_dev = std::max(worst_violation, 0.0);
    r.passed = worst_violation <= r.tolerance && pure_dev <= 1e-10;
    r.note = "pure-pure collapse dev " + fmt(pure_dev) + " (tol 1e-10)";
    return r;
}

CriterionResult structural_criterion(SelftestScale scale, std::uint64_t seed) {
    CriterionResult r{6, "structural-invariants", false, 0.0, 1e-9, ""};
    const int n = scale == SelftestScale::full ? 10000 : 1000;
    const TripartiteDims pool[] = {{1, 2, 1}, {1, 2, 3}, {2, 2, 2}, {2, 2, 5},
                                   {3, 2, 2}, {3, 2, 4}, {4, 2, 3}, {5, 2, 2}};
    double ordering = 0.0, trace_id = 0.0, mixture = 0.0;
    for (int i = 0; i < n; ++i) {
        const TripartiteDims dims = pool[i % 8];
        const PureState psi = haar_sample(dims, derive_seed(seed, 0x800000 + i));
        const double v1 = c1(psi);
        ordering = std::max(ordering, v1 - ca_trace_norm(psi));
        const CrossOperator chi = cross_operator(reduced_density(psi, {0, 1}));
        trace_id = std::max(trace_id, std::abs(2.0 * std::abs(trace(chi.matrix)) - v1));
        const ConditionalEnvPair pair = conditional_env_states(psi);
        const DensityOperator env = partial_trace(density(psi), {2});
        const CMat mix = pair.p0 * pair.rho0.matrix + pair.p1 * pair.rho1.matrix;
        mixture = std::max(mixture, max_abs(mix - env.matrix));
    }
    r.max_dev = std::max({ordering, trace_id, mixture});
    r.passed = r.max_dev <= r.tolerance;
    r.note = "ordering " + fmt(ordering) + ", trace identity " + fmt(trace_id) + ", mixture " +
             fmt(mixture);
    return r;
}

CriterionResult mzi_criterion(SelftestScale, std::uint64_t) {
    CriterionResult r{7, "mzi-eraser", false, 0.0, 1e-12, ""};
    const auto rows = mzi_table(0.0, 1.0, 0.01, 0.7, true);
    double dev = 0.0;
    for (const auto& row : rows) dev = std::max(dev, std::abs(row.c1 - row.gamma));
    dev = std::max(dev, std::abs(rows.front().c2 - 1.0));  // gamma=0: erasable
    dev = std::max(dev, std::abs(rows.back().c1 - 1.0));   // gamma=1: no marking
    r.max_dev = dev;
    r.passed = dev <= r.tolerance;
    r.note = std::to_string(rows.size()) + " grid rows, linear law c1 = gamma";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_selftest(SelftestScale scale, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(theorem_criterion(scale, seed));
    out.push_back(dim3_criterion(scale, seed));
    out.push_back(steering_criterion(scale, seed));
    out.push_back(ensemble_criterion(scale, seed));
    out.push_back(fidelity_bound_criterion(scale, seed));
    out.push_back(structural_criterion(scale, seed));
    out.push_back(mzi_criterion(scale, seed));
    return out;
}

bool print_selftest(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " " << r.name
            << "  max_dev=" << fmt(r.max_dev) << " tol=" << fmt(r.tolerance);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
    }
    return all;
}

}  // namespace recoh
