#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recoh/ensemble.hpp"
#include "recoh/measures.hpp"
#include "recoh/state_io.hpp"
#include "recoh/states.hpp"
#include "recoh/steering.hpp"
#include "recoh/version.hpp"

namespace py = pybind11;
using namespace recoh;

namespace {

using carray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

CMat to_cmat(const carray& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-d complex array");
    CMat m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
    auto r = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
    return m;
}

py::array from_cmat(const CMat& m) {
    return py::array_t<std::complex<double>>(
        {static_cast<py::ssize_t>(m.rows), static_cast<py::ssize_t>(m.cols)}, m.a.data());
}

DensityOperator to_density(const carray& arr) {
    CMat m = to_cmat(arr);
    const std::size_t n = m.rows;
    return DensityOperator{std::move(m), {n}};
}

py::array amplitudes_array(const PureState& psi) {
    return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(psi.amp.size()),
                                             psi.amp.data());
}

MeasurementBasis to_basis(const std::vector<std::vector<cplx>>& vectors) {
    return MeasurementBasis{vectors};
}

py::dict report_dict(const MeasureReport& r) {
    py::dict d;
    d["p0"] = r.p0;
    d["p1"] = r.p1;
    d["c1"] = r.c1;
    d["ca_tracenorm"] = r.ca_tracenorm;
    d["c2_subfid"] = r.c2_subfid ? py::cast(*r.c2_subfid) : py::none();
    d["c3_newton"] = r.c3_newton ? py::cast(*r.c3_newton) : py::none();
    d["hs"] = r.hs ? py::cast(*r.hs) : py::none();
    d["subfid"] = r.subfid ? py::cast(*r.subfid) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_recoh, m) {
    m.doc() = "Recoverable qubit coherence under steering: measures, steering oracle, "
              "Haar-ensemble averages.";
    m.attr("__version__") = kVersion;

    py::class_<PureState>(m, "PureState")
        .def_property_readonly("dims",
                               [](const PureState& s) {
                                   return py::make_tuple(s.dims.dA, s.dims.dB, s.dims.dE);
                               })
        .def_property_readonly("amplitudes", &amplitudes_array)
        .def("__repr__", [](const PureState& s) {
            return "<PureState dims=(" + std::to_string(s.dims.dA) + ", 2, " +
                   std::to_string(s.dims.dE) + ")>";
        });

    // --- states -----------------------------------------------------------
    m.def(
        "from_amplitudes",
        [](std::size_t dA, std::size_t dE, const std::vector<cplx>& amps) {
            return from_amplitudes(TripartiteDims{dA, 2, dE}, amps);
        },
        py::arg("dA"), py::arg("dE"), py::arg("amplitudes"),
        "Build a tripartite state; index convention (iA*2 + iB)*dE + iE.");
    m.def(
        "haar_sample",
        [](std::size_t dA, std::size_t dE, std::uint64_t seed) {
            return haar_sample(TripartiteDims{dA, 2, dE}, seed);
        },
        py::arg("dA"), py::arg("dE"), py::arg("seed"));
    m.def("mzi_state", &mzi_state, py::arg("gamma"), py::arg("phi") = 0.0);
    m.def("mzi_steering_state", &mzi_steering_state, py::arg("gamma"), py::arg("phi") = 0.0,
          py::arg("env_overlap") = 1.0);
    m.def("density", [](const PureState& psi) { return from_cmat(density(psi).matrix); });
    m.def(
        "partial_trace",
        [](const carray& rho, const std::vector<std::size_t>& dims,
           const std::vector<std::size_t>& keep) {
            return from_cmat(partial_trace(DensityOperator{to_cmat(rho), dims}, keep).matrix);
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep"));
    m.def("conditional_env_states", [](const PureState& psi) {
        const ConditionalEnvPair pair = conditional_env_states(psi);
        py::dict d;
        d["p0"] = pair.p0;
        d["p1"] = pair.p1;
        d["rho0"] = pair.degenerate0 ? py::object(py::none()) : py::object(from_cmat(pair.rho0.matrix));
        d["rho1"] = pair.degenerate1 ? py::object(py::none()) : py::object(from_cmat(pair.rho1.matrix));
        d["degenerate"] = pair.degenerate();
        return d;
    });
    m.def("cross_operator", [](const PureState& psi) {
        return from_cmat(cross_operator(reduced_density(psi, {0, 1})).matrix);
    });

    // --- matrix kernel ------------------------------------------------------
    m.def("hermitian_eigenvalues",
          [](const carray& h) { return hermitian_eigenvalues(to_cmat(h)); });
    m.def("trace_norm", [](const carray& x) { return trace_norm(to_cmat(x)); });
    m.def("psd_sqrt", [](const carray& p) { return from_cmat(psd_sqrt(to_cmat(p))); });
    m.def("power_sums", [](const carray& x, int n) { return power_sums(to_cmat(x), n); },
          py::arg("m"), py::arg("n"));
    m.def("real_quartic_roots", &real_quartic_roots, py::arg("c4"), py::arg("c3"), py::arg("c2"),
          py::arg("c1"), py::arg("c0"));
    m.def("elementary_symmetric_from_power_sums", &elementary_symmetric_from_power_sums);

    // --- measures -----------------------------------------------------------
    m.def("coherence", [](const carray& rho) { return coherence(to_density(rho)); });
    m.def("hs_overlap",
          [](const carray& x, const carray& y) { return hs_overlap(to_density(x), to_density(y)); });
    m.def("sub_fidelity", [](const carray& x, const carray& y) {
        return sub_fidelity(to_density(x), to_density(y));
    });
    m.def("uhlmann_fidelity", [](const carray& x, const carray& y) {
        return uhlmann_fidelity(to_density(x), to_density(y));
    });
    m.def("c1", &c1);
    m.def("ca_trace_norm", &ca_trace_norm);
    m.def("c2_subfidelity", &c2_subfidelity);
    m.def("c3_newton", [](const carray& chi) { return c3_newton(to_cmat(chi)); });
    m.def("measure_report", [](const PureState& psi) { return report_dict(measure_report(psi)); });
    m.def(
        "mzi_table",
        [](double g0, double g1, double step, double phi, bool steering, double env_overlap) {
            py::list rows;
            for (const auto& row : mzi_table(g0, g1, step, phi, steering, env_overlap))
                rows.append(py::make_tuple(row.gamma, row.c1, row.c2));
            return rows;
        },
        py::arg("gamma_start"), py::arg("gamma_end"), py::arg("gamma_step"), py::arg("phi") = 0.0,
        py::arg("steering") = true, py::arg("env_overlap") = 1.0);

    // --- steering -------------------------------------------------------------
    m.def(
        "average_coherence",
        [](const PureState& psi, const std::vector<std::vector<cplx>>& basis) {
            return average_coherence(psi, to_basis(basis));
        },
        py::arg("psi"), py::arg("basis"));
    m.def("random_basis", [](std::size_t d, std::uint64_t seed) {
        return random_basis(d, seed).vectors;
    });
    m.def(
        "optimize_steering",
        [](const PureState& psi, std::uint64_t budget, std::uint64_t seed) {
            const SteeringResult r = optimize_steering(psi, budget, seed);
            py::dict d;
            d["best_value"] = r.best_value;
            d["best_basis"] = r.best_basis.vectors;
            d["evaluations"] = r.evaluations;
            d["analytic_bound"] = r.analytic_bound;
            return d;
        },
        py::arg("psi"), py::arg("budget"), py::arg("seed"));

    // --- ensemble ---------------------------------------------------------------
    m.def("closed_form_mean", &closed_form_mean, py::arg("a"), py::arg("K"));
    m.def(
        "monte_carlo_mean",
        [](int a, int K, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
            const MonteCarloEstimate e = monte_carlo_mean(a, K, samples, seed, threads);
            return py::make_tuple(e.mean, e.std_error);
        },
        py::arg("a"), py::arg("K"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);
    m.def(
        "compare",
        [](int a, int K, std::uint64_t samples, std::uint64_t seed) {
            const EnsembleReport r = compare(a, K, samples, seed);
            py::dict d;
            d["a"] = r.a;
            d["K"] = r.K;
            d["samples"] = r.samples;
            d["seed"] = r.seed;
            d["mc_mean"] = r.mc_mean;
            d["mc_stderr"] = r.mc_stderr;
            d["closed_form"] = r.closed_form;
            d["z_score"] = r.z_score;
            return d;
        },
        py::arg("a"), py::arg("K"), py::arg("samples"), py::arg("seed"));

    // --- state files ---------------------------------------------------------
    m.def("load_state", &load_state, py::arg("path"));
    m.def("save_state", &save_state, py::arg("psi"), py::arg("path"));
    m.def("state_to_json", &state_to_json);
}
