import math

import numpy as np
import pytest

import recoh


def test_version():
    assert recoh.__version__


def test_from_amplitudes_roundtrip():
    s = 1 / math.sqrt(2)
    bell = recoh.from_amplitudes(2, 1, [s, 0, 0, s])
    assert bell.dims == (2, 2, 1)
    amps = np.asarray(bell.amplitudes)
    assert amps.shape == (4,)
    assert np.linalg.norm(amps) == pytest.approx(1.0, abs=1e-12)
    assert amps[0] == pytest.approx(s, abs=1e-12)


def test_bell_measures():
    s = 1 / math.sqrt(2)
    bell = recoh.from_amplitudes(2, 1, [s, 0, 0, s])
    assert recoh.c1(bell) == pytest.approx(0.0, abs=1e-12)
    assert recoh.ca_trace_norm(bell) == pytest.approx(1.0, abs=1e-9)
    assert recoh.c2_subfidelity(bell) == pytest.approx(1.0, abs=1e-9)
    rep = recoh.measure_report(bell)
    assert rep["c3_newton"] is None
    assert rep["p0"] == pytest.approx(0.5, abs=1e-9)


def test_theorem_on_haar_states():
    for seed in range(40):
        psi = recoh.haar_sample(2, 3, seed=seed)
        assert recoh.c2_subfidelity(psi) == pytest.approx(
            recoh.ca_trace_norm(psi), abs=1e-9
        )


def test_haar_determinism():
    a = np.asarray(recoh.haar_sample(2, 2, seed=11).amplitudes)
    b = np.asarray(recoh.haar_sample(2, 2, seed=11).amplitudes)
    assert np.array_equal(a, b)


def test_kernel_against_numpy():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = m + m.conj().T
    assert np.allclose(
        recoh.hermitian_eigenvalues(h), np.linalg.eigvalsh(h), atol=1e-10
    )
    assert recoh.trace_norm(m) == pytest.approx(np.linalg.norm(m, "nuc"), abs=1e-9)
    chi = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert recoh.c3_newton(chi) == pytest.approx(recoh.trace_norm(chi), abs=1e-8)


def test_quartic():
    assert recoh.real_quartic_roots(1, -10, 35, -50, 24) == pytest.approx([1, 2, 3, 4])
    assert recoh.real_quartic_roots(1, 0, 0, 0, 1) == []


def test_sub_fidelity_bound():
    rng = np.random.default_rng(4)
    for _ in range(20):
        a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        x = a @ a.conj().T
        x /= np.trace(x).real
        y = b @ b.conj().T
        y /= np.trace(y).real
        assert recoh.sub_fidelity(x, y) <= recoh.uhlmann_fidelity(x, y) + 1e-9


def test_closed_forms():
    assert recoh.closed_form_mean(1, 1) == pytest.approx(math.pi / 4, abs=1e-14)
    assert recoh.closed_form_mean(2, 1) == pytest.approx(9 * math.pi / 32, abs=1e-14)
    assert recoh.closed_form_mean(3, 1) == pytest.approx(75 * math.pi / 256, abs=1e-14)
    with pytest.raises(ValueError):
        recoh.closed_form_mean(4, 1)


def test_monte_carlo_matches_closed_form():
    mean, stderr = recoh.monte_carlo_mean(2, 1, 5000, seed=21)
    assert abs(mean - recoh.closed_form_mean(2, 1)) <= 5 * stderr
    rep = recoh.compare(1, 2, 1000, seed=5)
    assert rep["closed_form"] == pytest.approx(3 * math.pi / 16, abs=1e-14)


def test_steering_oracle():
    psi = recoh.haar_sample(2, 2, seed=1)
    out = recoh.optimize_steering(psi, budget=3000, seed=2)
    assert out["best_value"] <= out["analytic_bound"] + 1e-9
    assert out["analytic_bound"] - out["best_value"] <= 5e-3
    assert recoh.average_coherence(psi, out["best_basis"]) == pytest.approx(
        out["best_value"], abs=1e-12
    )


def test_mzi_table():
    rows = recoh.mzi_table(0.0, 1.0, 0.25)
    gammas = [row[0] for row in rows]
    assert gammas == pytest.approx([0, 0.25, 0.5, 0.75, 1.0])
    for gamma, col_c1, col_c2 in rows:
        assert col_c1 == pytest.approx(gamma, abs=1e-12)
        assert col_c2 == pytest.approx(1.0, abs=1e-12)


def test_state_file_io(tmp_path):
    path = str(tmp_path / "state.json")
    psi = recoh.mzi_steering_state(0.25, 0.1)
    recoh.save_state(psi, path)
    back = recoh.load_state(path)
    assert back.dims == (2, 2, 1)
    assert recoh.c1(back) == pytest.approx(0.25, abs=1e-12)


def test_partial_trace():
    s = 1 / math.sqrt(2)
    bell = recoh.from_amplitudes(2, 1, [s, 0, 0, s])
    rho = recoh.density(bell)
    rb = recoh.partial_trace(rho, [2, 2, 1], [1])
    assert np.allclose(rb, np.eye(2) / 2, atol=1e-12)
