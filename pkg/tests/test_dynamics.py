import numpy as np
import pytest

from pythcpt.dynamics import (
    SystemSpec,
    build_h_single,
    build_h_tp,
    coupling_graph,
    forbidden_scan,
    propagator,
    propagator_tp,
    simulate,
    simulate_lab,
    to_lab,
    verify_cpt,
)
from pythcpt.frames import build_w
from pythcpt.reference_tables import sixteen_level_lab, sixteen_level_tp
from pythcpt.triples import CouplingParams, lab_couplings, params_from_pair

SX = np.array([[0.0, 1.0], [1.0, 0.0]])
SZ = np.array([[1.0, 0.0], [0.0, -1.0]])


def four_level_tp_closed_form(d1, o1, d2, o2):
    """The 4x4 two-factor Hamiltonian written out by hand."""
    v14, v23 = d1 + d2, d1 - d2
    return np.array(
        [
            [v14, o2, o1, 0.0],
            [o2, v23, 0.0, o1],
            [o1, 0.0, -v23, o2],
            [0.0, o1, o2, -v14],
        ]
    )


def four_level_lab_closed_form(v12, v23, v34, v14):
    return np.array(
        [
            [0.0, v12, 0.0, v14],
            [v12, 0.0, v23, 0.0],
            [0.0, v23, 0.0, v34],
            [v14, 0.0, v34, 0.0],
        ]
    )


def test_h_single_two_level():
    assert np.max(np.abs(build_h_single(2, 1.0, 0.0) - SZ)) < 1e-15
    assert np.max(np.abs(build_h_single(2, 0.7, -0.3) - (0.7 * SZ - 0.3 * SX))) < 1e-15


def test_h_single_four_level():
    h = build_h_single(4, 1.5, 0.5).real
    assert np.max(np.abs(np.diag(h) - np.array([4.5, 1.5, -1.5, -4.5]))) < 1e-12
    expected_super = np.array([np.sqrt(3) * 0.5, 1.0, np.sqrt(3) * 0.5])
    assert np.max(np.abs(np.diag(h, 1) - expected_super)) < 1e-12
    assert np.max(np.abs(h - h.T)) < 1e-15


def test_h_single_three_level():
    h = build_h_single(3, 0.0, 1.0).real
    assert np.max(np.abs(np.diag(h, 1) - np.array([np.sqrt(2), np.sqrt(2)]))) < 1e-12
    assert np.max(np.abs(np.diag(h))) < 1e-15


def test_h_tp_two_level_closed_form():
    rng = np.random.default_rng(1)
    for _ in range(5):
        d1, o1, d2, o2 = rng.normal(size=4)
        params = CouplingParams(d1, o1, d2, o2, k=0.0, tau=1.0)
        h = build_h_tp(2, params).real
        assert np.max(np.abs(h - four_level_tp_closed_form(d1, o1, d2, o2))) < 1e-12


def test_h_tp_zero_params():
    params = CouplingParams(0.0, 0.0, 0.0, 0.0, k=0.0, tau=1.0)
    assert np.max(np.abs(build_h_tp(3, params))) == 0.0


def test_h_tp_sixteen_level_table():
    rng = np.random.default_rng(4)
    for _ in range(3):
        d1, o1, d2, o2 = rng.normal(size=4)
        params = CouplingParams(d1, o1, d2, o2, k=0.0, tau=1.0)
        h = build_h_tp(4, params).real
        assert np.max(np.abs(h - sixteen_level_tp(d1, o1, d2, o2))) < 1e-12


def test_to_lab_two_level():
    params = params_from_pair(3, 1, 0.0)
    h_lab = to_lab(build_h_tp(2, params), build_w(1).W).real
    assert np.max(np.abs(h_lab - four_level_lab_closed_form(5.0, 3.0, 4.0, 0.0))) < 1e-12


def test_to_lab_sixteen_level_table():
    rng = np.random.default_rng(9)
    w = build_w(2).W
    for _ in range(3):
        d1, o1, d2, o2 = rng.normal(size=4)
        params = CouplingParams(d1, o1, d2, o2, k=0.0, tau=1.0)
        h_lab = to_lab(build_h_tp(4, params), w).real
        expected = sixteen_level_lab(*lab_couplings(params))
        assert np.max(np.abs(h_lab - expected)) < 1e-12


def test_to_lab_identity_frame():
    h = build_h_tp(2, params_from_pair(3, 1, 0.0))
    assert np.max(np.abs(to_lab(h, np.eye(4)) - h)) == 0.0


def test_to_lab_rejects_non_orthogonal():
    with pytest.raises(ValueError, match="not orthogonal"):
        to_lab(np.eye(4), np.ones((4, 4)))


def test_propagator_factorizes():
    params = params_from_pair(5, 3, 0.4)
    h1 = build_h_single(3, params.delta1, params.omega1)
    h2 = build_h_single(3, params.delta2, params.omega2)
    h = build_h_tp(3, params)
    for t in (0.0, 0.31, 1.7):
        assert np.max(np.abs(propagator(h, t) - propagator_tp(h1, h2, t))) < 1e-10
    assert np.max(np.abs(propagator(h, 0.0) - np.eye(9))) < 1e-14


def test_lab_propagator_full_transfer_column():
    params = params_from_pair(3, 1, 0.0)
    w = build_w(1).W
    u_lab = w @ propagator(build_h_tp(2, params), params.tau) @ w
    col = np.abs(u_lab[:, 0])
    assert col[2] > 1.0 - 1e-9
    assert max(col[0], col[1], col[3]) < 1e-7


def test_simulate_sixteen_level_peaks():
    for p, q in ((3, 1), (5, 1)):
        result, _ = simulate_lab(p, q, 0.0, n=4, t_max_tau=2.0, steps=400)
        assert result.populations[200, 12] >= 1.0 - 1e-9  # state 13 at tau
        assert result.populations[400, 0] >= 1.0 - 1e-9  # back to state 1 at 2 tau
        sums = result.populations.sum(axis=1)
        assert np.max(np.abs(sums - 1.0)) < 1e-9
        assert result.populations.min() >= -1e-12
        assert result.populations.max() <= 1.0 + 1e-12


def test_periodicity_two_and_four():
    for n in (2, 4):
        result, _ = simulate_lab(3, 1, 0.0, n=n, t_max_tau=2.0, steps=2)
        assert result.populations[2, 0] >= 1.0 - 1e-9


def test_simulate_constant_under_zero_hamiltonian():
    psi0 = np.array([0.6, 0.8], dtype=complex)
    result = simulate(np.zeros((2, 2)), psi0, np.linspace(0, 5, 7))
    assert np.max(np.abs(result.populations - np.array([0.36, 0.64]))) < 1e-12


def test_simulate_rejects_unnormalized():
    with pytest.raises(ValueError, match="normalized"):
        simulate(np.zeros((2, 2)), np.array([1.0, 1.0]), np.array([0.0]))


def test_verify_cpt_lifts():
    params = params_from_pair(3, 1, 0.0)
    for n, target in ((2, 3), (4, 13), (8, 57)):
        cert = verify_cpt(SystemSpec(n=n, params=params))
        assert cert.target_index == target
        assert cert.fidelity >= 1.0 - 1e-9
        assert cert.tp_overlap >= 1.0 - 1e-9
        assert cert.passed
        assert cert.tau == params.tau


def test_verify_cpt_general_even():
    cert = verify_cpt(SystemSpec(n=6, params=params_from_pair(3, 1, 0.0)))
    assert cert.target_index == 31
    assert cert.fidelity >= 1.0 - 1e-9


def test_verify_cpt_rejects_odd():
    with pytest.raises(ValueError, match="odd"):
        verify_cpt(SystemSpec(n=3, params=params_from_pair(3, 1, 0.0)))


def test_frame_equivalence_of_propagators():
    params = params_from_pair(5, 1, 0.3)
    w = build_w(2).W
    h_tp = build_h_tp(4, params)
    h_lab = to_lab(h_tp, w)
    for t in (0.2, 0.9, 2.3):
        u_lab = propagator(h_lab, t)
        assert np.max(np.abs(u_lab - w @ propagator(h_tp, t) @ w)) < 1e-10


def test_spectrum_is_kron_sum():
    params = params_from_pair(5, 3, -0.8)
    for n in (2, 3, 4):
        h1 = build_h_single(n, params.delta1, params.omega1)
        h2 = build_h_single(n, params.delta2, params.omega2)
        e1 = np.linalg.eigvalsh(h1)
        e2 = np.linalg.eigvalsh(h2)
        expected = np.sort(np.add.outer(e1, e2).ravel())
        got = np.linalg.eigvalsh(build_h_tp(n, params))
        assert np.max(np.abs(got - expected)) < 1e-10
        # each factor spectrum is 2*sqrt(d^2 + o^2) * m
        r1 = 2.0 * np.hypot(params.delta1, params.omega1)
        j = (n - 1) / 2
        ms = np.sort(j - np.arange(n))
        assert np.max(np.abs(e1 - r1 * ms)) < 1e-10


def test_forbidden_scan_examples():
    for p, q in ((3, 1), (5, 1)):
        spec = SystemSpec(n=2, params=params_from_pair(p, q, 0.0))
        report = forbidden_scan(spec)
        assert report.n_points == 10_000
        assert report.max_pop_2 < 1.0 - 1e-6
        assert report.max_pop_4 < 1.0 - 1e-6
        assert report.passed


def test_forbidden_scan_single_point():
    spec = SystemSpec(n=2, params=params_from_pair(3, 1, 0.0))
    report = forbidden_scan(spec, times=np.array([0.0]))
    assert report.max_pop_2 < 1e-30
    assert report.max_pop_4 < 1e-30


def test_forbidden_scan_rejects_other_dims():
    with pytest.raises(ValueError, match="n=2"):
        forbidden_scan(SystemSpec(n=4, params=params_from_pair(3, 1, 0.0)))


def test_coupling_graph_sixteen_level_pattern():
    params = params_from_pair(3, 1, 0.7)  # generic k keeps every V nonzero
    h_lab = to_lab(build_h_tp(4, params), build_w(2).W).real
    graph = coupling_graph(h_lab)
    expected = sixteen_level_lab(*lab_couplings(params))
    want = {
        (i + 1, j + 1)
        for i in range(16)
        for j in range(i + 1, 16)
        if abs(expected[i, j]) > 1e-12
    }
    assert {(i, j) for i, j, _ in graph.edges} == want
    assert (1, 3) not in {(i, j) for i, j, _ in graph.edges}
    weights = {(i, j): wgt for i, j, wgt in graph.edges}
    v12, v23, v34, v14 = lab_couplings(params)
    assert abs(weights[(1, 2)] - np.sqrt(3) * v12) < 1e-12
    assert abs(weights[(1, 6)] - 2 * v14) < 1e-12
    assert np.max(np.abs(graph.diagonal)) < 1e-12


def test_coupling_graph_zero_matrix():
    graph = coupling_graph(np.zeros((4, 4)))
    assert graph.edges == ()


def test_system_spec_validation():
    with pytest.raises(ValueError, match="frame dimension"):
        SystemSpec(n=4, params=params_from_pair(3, 1, 0.0), frame=np.eye(4))
