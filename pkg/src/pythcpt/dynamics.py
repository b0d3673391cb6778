"""Tensor-product and lab-frame Hamiltonians, propagators, population
dynamics, and transfer certification.

The two-factor Hamiltonian is h1 (x) I + I (x) h2 with each factor
2*Delta*J3 + 2*Omega*J1 in the spin-(n-1)/2 representation; conjugating
with an entangled frame W gives the sparse lab-frame form whose
nearest-neighbour couplings are the V's of :func:`pythcpt.triples.lab_couplings`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import EntangledFrame, build_w, general_even_frame
from .linalg import kron, matexp_unitary, vectorize, hermiticity_deviation
from .su2 import spin_generators, y_matrix
from .triples import CouplingParams, params_from_pair

CPT_TOL = 1e-9


@dataclass(frozen=True)
class SystemSpec:
    """A coupled pair of n-level factors plus an optional lab frame.

    When ``frame`` is None a frame is chosen automatically: the
    canonical entangled frame if n is a power of two, otherwise the
    generic even-n frame.
    """

    n: int
    params: CouplingParams
    frame: EntangledFrame | np.ndarray | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.frame is not None and self._frame_matrix().shape[0] != self.n ** 2:
            raise ValueError(
                f"frame dimension {self._frame_matrix().shape[0]} != n^2 = {self.n ** 2}"
            )

    def _frame_matrix(self) -> np.ndarray:
        if isinstance(self.frame, EntangledFrame):
            return self.frame.W
        return np.asarray(self.frame)

    def resolve_frame(self) -> np.ndarray:
        """Frame matrix whose rows are the lab basis vectors."""
        if self.frame is not None:
            return self._frame_matrix()
        n = self.n
        if n & (n - 1) == 0:  # power of two
            return build_w(n.bit_length() - 1).W
        if n % 2 == 0:
            return general_even_frame(n)
        raise ValueError(f"no lab frame for odd n={n}: transfer states are not orthogonal")


@dataclass(frozen=True)
class SimulationResult:
    """Population traces on a time grid.

    ``times`` is in units of tau or absolute time depending on
    ``time_unit``; ``populations[t, i]`` is |<e_{i+1}|psi(t)>|^2.
    """

    times: np.ndarray
    populations: np.ndarray
    labels: tuple[str, ...]
    time_unit: str = "absolute"


@dataclass(frozen=True)
class CptCertificate:
    """Transfer fidelity between lab states 1 and n^2-n+1 at t = tau."""

    n: int
    target_index: int
    tau: float
    fidelity: float
    tp_overlap: float
    phase: complex
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.fidelity >= 1.0 - self.tolerance


@dataclass(frozen=True)
class ForbiddenScanReport:
    """Maximum populations of the unreachable two-level lab states."""

    max_pop_2: float
    max_pop_4: float
    n_points: int
    t_max: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_pop_2 < self.threshold and self.max_pop_4 < self.threshold


@dataclass(frozen=True)
class CouplingGraph:
    """Undirected weighted edges of a Hamiltonian's off-diagonal pattern."""

    edges: tuple[tuple[int, int, float], ...]  # 1-based (i, j, weight), i < j
    diagonal: np.ndarray
    zero_tol: float


def build_h_single(n: int, delta: float, omega: float) -> np.ndarray:
    """Single-factor Hamiltonian 2*delta*J3 + 2*omega*J1 (dim n).

    For n = 2 this is delta*sigma_z + omega*sigma_x.
    """
    rep = spin_generators(n)
    return 2.0 * delta * rep.J3 + 2.0 * omega * rep.J1


def build_h_tp(n: int, params: CouplingParams) -> np.ndarray:
    """Two-factor Hamiltonian h1 (x) I + I (x) h2 in the product basis."""
    h1 = build_h_single(n, params.delta1, params.omega1)
    h2 = build_h_single(n, params.delta2, params.omega2)
    eye = np.eye(n)
    return kron(h1, eye) + kron(eye, h2)


def to_lab(h_tp: np.ndarray, w: np.ndarray, ortho_tol: float = 1e-10) -> np.ndarray:
    """Conjugate a product-basis Hamiltonian with a symmetric orthogonal W."""
    w = np.asarray(w)
    err = np.max(np.abs(w.T @ w - np.eye(w.shape[0])))
    if err > ortho_tol:
        raise ValueError(f"frame is not orthogonal: max |W^T W - I| = {err:.3e}")
    return w @ h_tp @ w


def propagator(h: np.ndarray, t: float) -> np.ndarray:
    """Unitary exp(-i h t) for a Hermitian Hamiltonian."""
    return matexp_unitary(h, t)


def propagator_tp(h1: np.ndarray, h2: np.ndarray, t: float) -> np.ndarray:
    """Factored propagator exp(-i h1 t) (x) exp(-i h2 t).

    Equals ``propagator`` of the two-factor Hamiltonian because the two
    summands commute.
    """
    return kron(matexp_unitary(h1, t), matexp_unitary(h2, t))


def simulate(
    h: np.ndarray,
    psi0: np.ndarray,
    times: np.ndarray,
    time_unit: str = "absolute",
) -> SimulationResult:
    """Populations |<e_i|exp(-i h t)|psi0>|^2 on a time grid.

    The Hamiltonian is diagonalized once and all grid points are
    evaluated from the spectral form, so the cost is one
    eigendecomposition plus two small matrix products.
    """
    psi0 = np.asarray(psi0, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi0)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"psi0 must be normalized, got |psi0| = {norm}")
    dev = hermiticity_deviation(h)
    if dev > 1e-12:
        raise ValueError(f"Hamiltonian not Hermitian (deviation {dev:.3e})")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    evals, evecs = np.linalg.eigh(np.asarray(h, dtype=complex))
    coeffs = evecs.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, evals))  # (T, d)
    waves = (phases * coeffs) @ evecs.T  # (T, d), component i of psi(t)
    pops = np.abs(waves) ** 2
    labels = tuple(str(i + 1) for i in range(psi0.size))
    return SimulationResult(times=times, populations=pops, labels=labels, time_unit=time_unit)


def simulate_lab(
    p: int,
    q: int,
    k: float,
    n: int,
    t_max_tau: float,
    steps: int,
) -> tuple[SimulationResult, float]:
    """Lab-frame simulation from state 1 on a uniform grid in tau units.

    Returns the result (times in units of tau, inclusive endpoints)
    together with tau itself.
    """
    params = params_from_pair(p, q, k)
    spec = SystemSpec(n=n, params=params)
    w = spec.resolve_frame()
    h_lab = w @ build_h_tp(n, params) @ w.T
    tau = params.tau
    grid_tau = np.linspace(0.0, t_max_tau, steps + 1)
    psi0 = np.zeros(n * n)
    psi0[0] = 1.0
    result = simulate(h_lab, psi0, grid_tau * tau, time_unit="tau")
    return SimulationResult(
        times=grid_tau, populations=result.populations, labels=result.labels, time_unit="tau"
    ), tau


def verify_cpt(spec: SystemSpec, tol: float = CPT_TOL) -> CptCertificate:
    """Certify the transfer from lab state 1 to state n^2-n+1 at t = tau.

    Reports the lab-frame fidelity, the equivalent product-frame
    overlap |<V(Y)/sqrt(n)| U(tau) |V(I)/sqrt(n)>|, and the measured
    global phase of the transfer amplitude.
    """
    n = spec.n
    if n % 2 != 0:
        raise ValueError(
            f"n={n} is odd: V(I) and V(Y) are not orthogonal, no complete transfer"
        )
    if spec.params.tau is None:
        raise ValueError("params carry no transfer time tau")
    tau = spec.params.tau
    w = spec.resolve_frame()
    h_tp = build_h_tp(n, spec.params)
    u_tp = matexp_unitary(h_tp, tau)
    u_lab = w @ u_tp @ w.T
    target = n * n - n  # 0-based
    amp = u_lab[target, 0]
    vi = vectorize(np.eye(n)) / np.sqrt(n)
    vy = vectorize(y_matrix(spin_generators(n))) / np.sqrt(n)
    tp_overlap = abs(np.vdot(vy, u_tp @ vi))
    return CptCertificate(
        n=n,
        target_index=target + 1,
        tau=tau,
        fidelity=float(abs(amp) ** 2),
        tp_overlap=float(tp_overlap),
        phase=complex(amp),
        tolerance=tol,
    )


def forbidden_scan(
    spec: SystemSpec,
    times: np.ndarray | None = None,
    threshold: float = 1.0 - 1e-6,
) -> ForbiddenScanReport:
    """Scan for population of lab states 2 and 4 in the two-level system.

    Starting from state 1 those populations stay strictly below one;
    the report holds their sampled maxima over the grid (default 10^4
    points on [0, 20*tau]).
    """
    if spec.n != 2:
        raise ValueError(f"forbidden state scan applies to n=2 only, got n={spec.n}")
    tau = spec.params.tau
    if times is None:
        if tau is None:
            raise ValueError("params carry no tau; pass an explicit grid")
        times = np.linspace(0.0, 20.0 * tau, 10_000)
    w = spec.resolve_frame()
    h_lab = w @ build_h_tp(2, spec.params) @ w.T
    psi0 = np.zeros(4)
    psi0[0] = 1.0
    result = simulate(h_lab, psi0, times)
    return ForbiddenScanReport(
        max_pop_2=float(np.max(result.populations[:, 1])),
        max_pop_4=float(np.max(result.populations[:, 3])),
        n_points=len(np.atleast_1d(times)),
        t_max=float(np.max(times)),
        threshold=threshold,
    )


def coupling_graph(h_lab: np.ndarray, zero_tol: float | None = None) -> CouplingGraph:
    """Undirected edge list of a Hermitian Hamiltonian's couplings.

    ``zero_tol`` defaults to 1e-10 relative to the largest entry
    magnitude. Indices are 1-based to match the usual state labelling.
    """
    h_lab = np.asarray(h_lab)
    dev = hermiticity_deviation(h_lab)
    if dev > 1e-10:
        raise ValueError(f"Hamiltonian not Hermitian (deviation {dev:.3e})")
    scale = float(np.max(np.abs(h_lab))) if h_lab.size else 0.0
    tol = zero_tol if zero_tol is not None else 1e-10 * scale
    d = h_lab.shape[0]
    edges = []
    for i in range(d):
        for j in range(i + 1, d):
            if abs(h_lab[i, j]) > tol:
                edges.append((i + 1, j + 1, float(np.real(h_lab[i, j]))))
    return CouplingGraph(edges=tuple(edges), diagonal=np.real(np.diag(h_lab)).copy(), zero_tol=tol)
