"""Maximally entangled basis frames.

For n = 2^N the lab frame comes from a real orthogonal *symmetric*
matrix W whose columns are (normalized) vectorizations of N-fold tensor
products of the four Sigma matrices. A column is labelled by its digit
string over {0,1,2,3}, e.g. "31" stands for Sigma3 (x) Sigma1.

Columns are stored in row-major stacking of the tensor product, i.e.
``vectorize(product.T)``. With the canonical label orderings below this
is what makes W symmetric (column-major stacking flips the sign of
every Sigma2 factor and breaks the symmetry), and it reproduces the
conventional lab-frame coupling pattern. The generic even-n frame in
:func:`general_even_frame` uses plain column stacking, since there no
symmetry is required.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import complete_orthogonal, vectorize, unvectorize, kron
from .su2 import sigma_set, spin_generators, y_matrix

SYMMETRY_TOL = 1e-13
ORTHOGONALITY_TOL = 1e-12

# canonical label orderings; each makes W symmetric and demand-conform
_LABELS_1 = ("0", "1", "2", "3")
_LABELS_2 = (
    "00", "01", "10", "11", "31", "30", "21", "20",
    "23", "22", "33", "32", "12", "13", "02", "03",
)
_LABELS_3 = (
    "000", "001", "010", "011", "100", "101", "110", "111",
    "031", "030", "021", "020", "131", "130", "121", "120",
    "313", "312", "303", "302", "213", "212", "203", "202",
    "322", "323", "332", "333", "222", "223", "232", "233",
    "230", "231", "220", "221", "330", "331", "320", "321",
    "201", "200", "211", "210", "301", "300", "311", "310",
    "123", "122", "133", "132", "023", "022", "033", "032",
    "112", "113", "102", "103", "012", "013", "002", "003",
)
_CANONICAL_LABELS = {1: _LABELS_1, 2: _LABELS_2, 3: _LABELS_3}


@dataclass(frozen=True)
class EntangledFrame:
    """Symmetric orthogonal basis of maximally entangled states.

    ``W`` is dim-by-dim (dim = 4^N) with entries in {0, +-2^(-N/2)};
    column j is the normalized vectorization for ``labels[j]``.
    ``canonical`` is False for frames produced by search rather than
    the built-in orderings.
    """

    N: int
    labels: tuple[str, ...]
    W: np.ndarray
    canonical: bool = True

    @property
    def n(self) -> int:
        return 2 ** self.N

    @property
    def dim(self) -> int:
        return 4 ** self.N


@dataclass(frozen=True)
class FrameValidation:
    """Per-demand booleans plus symmetry/orthogonality residuals."""

    first_columns_nonnegative: bool
    diagonal_split_signs: bool
    last_column_alternating: bool
    entry_magnitudes_ok: bool
    symmetry_residual: float
    orthogonality_residual: float

    @property
    def all_pass(self) -> bool:
        return (
            self.first_columns_nonnegative
            and self.diagonal_split_signs
            and self.last_column_alternating
            and self.entry_magnitudes_ok
            and self.symmetry_residual <= SYMMETRY_TOL
            and self.orthogonality_residual <= ORTHOGONALITY_TOL
        )


@dataclass(frozen=True)
class SearchOutcome:
    """Result of :func:`search_w`: a frame, or proof the budget ran out."""

    frame: EntangledFrame | None
    exhausted: bool
    nodes_explored: int
    budget: int


def _sigma_product(label: str) -> np.ndarray:
    sigmas = sigma_set()
    out = np.array([[1.0]])
    for digit in label:
        if digit not in "0123":
            raise ValueError(f"invalid label digit {digit!r} in {label!r}")
        out = kron(out, sigmas[int(digit)])
    return out


def label_to_column(label: str) -> np.ndarray:
    """Normalized frame column for a digit label.

    Row-major stacking of the Sigma tensor product, scaled by
    2^(-N/2); see the module docstring for why rows and not columns.
    """
    if len(label) < 1:
        raise ValueError("label must have at least one digit")
    prod = _sigma_product(label)
    return vectorize(prod.T) / np.sqrt(2.0 ** len(label))


def _integer_columns(N: int) -> tuple[tuple[str, ...], np.ndarray]:
    """All 4^N labels (lexicographic) and their unnormalized integer columns."""
    labels = ["".join(digits) for digits in itertools.product("0123", repeat=N)]
    dim = 4 ** N
    cols = np.zeros((dim, dim), dtype=np.int8)
    for idx, lab in enumerate(labels):
        cols[:, idx] = np.rint(label_to_column(lab) * np.sqrt(2.0 ** N)).astype(np.int8)
    return tuple(labels), cols


def _assemble(N: int, labels: tuple[str, ...], canonical: bool) -> EntangledFrame:
    w = np.column_stack([label_to_column(lab) for lab in labels])
    return EntangledFrame(N=N, labels=tuple(labels), W=w, canonical=canonical)


def build_w(N: int) -> EntangledFrame:
    """Canonical entangled frame for N in {1, 2, 3}.

    The label sequences are fixed so that W is exactly symmetric and
    the transfer lands on basis state n^2 - n + 1; larger N has no
    canonical ordering here, use :func:`search_w`.
    """
    if N not in _CANONICAL_LABELS:
        raise ValueError(f"no canonical frame for N={N}; use search_w for N >= 4")
    return _assemble(N, _CANONICAL_LABELS[N], canonical=True)


def _alternating(column: np.ndarray, scale: float) -> bool:
    nz = column[np.abs(column) > 1e-14]
    if nz.size == 0:
        return False
    if np.max(np.abs(np.abs(nz) - scale)) > 1e-12:
        return False
    expected = scale * (-1.0) ** np.arange(nz.size)
    return bool(np.max(np.abs(nz - expected)) <= 1e-12)


def validate_frame(frame: EntangledFrame) -> FrameValidation:
    """Check the structural demands on a frame, reporting each separately.

    (a) the first n columns are nonnegative, (b) the first half of the
    diagonal is strictly positive and the second half strictly
    negative, (c) the last column alternates +s/-s among its nonzeros,
    starting positive. Residuals for symmetry and orthogonality are
    reported rather than thresholded so callers can see near-misses.
    """
    w = frame.W
    dim = w.shape[0]
    n = frame.n
    scale = 1.0 / np.sqrt(2.0 ** frame.N)
    demand_a = bool(np.min(w[:, :n]) > -1e-14)
    diag = np.diag(w)
    demand_b = bool(np.all(diag[: dim // 2] > 1e-14) and np.all(diag[dim // 2:] < -1e-14))
    demand_c = _alternating(w[:, -1], scale)
    mags = np.abs(w)
    entry_ok = bool(np.all((mags < 1e-14) | (np.abs(mags - scale) < 1e-12)))
    sym = float(np.max(np.abs(w - w.T)))
    orth = float(np.max(np.abs(w.T @ w - np.eye(dim))))
    return FrameValidation(
        first_columns_nonnegative=demand_a,
        diagonal_split_signs=demand_b,
        last_column_alternating=demand_c,
        entry_magnitudes_ok=entry_ok,
        symmetry_residual=sym,
        orthogonality_residual=orth,
    )


def search_w(N: int, budget: int = 2_000_000) -> SearchOutcome:
    """Backtracking search for a symmetric demand-conform label ordering.

    Labels are explored in lexicographic order, so the outcome is
    deterministic. Any distinct-label ordering is automatically
    orthogonal; the search enforces symmetry pairwise plus the three
    structural demands as pruning rules. Exhausting the node budget is
    reported, not raised.
    """
    if N == 1:
        return SearchOutcome(frame=build_w(1), exhausted=False, nodes_explored=0, budget=budget)
    labels, cols = _integer_columns(N)
    dim = 4 ** N
    n = 2 ** N
    nonneg = [bool(np.min(cols[:, i]) >= 0) for i in range(dim)]

    def alternating_int(i: int) -> bool:
        nz = cols[:, i][cols[:, i] != 0]
        return bool(np.all(nz == (-1) ** np.arange(nz.size)))

    alt_ok = [alternating_int(i) for i in range(dim)]
    assigned: list[int] = []
    used = np.zeros(dim, dtype=bool)
    nodes = 0

    def feasible(pos: int, idx: int) -> bool:
        if pos < n and not nonneg[idx]:
            return False
        d = cols[pos, idx]
        if pos < dim // 2:
            if d <= 0:
                return False
        elif d >= 0:
            return False
        if pos == dim - 1 and not alt_ok[idx]:
            return False
        if assigned:
            pos_arr = np.arange(pos)
            if not np.array_equal(cols[pos_arr, idx], cols[pos, assigned]):
                return False
        return True

    def dfs(pos: int) -> bool:
        nonlocal nodes
        if pos == dim:
            return True
        for idx in range(dim):
            if used[idx]:
                continue
            nodes += 1
            if nodes > budget:
                return False
            if not feasible(pos, idx):
                continue
            used[idx] = True
            assigned.append(idx)
            if dfs(pos + 1):
                return True
            if nodes > budget:
                return False
            assigned.pop()
            used[idx] = False
        return False

    found = dfs(0)
    if not found:
        return SearchOutcome(frame=None, exhausted=nodes > budget, nodes_explored=nodes, budget=budget)
    ordering = tuple(labels[i] for i in assigned)
    frame = _assemble(N, ordering, canonical=N in _CANONICAL_LABELS and ordering == _CANONICAL_LABELS[N])
    return SearchOutcome(frame=frame, exhausted=False, nodes_explored=nodes, budget=budget)


def general_even_frame(n: int) -> np.ndarray:
    """Orthogonal frame (as rows) for any even n, without the symmetry.

    Row 1 is V(I_n)/sqrt(n) and row n^2-n+1 is V(Y_n)/sqrt(n) so the
    transfer runs between lab states 1 and n^2-n+1 as in the 2^N
    frames; the rest is a deterministic Gram-Schmidt completion. Odd n
    is rejected because there V(I) and V(Y) are not orthogonal
    (trace(Y_n) = +-1).
    """
    if n % 2 != 0:
        raise ValueError(
            f"n={n} is odd: V(I) and V(Y) are not orthogonal (trace(Y) != 0), "
            "so no such frame exists"
        )
    rep = spin_generators(n)
    y = y_matrix(rep)
    if np.max(np.abs(y.imag)) > 1e-10:
        raise ValueError("Y_n unexpectedly non-real for even n")
    v1 = vectorize(np.eye(n)) / np.sqrt(n)
    vy = vectorize(y.real) / np.sqrt(n)
    q = complete_orthogonal([v1, vy])
    target = n * n - n  # 0-based row index for V(Y)
    rows = np.empty_like(q)
    rows[0] = q[0]
    rows[target] = q[1]
    rest = iter(q[2:])
    for i in range(1, n * n):
        if i != target:
            rows[i] = next(rest)
    return rows


def entanglement_entropy(column: np.ndarray, n: int) -> float:
    """Von Neumann entropy of the reduced state of a bipartite vector.

    The length-n^2 vector is reshaped to an n-by-n matrix M and the
    entropy -sum(lam * ln lam) of the eigenvalues of M M^dagger is
    returned, with 0 ln 0 = 0. Maximally entangled columns give ln n.
    """
    column = np.asarray(column, dtype=complex).reshape(-1)
    if column.size != n * n:
        raise ValueError(f"expected a length-{n * n} vector, got {column.size}")
    norm = np.linalg.norm(column)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"column must be normalized, got |column| = {norm}")
    m = unvectorize(column, n, n)
    lam = np.linalg.eigvalsh(m @ m.conj().T)
    lam = np.clip(lam.real, 0.0, None)
    nz = lam[lam > 0]
    return float(-np.sum(nz * np.log(nz)))
