"""Dense complex matrix utilities: Kronecker products, vectorization,
exact unitary propagators for Hermitian generators, and orthogonal
completion of partial real frames.

All functions are pure and operate on plain numpy arrays. Matrices are
2-d ``ndarray``s, vectors 1-d. Everything here is exact up to
eigendecomposition error, which is why propagators are computed by
diagonalization rather than by series or Pade methods.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-12
UNITARITY_TOL = 1e-10
ORTHONORMALITY_TOL = 1e-10
GRAM_SCHMIDT_RESIDUAL_TOL = 1e-8


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with block (i, j) equal to ``a[i, j] * b``."""
    return np.kron(np.asarray(a), np.asarray(b))


def vectorize(x: np.ndarray) -> np.ndarray:
    """Stack the columns of ``x`` into a single vector.

    Component ``m*(j-1) + i`` (1-based) of the result is ``x[i, j]``,
    i.e. column-major order.
    """
    x = np.asarray(x)
    if x.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={x.ndim}")
    return x.reshape(-1, order="F")


def unvectorize(y: np.ndarray, m: int, n: int) -> np.ndarray:
    """Inverse of :func:`vectorize`: reshape ``y`` into an m-by-n matrix."""
    y = np.asarray(y).reshape(-1)
    if y.size != m * n:
        raise ValueError(
            f"cannot unvectorize a length-{y.size} vector into a {m}x{n} matrix"
        )
    return y.reshape((m, n), order="F")


def hermiticity_deviation(h: np.ndarray) -> float:
    """Max elementwise deviation |h - h^dagger|."""
    h = np.asarray(h)
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def matexp_unitary(
    h: np.ndarray,
    t: float,
    herm_tol: float = HERMITICITY_TOL,
    check_unitarity: bool = True,
    unitarity_tol: float = UNITARITY_TOL,
) -> np.ndarray:
    """Return ``exp(-i h t)`` for Hermitian ``h``.

    Computed by diagonalizing ``h`` and exponentiating its (real)
    eigenvalues, so the result is unitary to eigendecomposition
    accuracy.

    Parameters
    ----------
    h : ndarray
        Hermitian generator. Rejected if the max elementwise deviation
        from its adjoint exceeds ``herm_tol``.
    t : float
        Evolution time (hbar = 1 throughout).
    check_unitarity : bool
        If set, verify ``U U^dagger = I`` within ``unitarity_tol``.
    """
    h = np.asarray(h, dtype=complex)
    dev = hermiticity_deviation(h)
    if dev > herm_tol:
        raise ValueError(
            f"generator is not Hermitian: max |h - h^dagger| = {dev:.3e} "
            f"exceeds tolerance {herm_tol:.3e}"
        )
    evals, evecs = np.linalg.eigh(h)
    u = (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T
    if check_unitarity:
        err = np.max(np.abs(u @ u.conj().T - np.eye(h.shape[0])))
        if err > unitarity_tol:
            raise ValueError(f"propagator unitarity error {err:.3e} exceeds {unitarity_tol:.3e}")
    return u


def complete_orthogonal(
    rows: list[np.ndarray] | tuple[np.ndarray, ...],
    ortho_tol: float = ORTHONORMALITY_TOL,
    residual_tol: float = GRAM_SCHMIDT_RESIDUAL_TOL,
) -> np.ndarray:
    """Complete real orthonormal rows to a full real orthogonal matrix.

    The given rows appear first, unchanged. The remaining rows come
    from Gram-Schmidt over the standard basis taken in index order;
    candidates whose residual norm falls below ``residual_tol`` are
    skipped. Each appended row is sign-fixed so its first nonzero
    entry is positive, which makes the completion deterministic.
    """
    seed = [np.asarray(r, dtype=float).reshape(-1) for r in rows]
    if not seed:
        raise ValueError("at least one seed row is required")
    for r in rows:
        if np.iscomplexobj(np.asarray(r)) and np.max(np.abs(np.asarray(r).imag)) > ortho_tol:
            raise ValueError("seed rows must be real")
    dim = seed[0].size
    gram = np.array([[float(np.dot(a, b)) for b in seed] for a in seed])
    if np.max(np.abs(gram - np.eye(len(seed)))) > ortho_tol:
        raise ValueError(
            f"seed rows are not orthonormal within {ortho_tol:.1e} "
            f"(max Gram deviation {np.max(np.abs(gram - np.eye(len(seed)))):.3e})"
        )
    basis = list(seed)
    for i in range(dim):
        if len(basis) == dim:
            break
        cand = np.zeros(dim)
        cand[i] = 1.0
        for b in basis:
            cand = cand - np.dot(b, cand) * b
        norm = np.linalg.norm(cand)
        if norm < residual_tol:
            continue
        cand /= norm
        nz = np.nonzero(np.abs(cand) > 1e-12)[0]
        if nz.size and cand[nz[0]] < 0:
            cand = -cand
        basis.append(cand)
    if len(basis) != dim:
        raise ValueError(f"completion produced {len(basis)} rows, expected {dim}")
    return np.vstack(basis)
