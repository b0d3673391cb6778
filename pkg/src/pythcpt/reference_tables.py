"""Hand-written closed forms for the 16-level system.

These are the known explicit expressions for the two-factor (n = 4)
Hamiltonian, its lab-frame image, and the 16 x 16 entangled frame,
kept as an independent target for regression checks: the constructive
code in :mod:`pythcpt.dynamics` and :mod:`pythcpt.frames` must
reproduce them entry for entry.
"""

from __future__ import annotations

import numpy as np

_SQRT3 = np.sqrt(3.0)

# 2 * W16: integer entries, symmetric, columns ordered
# 00 01 10 11 31 30 21 20 23 22 33 32 12 13 02 03
_W16_NUM = np.array(
    [
        [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
        [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    ],
    dtype=float,
)


def sixteen_level_w() -> np.ndarray:
    """The explicit symmetric orthogonal 16 x 16 frame (entries 0, +-1/2)."""
    return _W16_NUM / 2.0


def sixteen_level_tp(d1: float, o1: float, d2: float, o2: float) -> np.ndarray:
    """Explicit two-factor 16-level Hamiltonian for n = 4.

    Written out entry by entry (upper triangle plus diagonal) exactly
    as the closed form reads, then mirrored.
    """
    v14 = d1 + d2
    v23 = d1 - d2
    s3 = _SQRT3
    h = np.zeros((16, 16))
    diag = [
        3 * v14, 3 * d1 + d2, 3 * d1 - d2, 3 * v23,
        d1 + 3 * d2, v14, v23, d1 - 3 * d2,
        3 * d2 - d1, -v23, -v14, -d1 - 3 * d2,
        -3 * v23, d2 - 3 * d1, -3 * d1 - d2, -3 * v14,
    ]
    for i, v in enumerate(diag):
        h[i, i] = v
    # intra-block ladder of the second factor
    block_ladder = [s3 * o2, 2 * o2, s3 * o2]
    for b in range(4):
        for k in range(3):
            h[4 * b + k, 4 * b + k + 1] = block_ladder[k]
    # inter-block ladder of the first factor
    inter = [s3 * o1, 2 * o1, s3 * o1]
    for b in range(3):
        for k in range(4):
            h[4 * b + k, 4 * (b + 1) + k] = inter[b]
    return h + h.T - np.diag(diag)


def sixteen_level_lab(v12: float, v23: float, v34: float, v14: float) -> np.ndarray:
    """Explicit lab-frame 16-level Hamiltonian (zero diagonal).

    The upper triangle is written out term by term; the matrix is the
    symmetric completion.
    """
    s3 = _SQRT3
    h = np.zeros((16, 16))
    upper = {
        (1, 2): s3 * v12, (1, 4): v12, (1, 6): 2 * v14, (1, 10): -v12, (1, 16): v14,
        (2, 3): v12, (2, 5): 2 * v14, (2, 9): v34, (2, 15): v23,
        (3, 4): s3 * v12, (3, 8): 2 * v23, (3, 12): v34, (3, 14): v14,
        (4, 7): 2 * v23, (4, 11): -v12, (4, 13): v23,
        (5, 6): s3 * v12, (5, 8): v34, (5, 12): v23, (5, 14): v12,
        (6, 7): v34, (6, 11): v14, (6, 13): -v34,
        (7, 8): s3 * v12, (7, 10): v23, (7, 16): -v34,
        (8, 9): v14, (8, 15): v12,
        (9, 10): s3 * v34, (9, 12): v12, (9, 14): 2 * v23,
        (10, 11): v12, (10, 13): 2 * v23,
        (11, 12): s3 * v34, (11, 16): 2 * v14,
        (12, 15): 2 * v14,
        (13, 14): s3 * v34, (13, 16): v34,
        (14, 15): v34,
        (15, 16): s3 * v34,
    }
    for (i, j), v in upper.items():
        h[i - 1, j - 1] = v
        h[j - 1, i - 1] = v
    return h
