"""Transition matrix of an orbit decomposition and its Perron data.

The matrix entry a_ij counts the strands of orbit i lying in block j.  Its
leading eigenvalue is the stretch factor of the map the instance encodes;
the positive left/right eigenvectors give the rectangle heights and lengths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import BlockStructure, ObpInstance, OrbitDecomposition
from .errors import NoConvergence, NotIrreducible

__all__ = [
    "TransitionMatrix",
    "Normalization",
    "PerronData",
    "BoundsVerdict",
    "build_matrix",
    "perron",
    "check_lambda_bounds",
    "conjugate_matrix",
]

RAYLEIGH_TOL = 1e-12
RESIDUAL_TARGET = 1e-10
ITERATION_CAP = 10**6


@dataclass(frozen=True, slots=True)
class TransitionMatrix:
    """Non-negative integer matrix with rows indexed by orbits, columns by blocks."""

    n: int
    a: tuple[tuple[int, ...], ...]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.a)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.a) for j in range(self.n))

    def entry(self, i: int, j: int) -> int:
        return self.a[i - 1][j - 1]


class Normalization(str, enum.Enum):
    """Scaling convention for the eigenvector pair.

    SUM_H pins sum(h) = 1 (the vertical cross-section has unit length) and
    sum(l) = 1; MAX_L pins max(l) = 1 and max(h) = 1.
    """

    SUM_H = "sum_h"
    MAX_L = "max_l"


@dataclass(frozen=True, slots=True)
class PerronData:
    """Leading eigenvalue with positive eigenvectors of A (lengths) and A^T (heights)."""

    lam: float
    l: tuple[float, ...]
    h: tuple[float, ...]
    residual_l: float
    residual_h: float
    normalization: Normalization


@dataclass(frozen=True, slots=True)
class BoundsVerdict:
    """Outcome of the strict double-inequality test against k and m.

    status is "pass", "degenerate" (an equality within margin) or "fail".
    """

    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def build_matrix(dec: OrbitDecomposition, blocks: BlockStructure) -> TransitionMatrix:
    """Count how many strands of each orbit fall in each block."""
    n = len(dec.orbits)
    rows = []
    for orbit in dec.orbits:
        row = [0] * n
        for s in orbit:
            row[blocks.block_of(s) - 1] += 1
        rows.append(tuple(row))
    return TransitionMatrix(n, tuple(rows))


def _reaches_all(adj: list[list[int]], start: int) -> bool:
    seen = [False] * len(adj)
    seen[start] = True
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def _is_irreducible(matrix: TransitionMatrix) -> bool:
    n = matrix.n
    adj = [[j for j in range(n) if matrix.a[i][j] > 0] for i in range(n)]
    radj = [[i for i in range(n) if matrix.a[i][j] > 0] for j in range(n)]
    return _reaches_all(adj, 0) and _reaches_all(radj, 0)


def _power_iterate(mat: np.ndarray) -> tuple[float, np.ndarray]:
    """Leading eigenpair of a primitive non-negative matrix by power iteration."""
    size = mat.shape[0]
    x = np.full(size, 1.0 / np.sqrt(size))
    prev = None
    for _ in range(ITERATION_CAP):
        y = mat @ x
        ray = float(x @ y)
        residual = float(np.max(np.abs(y - ray * x)))
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            raise NoConvergence("iteration collapsed to the zero vector")
        x = y / norm
        if prev is not None and abs(ray - prev) < RAYLEIGH_TOL:
            if residual <= RESIDUAL_TARGET * max(1.0, ray):
                return ray, x
        prev = ray
    raise NoConvergence(f"no convergence after {ITERATION_CAP} iterations")


def perron(
    matrix: TransitionMatrix, normalization: Normalization = Normalization.SUM_H
) -> PerronData:
    """Leading eigenvalue and positive eigenvectors of A and A^T.

    Power iteration runs on A + I so that periodic irreducible matrices
    become primitive without moving the eigenvectors; the eigenvalue is
    recovered by subtracting 1.
    """
    if not _is_irreducible(matrix):
        raise NotIrreducible("transition matrix is not irreducible")
    a = np.array(matrix.a, dtype=float)
    shifted = a + np.eye(matrix.n)
    ray_l, vec_l = _power_iterate(shifted)
    ray_h, vec_h = _power_iterate(shifted.T)
    lam = ray_l - 1.0

    if normalization is Normalization.SUM_H:
        vec_h = vec_h / vec_h.sum()
        vec_l = vec_l / vec_l.sum()
    elif normalization is Normalization.MAX_L:
        vec_l = vec_l / vec_l.max()
        vec_h = vec_h / vec_h.max()
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown normalization {normalization!r}")

    residual_l = float(np.max(np.abs(a @ vec_l - lam * vec_l)))
    residual_h = float(np.max(np.abs(a.T @ vec_h - lam * vec_h)))
    return PerronData(
        lam=lam,
        l=tuple(float(v) for v in vec_l),
        h=tuple(float(v) for v in vec_h),
        residual_l=residual_l,
        residual_h=residual_h,
        normalization=normalization,
    )


def check_lambda_bounds(
    pd: PerronData, k: tuple[int, ...], m: tuple[int, ...], margin: float = 1e-9
) -> BoundsVerdict:
    """Strict bounds min(k) < lam < max(k) and min(m) < lam < max(m).

    Strictness carries a relative margin; a comparison landing inside the
    margin band is reported as degenerate rather than a clean failure.
    """
    lam = pd.lam
    eps = margin * max(1.0, abs(lam))
    comparisons = (
        ("min(k) < lambda", lam - min(k)),
        ("lambda < max(k)", max(k) - lam),
        ("min(m) < lambda", lam - min(m)),
        ("lambda < max(m)", max(m) - lam),
    )
    worst = min(comparisons, key=lambda c: c[1])
    if worst[1] > eps:
        return BoundsVerdict("pass")
    if worst[1] < -eps:
        return BoundsVerdict("fail", f"{worst[0]} fails by {-worst[1]:.3g}")
    return BoundsVerdict("degenerate", f"{worst[0]} holds only within margin")


def conjugate_matrix(matrix: TransitionMatrix, sigma: tuple[int, ...]) -> TransitionMatrix:
    """Conjugate by the permutation matrix with columns e_{sigma(1)},...,e_{sigma(n)}.

    The result has entries a[sigma^{-1}(i), sigma^{-1}(j)] and equals the
    matrix built from the inverted instance, as exact integers.
    """
    n = matrix.n
    inv = [0] * n
    for i, v in enumerate(sigma):
        inv[v - 1] = i  # 0-based position of the block landing at i+1
    rows = tuple(
        tuple(matrix.a[inv[i]][inv[j]] for j in range(n)) for i in range(n)
    )
    return TransitionMatrix(n, rows)
