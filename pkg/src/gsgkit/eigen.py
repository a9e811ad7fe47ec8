"""Dense symmetric eigensolver.

The default route is a cyclic Jacobi iteration: rotations are applied in a
fixed row-by-row sweep order until the off-diagonal Frobenius norm drops to
``1e-12 * ||A||_F``. It is deterministic and handles the heavily repeated
eigenvalues of highly symmetric graphs well. Cost is O(n^3) per sweep, so
above ``JACOBI_MAX_ORDER`` the LAPACK routine behind :func:`numpy.linalg.eigvalsh`
is used instead.
"""

from __future__ import annotations

import math

import numba
import numpy as np

from .errors import ContractError, ConvergenceError, SizeError

JACOBI_MAX_ORDER = 400
MAX_ORDER = 5000
OFF_TOL = 1e-12
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12


@numba.njit(cache=True)
def _jacobi_sweeps(a, v, with_vectors, tol, max_sweeps):
    # Returns the number of sweeps used, or -1 when max_sweeps is exhausted.
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if math.sqrt(2.0 * off) <= tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                # exact zero keeps later off-norms honest
                a[p, q] = 0.0
                a[q, p] = 0.0
                if with_vectors:
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * vkq
                        v[k, q] = s * vkp + c * vkq
    return -1


def _as_symmetric(matrix) -> np.ndarray:
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 1:
        raise ContractError("matrix order must be at least 1")
    if n > MAX_ORDER:
        raise SizeError(f"order {n} exceeds the dense eigensolver limit {MAX_ORDER}")
    if not np.isfinite(a).all():
        raise ContractError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max()))
    asym = np.abs(a - a.T)
    if asym.max() > SYMMETRY_TOL * scale:
        i, j = np.unravel_index(int(asym.argmax()), asym.shape)
        raise ContractError(f"matrix not symmetric at ({i}, {j}): "
                            f"{a[i, j]!r} vs {a[j, i]!r}")
    return np.ascontiguousarray((a + a.T) / 2.0)


def jacobi_eigh(matrix, *, with_vectors: bool = True,
                tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Cyclic Jacobi eigendecomposition.

    Returns ``(values, vectors, sweeps)`` with values sorted non-increasing
    and the matching eigenvectors as columns (``None`` unless
    ``with_vectors``).
    """
    a = _as_symmetric(matrix)
    n = a.shape[0]
    v = np.eye(n) if with_vectors else np.empty((0, 0))
    threshold = tol * float(np.linalg.norm(a))
    sweeps = _jacobi_sweeps(a, v, with_vectors, threshold, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.diagonal(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], (v[:, order] if with_vectors else None), sweeps


def eig_symmetric(matrix, method: str = "auto") -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted non-increasing.

    ``method`` is ``"jacobi"``, ``"lapack"`` or ``"auto"`` (Jacobi up to
    ``JACOBI_MAX_ORDER``, LAPACK beyond).
    """
    if method not in ("auto", "jacobi", "lapack"):
        raise ValueError(f"unknown eigensolver method {method!r}")
    a = _as_symmetric(matrix)
    if method == "auto":
        method = "jacobi" if a.shape[0] <= JACOBI_MAX_ORDER else "lapack"
    if method == "lapack":
        return np.linalg.eigvalsh(a)[::-1].copy()
    values, _, _ = jacobi_eigh(a, with_vectors=False)
    return values
