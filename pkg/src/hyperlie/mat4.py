"""Fixed-size 4x4 real linear algebra.

Matrices are ``numpy`` arrays of shape ``(4, 4)`` indexed ``A[row, col]``.
Vectors are column vectors of shape ``(4,)`` and a matrix acts as ``A @ x``.
Basis vector ``e_k`` of the text is ``E[:, k - 1]`` here (0-based storage,
1-based names in docstrings).

A mixed-index object ``(M)_l^s`` is stored with the lower index as the row and
the upper index as the column, ``M[l - 1, s - 1]``.  This is the convention that
reproduces the printed basis matrices of the ``hc2`` algebra and is pinned by a
test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DIM = 4

# Scaling target for the Taylor oracle and maximum number of Taylor terms.
SCALED_NORM_MAX = 0.5
MAX_TERMS = 60


class ConvergenceError(ArithmeticError):
    """Raised when the Taylor series does not reach the requested tolerance."""


def identity() -> np.ndarray:
    return np.eye(DIM)


def zeros() -> np.ndarray:
    return np.zeros((DIM, DIM))


def as_mat4(A) -> np.ndarray:
    """Validate and convert ``A`` to a float 4x4 array.

    Raises ``ValueError`` on a wrong shape or on NaN/Inf entries.
    """
    M = np.asarray(A, dtype=float)
    if M.shape != (DIM, DIM):
        raise ValueError(f"expected a 4x4 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def as_vec4(x) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.shape != (DIM,):
        raise ValueError(f"expected a 4-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def basis_vector(k: int) -> np.ndarray:
    """The standard basis vector ``e_k`` for ``k`` in 1..4."""
    if not 1 <= k <= DIM:
        raise ValueError(f"basis index must be in 1..4, got {k}")
    e = np.zeros(DIM)
    e[k - 1] = 1.0
    return e


def mat_mul(A, B) -> np.ndarray:
    return as_mat4(A) @ as_mat4(B)


def max_abs(A) -> float:
    return float(np.max(np.abs(A))) if np.size(A) else 0.0


def approx_eq(A, B, tol: float) -> bool:
    """True iff the entrywise max-abs difference is at most ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return max_abs(as_mat4(A) - as_mat4(B)) <= tol


@dataclass(frozen=True)
class Poly4:
    """Polynomial ``c0 + c1*x + ... + c4*x**4`` (coefficients low to high)."""

    coeffs: tuple[float, float, float, float, float]

    def __call__(self, x):
        c = self.coeffs
        return (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=float)


def char_poly(A) -> Poly4:
    """Monic characteristic polynomial ``det(x E - A)``.

    Computed with the Faddeev-LeVerrier recursion
    ``M_k = A M_{k-1} + c_{n-k+1} E``, ``c_{n-k} = -tr(A M_k) / k``,
    which needs only matrix products and traces.
    """
    A = as_mat4(A)
    coeffs = [0.0] * (DIM + 1)
    coeffs[DIM] = 1.0
    M = np.zeros((DIM, DIM))
    for k in range(1, DIM + 1):
        M = A @ M + coeffs[DIM - k + 1] * np.eye(DIM)
        coeffs[DIM - k] = -float(np.trace(A @ M)) / k
    return Poly4(tuple(coeffs))


def exp_series(A, tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a truncated Taylor series.

    ``A`` is scaled by ``2**-s`` until its infinity norm is below 0.5, the
    series is summed until a term's norm drops below ``tol`` times the norm of
    the partial sum, and the result is squared ``s`` times.  This routine is the
    reference every closed form in the package is checked against.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = as_mat4(A)
    norm = float(np.max(np.sum(np.abs(A), axis=1)))
    s = 0
    if norm > SCALED_NORM_MAX:
        s = int(np.ceil(np.log2(norm / SCALED_NORM_MAX)))
    X = A / 2.0**s

    total = np.eye(DIM)
    term = np.eye(DIM)
    for k in range(1, MAX_TERMS + 1):
        term = term @ X / k
        total = total + term
        if np.max(np.abs(term)) <= tol * np.max(np.abs(total)):
            break
    else:
        raise ConvergenceError(f"Taylor series did not converge in {MAX_TERMS} terms")

    for _ in range(s):
        total = total @ total
    return total


def nilpotency_index(A, rel_tol: float = 1e-13) -> int | None:
    """Smallest ``q <= 4`` with ``A**q`` numerically zero, else ``None``.

    ``A**q`` counts as zero when its max-abs entry is at most
    ``rel_tol * max_abs(A)**q`` (scale-invariant threshold).
    """
    A = as_mat4(A)
    scale = max_abs(A)
    if scale == 0.0:
        return 1
    P = A.copy()
    for q in range(2, DIM + 1):
        P = P @ A
        if max_abs(P) <= rel_tol * scale**q:
            return q
    return None
