"""Structure constants of 4-dimensional real Lie algebras.

A structure-constant table is a ``(4, 4, 4)`` array ``C`` with
``C[k, l, s]`` the coefficient of ``e_s`` in ``[e_k, e_l]`` (0-based storage).
Basis matrices follow ``(M_k)_l^s = -C_kl^s`` with ``l`` the row and ``s`` the
column.

Only ``hc2`` has its brackets written out in the source.  For every other
family the brackets are *defined* here as the ones recovered from its
generator layout: ``M_k = dA/dp_k`` and then ``C_kl^s = -(M_k)_l^s``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hyperlie import mat4
from hyperlie.families import FamilyElement, FamilyId, generator

JACOBI_TOL = 1e-12
RANK_TOL = 1e-9


class StructureConstantsError(ValueError):
    """Recovered constants are not a Lie algebra (transcription bug)."""


def as_constants(C) -> np.ndarray:
    C = np.asarray(C, dtype=float)
    if C.shape != (4, 4, 4):
        raise ValueError(f"structure constants must have shape (4, 4, 4), got {C.shape}")
    return C


def bracket(C, x, y) -> np.ndarray:
    """``[x, y]^s = sum_{k,l} C[k, l, s] x^k y^l``."""
    return np.einsum("kls,k,l->s", as_constants(C), mat4.as_vec4(x), mat4.as_vec4(y))


def bracket_fields(C, X, Y) -> np.ndarray:
    """Brackets of columns: ``out[a, b] = [X[:, a], Y[:, b]]``.

    ``X`` and ``Y`` are 4x4 matrices whose columns are vectors, e.g. ``J`` (so
    column ``a`` is ``J e_a``) or the identity.
    """
    return np.einsum("kls,ka,lb->abs", as_constants(C), X, Y)


def basis_matrices(C) -> np.ndarray:
    """``M[k]`` with ``M[k][l, s] = -C[k, l, s]``; shape ``(4, 4, 4)``."""
    return -as_constants(C).copy()


def constants_from_matrices(M) -> np.ndarray:
    return -np.asarray(M, dtype=float).copy()


def antisymmetry_defect(C) -> float:
    C = as_constants(C)
    return mat4.max_abs(C + C.transpose(1, 0, 2))


def jacobi_defect(C) -> float:
    """Max over ``i, j, k, s`` of the cyclic Jacobi sum for the table ``C``."""
    C = as_constants(C)
    J = (np.einsum("ijm,mks->ijks", C, C)
         + np.einsum("jkm,mis->ijks", C, C)
         + np.einsum("kim,mjs->ijks", C, C))
    return mat4.max_abs(J)


def family_basis_matrices(family: FamilyId) -> np.ndarray:
    """``M_k = A(e_k) - A(0)``: exact since every layout is linear in (a, b, c, d)."""
    A0 = generator(FamilyElement(family, (0.0, 0.0, 0.0, 0.0)))
    out = np.zeros((4, 4, 4))
    for k in range(4):
        p = [0.0] * 4
        p[k] = 1.0
        out[k] = generator(FamilyElement(family, tuple(p))) - A0
    return out


def constants_from_family(family: FamilyId) -> np.ndarray:
    C = constants_from_matrices(family_basis_matrices(family))
    anti = antisymmetry_defect(C)
    jac = jacobi_defect(C)
    if anti > JACOBI_TOL or jac > JACOBI_TOL:
        raise StructureConstantsError(
            f"{family}: antisymmetry defect {anti}, Jacobi defect {jac}"
        )
    return C


def representation_sign(C) -> dict[int, float]:
    """Residuals of ``[M_i, M_j] = sign * sum_k C_ij^k M_k`` for both signs.

    Returns ``{+1: residual, -1: residual}``; whichever is ~0 tells whether
    ``e_k -> M_k`` is a homomorphism or an anti-homomorphism.
    """
    C = as_constants(C)
    M = basis_matrices(C)
    out = {1: 0.0, -1: 0.0}
    for i in range(4):
        for j in range(4):
            comm = M[i] @ M[j] - M[j] @ M[i]
            rhs = np.einsum("k,kab->ab", C[i, j], M)
            out[1] = max(out[1], mat4.max_abs(comm - rhs))
            out[-1] = max(out[-1], mat4.max_abs(comm + rhs))
    return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of R^4 given by an orthonormal basis (rows of ``basis``)."""

    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def contains(self, v, tol: float = 1e-10) -> bool:
        v = np.asarray(v, dtype=float)
        proj = self.basis.T @ (self.basis @ v) if self.dim else np.zeros(4)
        return mat4.max_abs(v - proj) <= tol

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim})"


def _pivot_tol(S: np.ndarray) -> float:
    return RANK_TOL * max(1.0, mat4.max_abs(S))


def _span(vectors: np.ndarray) -> Subspace:
    """Orthonormal basis of the row span of ``vectors`` via SVD."""
    if vectors.size == 0:
        return Subspace(np.zeros((0, 4)))
    _, sing, Vt = np.linalg.svd(vectors, full_matrices=False)
    r = int(np.sum(sing > _pivot_tol(vectors)))
    return Subspace(Vt[:r].copy())


def center(C) -> Subspace:
    """``{x : [x, e_l] = 0 for all l}`` as the null space of the stacked ad maps."""
    C = as_constants(C)
    # row (l, s) of the stacked system: sum_k C[k, l, s] x^k = 0
    S = C.transpose(1, 2, 0).reshape(16, 4)
    _, sing, Vt = np.linalg.svd(S)
    r = int(np.sum(sing > _pivot_tol(S)))
    return Subspace(Vt[r:].copy())


def derived_algebra(C) -> Subspace:
    """Span of all ``[e_k, e_l]``, ``k < l``."""
    C = as_constants(C)
    rows = [C[k, l] for k in range(4) for l in range(k + 1, 4)]
    return _span(np.array(rows))


def signature_on(sub: Subspace, G) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` eigenvalue counts of ``G`` restricted to ``sub``.

    Eigenvalues with modulus below ``1e-9 * max(1, max|eig|)`` count as zero.
    """
    if sub.dim == 0:
        return (0, 0, 0)
    B = sub.basis
    gram = B @ np.asarray(G, dtype=float) @ B.T
    ev = np.linalg.eigvalsh((gram + gram.T) / 2.0)
    thr = RANK_TOL * max(1.0, float(np.max(np.abs(ev))))
    return (int(np.sum(ev > thr)), int(np.sum(ev < -thr)), int(np.sum(np.abs(ev) <= thr)))
