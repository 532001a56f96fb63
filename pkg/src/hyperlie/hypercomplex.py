"""Standard hypercomplex triple and the neutral metric on R^4.

Each ``J`` is stored as an integer matrix whose column ``j`` holds ``J e_j``.
``eps = (1, -1, -1)``: ``J1`` is an isometry of ``g``, ``J2`` and ``J3`` are
anti-isometries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = (1, -1, -1)


def _from_action(images: list[tuple[int, int]]) -> np.ndarray:
    """Build ``J`` from ``[(index, sign), ...]`` meaning ``J e_j = sign * e_index``."""
    J = np.zeros((4, 4), dtype=np.int64)
    for j, (i, sign) in enumerate(images):
        J[i - 1, j] = sign
    return J


@dataclass(frozen=True)
class HypercomplexTriple:
    J1: np.ndarray
    J2: np.ndarray
    J3: np.ndarray
    eps: tuple[int, int, int] = EPS

    def J(self, alpha: int) -> np.ndarray:
        return (self.J1, self.J2, self.J3)[alpha - 1]

    def __iter__(self):
        return iter((self.J1, self.J2, self.J3))


@dataclass(frozen=True)
class NeutralMetric:
    G: np.ndarray

    def __call__(self, x, y) -> float:
        return metric_eval(self, x, y)


def standard_triple() -> HypercomplexTriple:
    J1 = _from_action([(2, 1), (1, -1), (4, -1), (3, 1)])
    J2 = _from_action([(3, 1), (4, 1), (1, -1), (2, -1)])
    J3 = _from_action([(4, -1), (3, 1), (2, -1), (1, 1)])
    return HypercomplexTriple(J1, J2, J3)


def neutral_metric() -> NeutralMetric:
    return NeutralMetric(np.diag(np.array([1, 1, -1, -1], dtype=np.int64)))


def metric_eval(g: NeutralMetric, x, y):
    return np.asarray(x) @ g.G @ np.asarray(y)


def associated_matrix(alpha: int, H: HypercomplexTriple | None = None,
                      g: NeutralMetric | None = None) -> np.ndarray:
    """Gram matrix of ``g_alpha(x, y) = g(J_alpha x, y)``, i.e. ``J^T G``."""
    H = H or standard_triple()
    g = g or neutral_metric()
    return H.J(alpha).T @ g.G


def associated_form(alpha: int, x, y, H: HypercomplexTriple | None = None,
                    g: NeutralMetric | None = None):
    H = H or standard_triple()
    g = g or neutral_metric()
    return metric_eval(g, H.J(alpha) @ np.asarray(x), y)


def compatibility_defect(alpha: int, H: HypercomplexTriple | None = None,
                         g: NeutralMetric | None = None):
    """Max over basis pairs of ``|g(x, y) - eps_alpha g(J x, J y)|``."""
    H = H or standard_triple()
    g = g or neutral_metric()
    J = H.J(alpha)
    return np.max(np.abs(g.G - H.eps[alpha - 1] * (J.T @ g.G @ J)))


def quaternion_defect(H: HypercomplexTriple | None = None) -> int:
    """Max-abs violation of ``J_a^2 = -E`` and ``J_a = J_b J_c = -J_c J_b`` (cyclic).

    Exact for integer triples.
    """
    H = H or standard_triple()
    E = np.eye(4, dtype=np.int64)
    worst = 0
    for a in (1, 2, 3):
        worst = max(worst, np.max(np.abs(H.J(a) @ H.J(a) + E)))
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        Ja, Jb, Jc = H.J(a), H.J(b), H.J(c)
        worst = max(worst, np.max(np.abs(Ja - Jb @ Jc)), np.max(np.abs(Ja + Jc @ Jb)))
    return int(worst)
