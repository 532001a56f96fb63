"""Levi-Civita connection, fundamental tensors and the class predicates.

Everything is evaluated on the left-invariant frame ``e_1..e_4`` of a Lie group
with constant metric ``G`` and constant structures ``J_alpha``.  Arrays use
0-based indices:

* ``Gamma[i, j, k]``: coefficient of ``e_k`` in ``nabla_{e_i} e_j``
* ``F[i, j, k] = F(e_i, e_j, e_k) = g((nabla_{e_i} J) e_j, e_k)``
* ``theta[k] = theta(e_k)``

Class residuals (each a max-abs over all basis triples):

========== ==============================================================
W0(J)      ``F``
W2(J1)     ``S F1`` where ``S T(x,y,z) = T(x,y,z) + T(y,z,x) + T(z,x,y)``
W4(J1)     ``F1 - 1/2 {g(x,y)th(z) - g(x,Jy)th(Jz) - g(x,z)th(y) + g(x,Jz)th(Jy)}``
W1(J)      ``F - 1/4 {g(x,y)th(z) + g(x,Jy)th(Jz) + g(x,z)th(y) + g(x,Jz)th(Jy)}``
W2(J)      ``max(S F(x,y,Jz), th)``
W3(J)      ``S F``
W1+W2 (J)  ``S F(x,y,Jz)``; W1 and W2 both annihilate it, so it measures the
           W3 component
d(th1 J1)  ``d w(e_i, e_j) = -w([e_i, e_j])`` with ``w = th1 o J1``
========== ==============================================================
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from hyperlie import mat4
from hyperlie.families import FamilyElement, FamilyId, generator
from hyperlie.hypercomplex import (
    HypercomplexTriple,
    NeutralMetric,
    neutral_metric,
    standard_triple,
)
from hyperlie.lie_algebra import as_constants, bracket_fields, constants_from_family

log = logging.getLogger(__name__)

CLASSIFY_TOL = 1e-9

# Expected composite class per family.
TABLE1 = {
    FamilyId.HC1: "K",
    FamilyId.HC2: "HC",
    FamilyId.HC3_1: "HC'",
    FamilyId.HC3_2: "W0",
    FamilyId.HC4_1: "HC",
    FamilyId.HC4_2: "W0",
    FamilyId.HC5_1: "HC",
    FamilyId.HC5_2: "HC",
}

# Most specific first; used to name a single class for a report.
COMPOSITE_ORDER = ("K", "HC'", "W0", "HC")


def _G(g: NeutralMetric | None) -> np.ndarray:
    return np.asarray((g or neutral_metric()).G, dtype=float)


def levi_civita(C, g: NeutralMetric | None = None) -> np.ndarray:
    """Connection coefficients from the Koszul formula for left-invariant fields.

    ``2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)``
    """
    C = as_constants(C)
    G = _G(g)
    if abs(np.linalg.det(G)) < 1e-12:
        raise np.linalg.LinAlgError("metric Gram matrix is singular")
    B = np.einsum("ijs,sk->ijk", C, G)
    L = 0.5 * (B - np.einsum("jki->ijk", B) + np.einsum("kij->ijk", B))
    return np.einsum("ijk,km->ijm", L, np.linalg.inv(G))


def torsion_defect(Gamma, C) -> float:
    return mat4.max_abs(Gamma - Gamma.transpose(1, 0, 2) - as_constants(C))


def metric_compatibility_defect(Gamma, g: NeutralMetric | None = None) -> float:
    L = np.einsum("ijm,mk->ijk", Gamma, _G(g))
    return mat4.max_abs(L + L.transpose(0, 2, 1))


def fundamental_tensor(J, Gamma, g: NeutralMetric | None = None) -> np.ndarray:
    """``F(e_i, e_j, e_k) = g(nabla_i (J e_j) - J nabla_i e_j, e_k)``."""
    J = np.asarray(J, dtype=float)
    nabla_J = np.einsum("mj,imk->ijk", J, Gamma) - np.einsum("km,ijm->ijk", J, Gamma)
    return np.einsum("ijm,mk->ijk", nabla_J, _G(g))


def fundamental_tensors(C, H: HypercomplexTriple | None = None,
                        g: NeutralMetric | None = None) -> list[np.ndarray]:
    H = H or standard_triple()
    Gamma = levi_civita(C, g)
    return [fundamental_tensor(J, Gamma, g) for J in H]


def lee_form(F, g: NeutralMetric | None = None) -> np.ndarray:
    """``theta(z) = g^{kl} F(e_k, e_l, z)``."""
    return np.einsum("kl,klz->z", np.linalg.inv(_G(g)), F)


def nijenhuis(J, C) -> np.ndarray:
    """``N[a, b] = [J e_a, J e_b] - J[J e_a, e_b] - J[e_a, J e_b] - [e_a, e_b]``."""
    J = np.asarray(J, dtype=float)
    E = np.eye(4)
    return (bracket_fields(C, J, J)
            - np.einsum("sm,abm->abs", J, bracket_fields(C, J, E))
            - np.einsum("sm,abm->abs", J, bracket_fields(C, E, J))
            - bracket_fields(C, E, E))


def cyclic_sum(T) -> np.ndarray:
    return T + np.einsum("ijk->jki", T) + np.einsum("ijk->kij", T)


def _last_slot_J(F, J) -> np.ndarray:
    # F(x, y, J z)
    return np.einsum("ijm,mk->ijk", F, J)


def w4_expression(theta, J, G) -> np.ndarray:
    tJ = theta @ J
    GJ = G @ J
    return 0.5 * (np.einsum("ij,k->ijk", G, theta) - np.einsum("ij,k->ijk", GJ, tJ)
                  - np.einsum("ik,j->ijk", G, theta) + np.einsum("ik,j->ijk", GJ, tJ))


def w1_expression(theta, J, G) -> np.ndarray:
    tJ = theta @ J
    GJ = G @ J
    return 0.25 * (np.einsum("ij,k->ijk", G, theta) + np.einsum("ij,k->ijk", GJ, tJ)
                   + np.einsum("ik,j->ijk", G, theta) + np.einsum("ik,j->ijk", GJ, tJ))


def symmetry_defects(F, J, eps: int) -> tuple[float, float]:
    """Residuals of ``F(x,y,z) = -eps F(x,z,y)`` and ``F(x,y,z) = -eps F(x,Jy,Jz)``."""
    J = np.asarray(J, dtype=float)
    swap = mat4.max_abs(F + eps * F.transpose(0, 2, 1))
    twist = mat4.max_abs(F + eps * np.einsum("ijk,ja,kb->iab", F, J, J))
    return swap, twist


def f_relation_defect(C, H: HypercomplexTriple | None = None, g: NeutralMetric | None = None,
                      *, Fs=None, sign_from: str = "beta") -> float:
    """Max violation of ``F_a(x,y,z) = F_b(x,J_c y,z) - eps F_c(x,y,J_b z)`` over cyclic (a,b,c).

    ``sign_from="beta"`` uses ``eps = eps_b``, which is what differentiating
    ``J_a = J_b J_c`` gives.  ``sign_from="alpha"`` uses ``eps_a`` as printed in
    the source; that variant only holds when ``F_1`` and ``F_3`` terms vanish.
    """
    if sign_from not in ("alpha", "beta"):
        raise ValueError("sign_from must be 'alpha' or 'beta'")
    H = H or standard_triple()
    if Fs is None:
        Fs = fundamental_tensors(C, H, g)
    Js = [np.asarray(J, dtype=float) for J in H]
    worst = 0.0
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps = H.eps[b] if sign_from == "beta" else H.eps[a]
        rhs = (np.einsum("imk,mj->ijk", Fs[b], Js[c])
               - eps * np.einsum("ijm,mk->ijk", Fs[c], Js[b]))
        worst = max(worst, mat4.max_abs(Fs[a] - rhs))
    return worst


@dataclass
class ClassificationReport:
    tol: float
    residuals: dict[str, float]
    verdicts: dict[str, bool]
    composite: dict[str, bool]
    family: str | None = None
    params: tuple[float, ...] | None = None
    most_specific: str | None = None
    expected: str | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def matches_table(self) -> bool | None:
        if self.expected is None:
            return None
        return self.composite[self.expected]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": None if self.params is None else list(self.params),
            "tol": self.tol,
            "residuals": dict(self.residuals),
            "verdicts": dict(self.verdicts),
            "composite": dict(self.composite),
            "most_specific": self.most_specific,
            "expected": self.expected,
            "matches_table": self.matches_table,
            "warnings": list(self.warnings),
        }


def class_residuals(C, H: HypercomplexTriple | None = None,
                    g: NeutralMetric | None = None) -> dict[str, float]:
    H = H or standard_triple()
    G = _G(g)
    C = as_constants(C)
    Fs = fundamental_tensors(C, H, g)
    thetas = [lee_form(F, g) for F in Fs]
    Js = [np.asarray(J, dtype=float) for J in H]
    r: dict[str, float] = {}

    for a in range(3):
        r[f"W0(J{a + 1})"] = mat4.max_abs(Fs[a])
        r[f"Nijenhuis(J{a + 1})"] = mat4.max_abs(nijenhuis(Js[a], C))

    F1, th1, J1 = Fs[0], thetas[0], Js[0]
    r["W2(J1)"] = mat4.max_abs(cyclic_sum(F1))
    r["W4(J1)"] = mat4.max_abs(F1 - w4_expression(th1, J1, G))
    for a in (1, 2):
        F, th, J = Fs[a], thetas[a], Js[a]
        name = f"J{a + 1}"
        sigma_fj = mat4.max_abs(cyclic_sum(_last_slot_J(F, J)))
        r[f"W1({name})"] = mat4.max_abs(F - w1_expression(th, J, G))
        r[f"W2({name})"] = max(sigma_fj, mat4.max_abs(th))
        r[f"W3({name})"] = mat4.max_abs(cyclic_sum(F))
        r[f"W1+W2({name})"] = sigma_fj

    omega = th1 @ J1
    r["d(theta1 J1)"] = mat4.max_abs(np.einsum("ijs,s->ij", C, omega))
    return r


def _verdicts(res: dict[str, float], tol: float) -> tuple[dict[str, bool], dict[str, bool]]:
    v = {k: bool(val <= tol) for k, val in res.items()}
    w12 = {n: v[f"W1({n})"] or v[f"W1+W2({n})"] for n in ("J2", "J3")}
    v["W1+W2(J2)"], v["W1+W2(J3)"] = w12["J2"], w12["J3"]
    hc = v["W4(J1)"] and w12["J2"] and w12["J3"]
    composite = {
        "K": v["W0(J1)"] and v["W0(J2)"] and v["W0(J3)"],
        "HC": hc,
        "HC'": v["W0(J1)"] and w12["J2"] and w12["J3"],
        "W0": v["W4(J1)"] and v["W1(J2)"] and v["W1(J3)"] and v["d(theta1 J1)"],
        "hypercomplex": all(v[f"Nijenhuis(J{a})"] for a in (1, 2, 3)),
    }
    return v, composite


def classify_constants(C, tol: float = CLASSIFY_TOL, H: HypercomplexTriple | None = None,
                       g: NeutralMetric | None = None) -> ClassificationReport:
    res = class_residuals(C, H, g)
    verdicts, composite = _verdicts(res, tol)
    most = next((name for name in COMPOSITE_ORDER if composite[name]), None)
    return ClassificationReport(tol=tol, residuals=res, verdicts=verdicts,
                                composite=composite, most_specific=most)


def classify(elem: FamilyElement, tol: float = CLASSIFY_TOL) -> ClassificationReport:
    """Classify the Lie algebra of ``elem.family`` with the standard triple and metric.

    The brackets of a family do not depend on ``(a, b, c, d)``; the parameters
    only pick an element ``A`` of the algebra.  When ``A = 0`` for a non-abelian
    family a warning is attached, but the algebra is classified all the same.
    """
    report = classify_constants(constants_from_family(elem.family), tol)
    report.family = elem.family.value
    report.params = elem.params
    report.expected = TABLE1[elem.family]
    if elem.family is not FamilyId.HC1 and not np.any(generator(elem)):
        msg = f"{elem.family}: generator vanishes at params {elem.params}; the algebra is still non-abelian"
        report.warnings.append(msg)
        log.warning(msg)
    return report
