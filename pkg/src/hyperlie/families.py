"""The eight generator families and their closed-form exponentials.

Each family is a 4x4 layout ``A(a, b, c, d)`` linear in the parameters.  For
every family there are scalars ``t, u`` with ``exp(A) = E + t A + u A^2``; the
published formulas for ``(t, u)`` are used on their generic branch.

Branch policy (``exp_coefficients``):

1. ``A == 0``: ``(t, u) = (1, 0)``, tag ``degenerate``.
2. ``A`` nilpotent of index ``q <= 3``: truncated series, ``(1, 0)`` for
   ``q <= 2`` and ``(1, 1/2)`` for ``q == 3``, tag ``degenerate``.
3. Generic condition of the family holds: published ``(t, u)``, tag ``generic``.
   For ``hc2`` with ``0 < delta < 1e-12`` the same coefficients are taken from
   their Taylor expansions.
4. Anything else: ``oracle_fallback`` and ``exp_closed_form`` returns the
   series exponential.

The published degenerate cases are not used blindly; ``branch_report``
compares them against the series oracle.  For ``hc2`` with ``(b, c) = (0, 0)``
and ``d != 0`` the published ``(1, 0)`` is wrong (``A`` generates a rotation)
and the report flags it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from hyperlie import mat4

DELTA_TAYLOR = 1e-12
NILPOTENT_REL_TOL = 1e-13
CONSISTENCY_TOL = 1e-10


class FamilyId(enum.Enum):
    HC1 = "hc1"
    HC2 = "hc2"
    HC3_1 = "hc3.1"
    HC3_2 = "hc3.2"
    HC4_1 = "hc4.1"
    HC4_2 = "hc4.2"
    HC5_1 = "hc5.1"
    HC5_2 = "hc5.2"

    @classmethod
    def parse(cls, name: str) -> "FamilyId":
        """Accept ``hc3.1``, ``hc3_1`` or ``HC3_1``."""
        key = name.strip().lower().replace("_", ".")
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown family {name!r}; expected one of {[f.value for f in cls]}")

    def __str__(self) -> str:
        return self.value


FAMILIES = tuple(FamilyId)


class Branch(str, enum.Enum):
    GENERIC = "generic"
    DEGENERATE = "degenerate"
    ORACLE_FALLBACK = "oracle_fallback"


@dataclass(frozen=True)
class FamilyElement:
    family: FamilyId
    params: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        if not isinstance(self.family, FamilyId):
            object.__setattr__(self, "family", FamilyId.parse(str(self.family)))
        p = tuple(float(v) for v in self.params)
        if len(p) != 4:
            raise ValueError("params must be (a, b, c, d)")
        if not all(math.isfinite(v) for v in p):
            raise ValueError("params must be finite")
        object.__setattr__(self, "params", p)


@dataclass(frozen=True)
class ExpCoefficients:
    t: float
    u: float
    branch: Branch


def generator(elem: FamilyElement) -> np.ndarray:
    """The generator matrix ``A(a, b, c, d)`` of ``elem.family``."""
    a, b, c, d = elem.params
    f = elem.family
    if f is FamilyId.HC1:
        rows = [[0, 0, 0, 0]] * 4
    elif f is FamilyId.HC2:
        rows = [[0, 0, 0, 0], [0, 0, d, -c], [0, -d, 0, b], [0, c, -b, 0]]
    elif f is FamilyId.HC3_1:
        rows = [[0, d, 0, -b], [0, c, 0, a], [0, -b, 0, -d], [0, -a, 0, c]]
    elif f is FamilyId.HC3_2:
        rows = [[c, d, 0, 0], [-d, c, 0, 0], [-a, -b, 0, 0], [b, -a, 0, 0]]
    elif f is FamilyId.HC4_1:
        rows = [[0, b, c, d], [0, -a, 0, 0], [0, 0, -a, 0], [0, 0, 0, -a]]
    elif f is FamilyId.HC4_2:
        rows = [[-d, 0, 0, 0], [0, -d, 0, 0], [0, 0, -d, 0], [a, b, c, 0]]
    elif f is FamilyId.HC5_1:
        rows = [[0, b, c / 2, d / 2], [0, -a, 0, 0], [0, d / 2, -a / 2, 0], [0, -c / 2, 0, -a / 2]]
    elif f is FamilyId.HC5_2:
        rows = [[-d / 2, 0, -b / 2, 0], [0, -d / 2, a / 2, 0], [0, 0, -d, 0], [a / 2, b / 2, c, 0]]
    else:  # pragma: no cover
        raise ValueError(f)
    return np.array(rows, dtype=float)


def delta(elem: FamilyElement) -> float | None:
    """The discriminant used by hc2, hc3.1 and hc3.2 (``None`` for the rest)."""
    a, b, c, d = elem.params
    if elem.family is FamilyId.HC2:
        return b * b + c * c + d * d
    if elem.family is FamilyId.HC3_1:
        return a * (a * a + c * c)
    if elem.family is FamilyId.HC3_2:
        return d * (c * c + d * d)
    return None


def generic_condition(elem: FamilyElement) -> bool:
    """Whether the published generic-branch formulas are defined at ``elem``.

    For hc2 this is ``delta != 0``, which is wider than the published
    ``(b, c) != (0, 0)``; the generic formulas stay valid there.
    """
    a, b, c, d = elem.params
    f = elem.family
    if f is FamilyId.HC1:
        return False
    if f in (FamilyId.HC2, FamilyId.HC3_1, FamilyId.HC3_2):
        return delta(elem) != 0.0
    if f in (FamilyId.HC4_1, FamilyId.HC5_1):
        return a != 0.0
    return d != 0.0


def _hc2_tu(D: float) -> tuple[float, float]:
    if D < DELTA_TAYLOR:
        # sin(r)/r and (1 - cos r)/r^2 in powers of D = r^2
        t = 1.0 - D / 6.0 + D * D / 120.0 - D**3 / 5040.0
        u = 0.5 - D / 24.0 + D * D / 720.0 - D**3 / 40320.0
        return t, u
    r = math.sqrt(D)
    # 1 - cos r = 2 sin^2(r/2) avoids cancellation for small r
    return math.sin(r) / r, 2.0 * math.sin(r / 2.0) ** 2 / D


def _rotation_tu(x: float, y: float, D: float) -> tuple[float, float]:
    # Shared by hc3.1 (x=a, y=c) and hc3.2 (x=d, y=c).
    ey = math.exp(y)
    t = (-2.0 * x * y * (1.0 - ey * math.cos(x)) + (x * x - y * y) * ey * math.sin(x)) / D
    u = (x * (1.0 - ey * math.cos(x)) + y * ey * math.sin(x)) / D
    return t, u


def published_tu(elem: FamilyElement) -> tuple[float, float]:
    """Evaluate the published generic-branch ``(t, u)`` at ``elem``.

    Raises ``ZeroDivisionError`` where the formula is undefined.
    """
    a, b, c, d = elem.params
    f = elem.family
    if f is FamilyId.HC1:
        return 1.0, 0.0
    if f is FamilyId.HC2:
        D = delta(elem)
        if D == 0.0:
            raise ZeroDivisionError("hc2 generic formula needs delta != 0")
        return _hc2_tu(D)
    if f is FamilyId.HC3_1:
        return _rotation_tu(a, c, delta(elem))
    if f is FamilyId.HC3_2:
        return _rotation_tu(d, c, delta(elem))
    if f in (FamilyId.HC4_1, FamilyId.HC4_2):
        s = a if f is FamilyId.HC4_1 else d
        return 1.0 / s, math.exp(-s) / (s * s)
    s = a if f is FamilyId.HC5_1 else d
    e1, e2 = math.exp(-s), math.exp(-s / 2.0)
    return (e1 - 4.0 * e2 + 3.0) / s, (2.0 * e1 - 4.0 * e2 + 2.0) / (s * s)


def exp_coefficients(elem: FamilyElement) -> ExpCoefficients:
    A = generator(elem)
    q = mat4.nilpotency_index(A, NILPOTENT_REL_TOL)
    if q is not None and q <= 2:
        return ExpCoefficients(1.0, 0.0, Branch.DEGENERATE)
    if q == 3:
        return ExpCoefficients(1.0, 0.5, Branch.DEGENERATE)
    if generic_condition(elem):
        t, u = published_tu(elem)
        if math.isfinite(t) and math.isfinite(u):
            return ExpCoefficients(t, u, Branch.GENERIC)
    return ExpCoefficients(math.nan, math.nan, Branch.ORACLE_FALLBACK)


def quadratic_form(A, t: float, u: float) -> np.ndarray:
    """``E + t A + u A^2``."""
    return np.eye(4) + t * A + u * (A @ A)


def exp_closed_form(elem: FamilyElement) -> np.ndarray:
    """``exp(A)`` for the family element, via ``E + t A + u A^2`` where possible.

    Falls back to ``mat4.exp_series(A, 1e-14)`` on the ``oracle_fallback`` branch;
    check ``exp_coefficients(elem).branch`` to detect that case.
    """
    A = generator(elem)
    co = exp_coefficients(elem)
    if co.branch is Branch.ORACLE_FALLBACK:
        return mat4.exp_series(A, 1e-14)
    return quadratic_form(A, co.t, co.u)


def published_branch(elem: FamilyElement) -> tuple[str, tuple[float, float] | None]:
    """Which published case applies at ``elem``, read literally.

    Returns ``("generic" | "degenerate" | "none", (t, u) or None)``.
    """
    a, b, c, d = elem.params
    f = elem.family
    if f is FamilyId.HC1:
        return "degenerate", (1.0, 0.0)
    if f is FamilyId.HC2:
        if (b, c) != (0.0, 0.0):
            return "generic", published_tu(elem)
        return "degenerate", (1.0, 0.0)
    if f in (FamilyId.HC3_1, FamilyId.HC3_2):
        pair = (a, c) if f is FamilyId.HC3_1 else (c, d)
        if delta(elem) != 0.0:
            return "generic", published_tu(elem)
        if pair == (0.0, 0.0):
            return "degenerate", (1.0, 0.0)
        return "none", None
    s = a if f in (FamilyId.HC4_1, FamilyId.HC5_1) else d
    if s != 0.0:
        return "generic", published_tu(elem)
    return "degenerate", (1.0, 0.0)


@dataclass
class BranchReport:
    family: str
    params: tuple[float, float, float, float]
    published_branch: str
    published_tu: tuple[float, float] | None
    published_residual: float | None
    published_consistent: bool | None
    used_branch: str
    used_tu: tuple[float, float] | None
    used_residual: float
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "published_branch": self.published_branch,
            "published_tu": None if self.published_tu is None else list(self.published_tu),
            "published_residual": self.published_residual,
            "published_consistent": self.published_consistent,
            "used_branch": self.used_branch,
            "used_tu": None if self.used_tu is None else list(self.used_tu),
            "used_residual": self.used_residual,
            "notes": list(self.notes),
        }


def branch_report(elem: FamilyElement, tol: float = CONSISTENCY_TOL) -> BranchReport:
    """Compare the published case split and the branch actually used against the oracle."""
    A = generator(elem)
    oracle = mat4.exp_series(A, 1e-14)
    pub_name, pub_tu = published_branch(elem)
    notes = []
    pub_res = pub_ok = None
    if pub_tu is not None:
        pub_res = mat4.max_abs(quadratic_form(A, *pub_tu) - oracle)
        pub_ok = pub_res <= tol
        if not pub_ok:
            notes.append(
                f"published {pub_name} branch (t, u) = {pub_tu} disagrees with the series "
                f"exponential by {pub_res:.3g}"
            )
    else:
        notes.append("no published formula covers these parameters")

    co = exp_coefficients(elem)
    used = exp_closed_form(elem)
    used_tu = None if co.branch is Branch.ORACLE_FALLBACK else (co.t, co.u)
    if co.branch is Branch.ORACLE_FALLBACK:
        notes.append("closed form unavailable; series exponential used")
    return BranchReport(
        family=elem.family.value,
        params=elem.params,
        published_branch=pub_name,
        published_tu=pub_tu,
        published_residual=pub_res,
        published_consistent=pub_ok,
        used_branch=co.branch.value,
        used_tu=used_tu,
        used_residual=mat4.max_abs(used - oracle),
        notes=notes,
    )


# Parameter that must stay away from zero for a draw to be generic.
_GENERIC_MARGIN = 0.1


def is_generic_draw(elem: FamilyElement, margin: float = _GENERIC_MARGIN) -> bool:
    a, b, c, d = elem.params
    f = elem.family
    if f is FamilyId.HC1:
        return True
    if f is FamilyId.HC2:
        return math.hypot(b, c) >= margin
    if f in (FamilyId.HC3_1, FamilyId.HC4_1, FamilyId.HC5_1):
        return abs(a) >= margin
    return abs(d) >= margin


def sample_generic(family: FamilyId, rng: np.random.Generator, low: float = -2.0,
                   high: float = 2.0) -> FamilyElement:
    """Uniform draw from ``[low, high]^4`` conditioned on being generic."""
    while True:
        elem = FamilyElement(family, tuple(rng.uniform(low, high, 4)))
        if is_generic_draw(elem):
            return elem
