"""The explicit matrix groups G6, G8, G10 and their embedding checks.

Parameter read-off maps (1-based matrix entries):

* G6:  x = (1,2), y = (1,4), z = (2,4), w = (3,4)
* G8:  x = atan2((1,2), (1,1)), y = (1,4), z = (2,4), w = (3,4)
* G10: x = (1,2), y = (1,3), z = (1,4), w = (2,3), v = (2,4)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from hyperlie import mat4
from hyperlie.families import FamilyElement, FamilyId, generator, quadratic_form


class GroupId(enum.Enum):
    G6 = "G6"
    G8 = "G8"
    G10 = "G10"


N_PARAMS = {GroupId.G6: 4, GroupId.G8: 4, GroupId.G10: 5}


def element(group: GroupId, params) -> np.ndarray:
    """Group element; params are ``(x, y, z, w)`` or ``(x, y, z, w, v)`` for G10."""
    p = [float(v) for v in params]
    if len(p) != N_PARAMS[group]:
        raise ValueError(f"{group.value} takes {N_PARAMS[group]} parameters, got {len(p)}")
    if group is GroupId.G6:
        x, y, z, w = p
        return np.array([[1, x, x * x / 2, y], [0, 1, x, z], [0, 0, 1, w], [0, 0, 0, 1]], dtype=float)
    if group is GroupId.G8:
        x, y, z, w = p
        cx, sx = math.cos(x), math.sin(x)
        return np.array([
            [cx, sx, 0, y],
            [-sx, cx, 0, z],
            [z * cx + y * sx, z * sx - y * cx, 1, w],
            [0, 0, 0, 1],
        ], dtype=float)
    x, y, z, w, v = p
    return np.array([[1, x, y, z], [0, 1, w, v], [0, 0, 1, w], [0, 0, 0, 1]], dtype=float)


def read_params(group: GroupId, M) -> tuple[float, ...]:
    M = np.asarray(M, dtype=float)
    if group is GroupId.G6:
        return (M[0, 1], M[0, 3], M[1, 3], M[2, 3])
    if group is GroupId.G8:
        return (math.atan2(M[0, 1], M[0, 0]), M[0, 3], M[1, 3], M[2, 3])
    return (M[0, 1], M[0, 2], M[0, 3], M[1, 2], M[1, 3])


def distance_to_group(group: GroupId, M) -> tuple[float, tuple[float, ...]]:
    """Residual of ``M`` against the element rebuilt from its read-off parameters."""
    p = read_params(group, M)
    return mat4.max_abs(np.asarray(M) - element(group, p)), p


def closure_defect(group: GroupId, p1, p2) -> float:
    return distance_to_group(group, element(group, p1) @ element(group, p2))[0]


@dataclass
class EmbeddingReport:
    family: str
    group: str
    family_params: tuple[float, float, float, float]
    t: float
    u: float
    group_params: tuple[float, ...]
    residual: float
    expected_params: tuple[float, ...] | None = None
    expected_residual: float | None = None
    alternatives: dict[str, dict] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "group": self.group,
            "family_params": list(self.family_params),
            "t": self.t,
            "u": self.u,
            "group_params": list(self.group_params),
            "residual": self.residual,
            "expected_params": None if self.expected_params is None else list(self.expected_params),
            "expected_residual": self.expected_residual,
            "alternatives": self.alternatives,
            "notes": list(self.notes),
        }


EMBEDDINGS = {
    FamilyId.HC4_1: GroupId.G6,
    FamilyId.HC3_2: GroupId.G8,
    FamilyId.HC5_1: GroupId.G10,
}


def embedding_check(family: FamilyId, value: float | None = None) -> EmbeddingReport:
    """Check that ``E + tA + uA^2`` with the stated substitutions lies in the group.

    * hc4.1 -> G6: ``t=1, u=a=b=c=0``, free ``d`` (default 1), expect ``y = d``.
    * hc5.1 -> G10: ``t=1, u=a=c=d=0``, free ``b`` (default 1), expect ``x = b``.
    * hc3.2 -> G8: ``t=1, u=a=b=0, c=-1, d=1`` (no free parameter).  The stated
      angle ``x = 3pi/2`` and the best fit are both reported, as is the
      group distance of ``exp(A)`` itself.
    """
    if family not in EMBEDDINGS:
        raise ValueError(f"no embedding is stated for {family}")
    group = EMBEDDINGS[family]
    t, u = 1.0, 0.0
    notes: list[str] = []
    alternatives: dict[str, dict] = {}

    if family is FamilyId.HC4_1:
        d = 1.0 if value is None else float(value)
        elem = FamilyElement(family, (0.0, 0.0, 0.0, d))
        expected = (0.0, d, 0.0, 0.0)
    elif family is FamilyId.HC5_1:
        b = 1.0 if value is None else float(value)
        elem = FamilyElement(family, (0.0, b, 0.0, 0.0))
        expected = (b, 0.0, 0.0, 0.0, 0.0)
    else:
        elem = FamilyElement(family, (0.0, 0.0, -1.0, 1.0))
        expected = (3 * math.pi / 2, 0.0, 0.0, 0.0)

    M = quadratic_form(generator(elem), t, u)
    residual, found = distance_to_group(group, M)
    exp_res = mat4.max_abs(M - element(group, expected))

    if family is FamilyId.HC3_2:
        for label, x in (("pi/2", math.pi / 2), ("3pi/2", 3 * math.pi / 2)):
            alternatives[label] = {
                "x": x,
                "residual": mat4.max_abs(M - element(group, (x, 0.0, 0.0, 0.0))),
            }
        dist_exp, p_exp = distance_to_group(group, mat4.exp_series(generator(elem), 1e-14))
        alternatives["exp(A)"] = {"group_params": list(p_exp), "residual": dist_exp}
        if exp_res > 1e-12:
            notes.append(
                f"stated angle 3pi/2 gives residual {exp_res:.3g}; best fit x = {found[0]:.15g} "
                f"(pi/2 mod 2pi) gives residual {residual:.3g}"
            )
        if dist_exp > 1e-12:
            notes.append(
                f"exp(A) itself is not in G8 (distance {dist_exp:.3g}); only E + A is"
            )

    return EmbeddingReport(
        family=family.value,
        group=group.value,
        family_params=elem.params,
        t=t,
        u=u,
        group_params=tuple(float(v) for v in found),
        residual=residual,
        expected_params=expected,
        expected_residual=exp_res,
        alternatives=alternatives,
        notes=notes,
    )
