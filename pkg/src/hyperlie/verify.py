"""Property suites behind ``hyperlie verify``.

Each suite returns a :class:`SuiteResult`.  The hypercomplex triple is looked up
through the ``hypercomplex`` module at call time so a test can swap in a
faulty triple and watch the suites fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from hyperlie import families, geometry, hypercomplex, known_groups, lie_algebra, mat4
from hyperlie.families import FAMILIES, Branch, FamilyId


@dataclass
class SuiteResult:
    name: str
    passed: bool
    worst: float
    tol: float
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "worst": self.worst,
                "tol": self.tol, "detail": self.detail}


def quaternion_suite() -> SuiteResult:
    H = hypercomplex.standard_triple()
    detail = {"quaternion": float(hypercomplex.quaternion_defect(H))}
    for a in (1, 2, 3):
        detail[f"compatibility(J{a})"] = float(hypercomplex.compatibility_defect(a, H))
    worst = max(detail.values())
    return SuiteResult("quaternion", worst == 0, worst, 0.0, detail)


def jacobi_suite() -> SuiteResult:
    detail = {}
    for fam in FAMILIES:
        C = lie_algebra.constants_from_matrices(lie_algebra.family_basis_matrices(fam))
        detail[fam.value] = max(lie_algebra.antisymmetry_defect(C), lie_algebra.jacobi_defect(C))
    worst = max(detail.values())
    return SuiteResult("jacobi", worst == 0, worst, 0.0, detail)


def oracle_suite(rng: np.random.Generator, trials: int = 200, tol: float = 1e-10) -> SuiteResult:
    detail = {}
    for fam in FAMILIES:
        worst = 0.0
        for _ in range(trials):
            elem = families.sample_generic(fam, rng)
            if fam is not FamilyId.HC1 and families.exp_coefficients(elem).branch is not Branch.GENERIC:
                worst = float("inf")
                break
            diff = mat4.max_abs(families.exp_closed_form(elem)
                                - mat4.exp_series(families.generator(elem), 1e-14))
            worst = max(worst, diff)
        detail[fam.value] = worst
    worst = max(detail.values())
    return SuiteResult("oracle", worst <= tol, worst, tol, detail)


def nijenhuis_suite(tol: float = 1e-10) -> SuiteResult:
    H = hypercomplex.standard_triple()
    detail = {}
    for fam in FAMILIES:
        C = lie_algebra.constants_from_family(fam)
        detail[fam.value] = max(mat4.max_abs(geometry.nijenhuis(J, C)) for J in H)
    worst = max(detail.values())
    return SuiteResult("nijenhuis", worst <= tol, worst, tol, detail)


def f_properties_suite(tol: float = 1e-10) -> SuiteResult:
    H = hypercomplex.standard_triple()
    detail = {}
    for fam in FAMILIES:
        C = lie_algebra.constants_from_family(fam)
        Fs = geometry.fundamental_tensors(C, H)
        worst = geometry.f_relation_defect(C, H, Fs=Fs)
        for a, (F, J) in enumerate(zip(Fs, H)):
            worst = max(worst, *geometry.symmetry_defects(F, J, H.eps[a]))
        detail[fam.value] = worst
    worst = max(detail.values())
    return SuiteResult("f_properties", worst <= tol, worst, tol, detail)


def closure_suite(rng: np.random.Generator, trials: int = 100) -> SuiteResult:
    tols = {known_groups.GroupId.G6: 1e-12, known_groups.GroupId.G8: 1e-10,
            known_groups.GroupId.G10: 1e-12}
    detail = {}
    passed = True
    for group, tol in tols.items():
        n = known_groups.N_PARAMS[group]
        worst = max(known_groups.closure_defect(group, rng.uniform(-2, 2, n), rng.uniform(-2, 2, n))
                    for _ in range(trials))
        detail[group.value] = worst
        passed &= worst <= tol
    return SuiteResult("closure", passed, max(detail.values()), 1e-10, detail)


def embedding_suite(rng: np.random.Generator, trials: int = 20, tol: float = 1e-12) -> SuiteResult:
    detail = {}
    for fam in (FamilyId.HC4_1, FamilyId.HC5_1):
        worst = 0.0
        for _ in range(trials):
            rep = known_groups.embedding_check(fam, float(rng.uniform(-5, 5)))
            worst = max(worst, rep.residual, rep.expected_residual)
        detail[fam.value] = worst
    g8 = known_groups.embedding_check(FamilyId.HC3_2)
    detail["hc3.2"] = g8.residual
    detail["hc3.2 stated angle residual"] = g8.expected_residual
    passed = max(detail["hc4.1"], detail["hc5.1"], detail["hc3.2"]) <= tol
    return SuiteResult("embeddings", passed, max(detail["hc4.1"], detail["hc5.1"], detail["hc3.2"]),
                       tol, detail)


def table1_rates(rng: np.random.Generator, trials: int, tol: float) -> dict[FamilyId, dict]:
    """Per family: match rate against the expected class and any deviating draws."""
    out = {}
    for fam in FAMILIES:
        hits = 0
        deviations = []
        worst: dict[str, float] = {}
        for _ in range(trials):
            elem = families.sample_generic(fam, rng)
            rep = geometry.classify(elem, tol)
            for k, v in rep.residuals.items():
                worst[k] = max(worst.get(k, 0.0), v)
            if rep.matches_table:
                hits += 1
            else:
                deviations.append({"params": list(elem.params), "residuals": rep.residuals})
        out[fam] = {"rate": hits / trials, "expected": geometry.TABLE1[fam],
                    "deviations": deviations, "worst_residuals": worst}
    return out


def run_all(seed: int = 42, trials: int = 100) -> list[SuiteResult]:
    rng = np.random.default_rng(seed)
    return [
        quaternion_suite(),
        jacobi_suite(),
        oracle_suite(rng, trials=max(trials, 1)),
        nijenhuis_suite(),
        f_properties_suite(),
        closure_suite(rng, trials=max(trials, 1)),
        embedding_suite(rng),
    ]
