"""Command-line front end.

JSON output has the top-level keys ``command``, ``config``, ``results``,
``verdicts`` and ``residuals``.  Exit codes: 0 success, 1 property failure,
2 usage error.  ``HYPERLIE_SEED`` overrides ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass

import numpy as np

from hyperlie import families, geometry, mat4, verify
from hyperlie.families import FAMILIES, FamilyElement, FamilyId

log = logging.getLogger("hyperlie")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    params: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    tol: float = 1e-10
    trials: int = 100
    seed: int = 42
    format: str = "json"


def _params(text: str) -> tuple[float, float, float, float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"params must be numbers a,b,c,d: {text!r}")
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("params must have exactly four entries a,b,c,d")
    return tuple(vals)


def _family(text: str) -> str:
    try:
        return FamilyId.parse(text).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _count(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("trials must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=_family, help="hc1, hc2, hc3.1, hc3.2, hc4.1, hc4.2, hc5.1, hc5.2")
    common.add_argument("--params", type=_params, default=(0.0, 0.0, 0.0, 0.0),
                        help="a,b,c,d (slots a family does not use are ignored)")
    common.add_argument("--tol", type=_positive, default=1e-10)
    common.add_argument("--trials", type=_count, default=100)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="hyperlie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("exp", parents=[common], help="closed-form exponential vs series oracle")
    sub.add_parser("classify", parents=[common], help="class residuals and verdicts")
    sub.add_parser("table1", parents=[common], help="reproduce the family -> class table")
    sub.add_parser("verify", parents=[common], help="run every property suite")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    seed = ns.seed
    env = os.environ.get("HYPERLIE_SEED")
    if env is not None:
        seed = int(env)
    return RunConfig(command=ns.command, family=ns.family, params=tuple(ns.params),
                     tol=ns.tol, trials=ns.trials, seed=seed, format=ns.format)


def _matrix(M) -> list[list[float]]:
    return [[float(v) for v in row] for row in np.asarray(M)]


def cmd_exp(cfg: RunConfig) -> tuple[dict, int]:
    elem = FamilyElement(FamilyId.parse(cfg.family), cfg.params)
    A = families.generator(elem)
    co = families.exp_coefficients(elem)
    closed = families.exp_closed_form(elem)
    oracle = mat4.exp_series(A, 1e-14)
    diff = mat4.max_abs(closed - oracle)
    fallback = co.branch is families.Branch.ORACLE_FALLBACK
    report = families.branch_report(elem)
    for note in report.notes:
        log.warning("%s", note)
    out = {
        "results": {
            "generator": _matrix(A),
            "t": None if fallback else co.t,
            "u": None if fallback else co.u,
            "branch": co.branch.value,
            "closed_form": _matrix(closed),
            "oracle": _matrix(oracle),
            "branch_report": report.to_dict(),
        },
        "verdicts": {"closed_form_matches_oracle": diff <= cfg.tol,
                     "published_branch_consistent": report.published_consistent},
        "residuals": {"closed_form_vs_oracle": diff},
    }
    return out, EXIT_OK if diff <= cfg.tol else EXIT_FAIL


def cmd_classify(cfg: RunConfig) -> tuple[dict, int]:
    elem = FamilyElement(FamilyId.parse(cfg.family), cfg.params)
    rep = geometry.classify(elem, cfg.tol)
    out = {
        "results": {"family": rep.family, "params": list(rep.params),
                    "most_specific": rep.most_specific, "expected": rep.expected,
                    "matches_table": rep.matches_table, "warnings": rep.warnings},
        "verdicts": {**rep.verdicts, **rep.composite},
        "residuals": rep.residuals,
    }
    return out, EXIT_OK


def cmd_table1(cfg: RunConfig) -> tuple[dict, int]:
    rates = verify.table1_rates(np.random.default_rng(cfg.seed), cfg.trials, cfg.tol)
    results, verdicts, residuals = {}, {}, {}
    for fam, info in rates.items():
        results[fam.value] = {"expected": info["expected"], "match_rate": info["rate"],
                              "deviations": info["deviations"]}
        verdicts[fam.value] = info["rate"] >= 0.99
        residuals[fam.value] = info["worst_residuals"]
        for dev in info["deviations"]:
            log.warning("%s deviates from %s at %s: %s", fam.value, info["expected"],
                        dev["params"], dev["residuals"])
    matched = sum(verdicts.values())
    results["summary"] = f"{matched}/{len(FAMILIES)} families matching"
    return ({"results": results, "verdicts": verdicts, "residuals": residuals},
            EXIT_OK if matched == len(FAMILIES) else EXIT_FAIL)


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    suites = verify.run_all(seed=cfg.seed, trials=cfg.trials)
    out = {
        "results": {s.name: s.to_dict() for s in suites},
        "verdicts": {s.name: s.passed for s in suites},
        "residuals": {s.name: s.worst for s in suites},
    }
    return out, EXIT_OK if all(s.passed for s in suites) else EXIT_FAIL


COMMANDS = {"exp": cmd_exp, "classify": cmd_classify, "table1": cmd_table1, "verify": cmd_verify}


def _text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    for key in ("verdicts", "residuals"):
        lines.append(f"{key}:")
        for name, val in doc[key].items():
            lines.append(f"  {name}: {val}")
    res = doc["results"]
    if doc["command"] == "exp":
        lines.append(f"branch: {res['branch']}  t={res['t']}  u={res['u']}")
        for label in ("generator", "closed_form", "oracle"):
            lines.append(f"{label}:")
            lines.extend("  " + " ".join(f"{v: .12g}" for v in row) for row in res[label])
    elif doc["command"] == "classify":
        lines.append(f"most specific class: {res['most_specific']} (expected {res['expected']})")
    elif doc["command"] == "table1":
        lines.append(res["summary"])
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.WARNING)
    try:
        return _run(argv)
    finally:
        log.removeHandler(handler)


def _run(argv: list[str] | None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = _config(ns)
    if cfg.command in ("exp", "classify") and cfg.family is None:
        parser.error(f"{cfg.command} requires --family")
    body, code = COMMANDS[cfg.command](cfg)
    doc = {"command": cfg.command, "config": asdict(cfg), **body}
    doc["config"]["params"] = list(cfg.params)
    if cfg.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(_text(doc))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
