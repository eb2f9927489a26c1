"""Instance files and the JSON report schema (``obp-report/1``).

Instance files are JSON objects {"n": ..., "sigma": [...], "k": [...]} with
1-based entries.  Reports echo the input, the admissibility verdicts and,
after a build, the spectral and geometric data; floating-point values are
rounded to OBP_REPORT_PRECISION significant digits (default 15).
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .admissibility import AdmissibilityReport, check_admissible, examine
from .core import ObpInstance, build_blocks, build_tau, decompose_orbits, invert_obp
from .errors import ParseError
from .geometry import Surface, intersection_form, symplectic_check, verify_surface
from .spectral import build_matrix

SCHEMA = "obp-report/1"
DEFAULT_PRECISION = 15

__all__ = [
    "SCHEMA",
    "load_instance",
    "parse_instance",
    "instance_to_dict",
    "report_precision",
    "build_check_report",
    "build_full_report",
]


def report_precision() -> int:
    raw = os.environ.get("OBP_REPORT_PRECISION", "")
    if not raw:
        return DEFAULT_PRECISION
    try:
        digits = int(raw)
    except ValueError:
        return DEFAULT_PRECISION
    return digits if 1 <= digits <= 17 else DEFAULT_PRECISION


def _round(value: float, digits: int) -> float:
    return float(f"{value:.{digits}g}")


def parse_instance(data: object, source: str = "<data>") -> ObpInstance:
    """Validate a decoded instance object; raise ParseError with the bad field."""
    if not isinstance(data, dict):
        raise ParseError(f"{source}: expected a JSON object, got {type(data).__name__}")
    missing = [key for key in ("n", "sigma", "k") if key not in data]
    if missing:
        raise ParseError(f"{source}: missing field(s) {', '.join(missing)}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f"{source}: field 'n' must be an integer")
    for name in ("sigma", "k"):
        value = data[name]
        if not isinstance(value, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value
        ):
            raise ParseError(f"{source}: field '{name}' must be an array of integers")
    try:
        return ObpInstance(n, tuple(data["sigma"]), tuple(data["k"]))
    except ValueError as exc:
        raise ParseError(f"{source}: {exc}") from exc


def load_instance(path: str | Path) -> ObpInstance:
    """Read and validate an instance file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_instance(data, str(path))


def instance_to_dict(inst: ObpInstance) -> dict:
    return {"n": inst.n, "sigma": list(inst.sigma), "k": list(inst.k)}


def _combinatorics_block(inst: ObpInstance) -> dict:
    blocks = build_blocks(inst)
    obp = build_tau(inst, blocks)
    dec = decompose_orbits(obp, inst)
    matrix = build_matrix(dec, blocks)
    return {
        "tau": list(obp.tau),
        "orbits": [list(o) for o in dec.orbits],
        "m": list(dec.m),
        "A": [list(row) for row in matrix.a],
    }


def build_check_report(inst: ObpInstance, report: AdmissibilityReport | None = None) -> dict:
    """Report for an admissibility check: echo, strand data, verdicts."""
    if report is None:
        report = check_admissible(inst)
    out = {
        "schema": SCHEMA,
        "instance": instance_to_dict(inst),
        "K": inst.K,
    }
    out.update(_combinatorics_block(inst))
    out["admissibility"] = report.to_dict()
    out["side"] = report.side.value if report.side is not None else None
    return out


def build_full_report(surface: Surface) -> dict:
    """Report for a completed build; geometry values refer to the instance
    actually constructed (the inverse one when ``conjugated`` is set)."""
    digits = report_precision()
    inst = surface.original
    out = build_check_report(inst, surface.report)

    form = intersection_form(inst.sigma)
    input_report, _dec, input_matrix = examine(inst)
    del input_report
    sym = symplectic_check(input_matrix, form)
    out["S"] = [list(row) for row in form.s]
    out["symplectic"] = sym.to_dict()

    pd = surface.pd
    sing = surface.singularities
    problems = verify_surface(surface)
    out.update(
        {
            "conjugated": surface.conjugated,
            "geometry_instance": instance_to_dict(surface.instance),
            "normalization": pd.normalization.value,
            "lambda": _round(pd.lam, digits),
            "l": [_round(v, digits) for v in pd.l],
            "h": [_round(v, digits) for v in pd.h],
            "residual_l": _round(pd.residual_l, 3),
            "residual_h": _round(pd.residual_h, 3),
            "x": [_round(v, digits) for v in surface.edges.x],
            "y": [_round(v, digits) for v in surface.edges.y],
            "gluings": _rounded_gluings(surface.gluings, digits),
            "singularities": {
                "classes": [list(c) for c in sing.classes],
                "multiplicities": list(sing.p),
                "cone_angles": [_round(a, digits) for a in sing.cone_angles],
                "nu": sing.nu,
                "genus": sing.genus,
                "stratum": list(sing.stratum),
                "base_label": sing.base_label,
            },
            "lambda_bounds": {
                "status": surface.bounds.status,
                "detail": surface.bounds.detail,
            },
            "checks": {
                "internal_invariants": {"passed": not problems, "problems": problems},
            },
        }
    )
    return out


def _rounded_gluings(gluings: tuple[dict, ...], digits: int) -> list[dict]:
    def conv(value):
        if isinstance(value, float):
            return _round(value, digits)
        if isinstance(value, dict):
            return {k: conv(v) for k, v in value.items()}
        if isinstance(value, list):
            return [conv(v) for v in value]
        return value

    return [conv(dict(entry)) for entry in gluings]


def invert_instance_dict(inst: ObpInstance) -> dict:
    return instance_to_dict(invert_obp(inst))
