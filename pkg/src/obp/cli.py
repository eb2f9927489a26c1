"""Command-line interface.

Exit codes: 0 success, 1 malformed input or bad flags, 2 inadmissible
instance (or empty search range), 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .admissibility import check_admissible
from .errors import EmptySearchSpace, ObpError, ParseError
from .geometry import build_geometry, verify_surface
from .report import (
    build_check_report,
    build_full_report,
    instance_to_dict,
    load_instance,
    report_precision,
)
from .search import SearchSpec, min_dilatation, run_search
from .spectral import Normalization
from .svg import build_svg

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INADMISSIBLE = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    # the exit-code contract reserves 2 for inadmissible instances
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_json(data: dict, out: str | None) -> None:
    _write(json.dumps(data, indent=2) + "\n", out)


def cmd_check(args) -> int:
    inst = load_instance(args.instance)
    report = check_admissible(inst)
    _write_json(build_check_report(inst, report), args.output)
    return EXIT_OK if report.overall else EXIT_INADMISSIBLE


def cmd_build(args) -> int:
    inst = load_instance(args.instance)
    report = check_admissible(inst)
    if not report.overall:
        _write_json(build_check_report(inst, report), args.output)
        print(
            f"instance is not admissible (first failing condition: {report.first_failed})",
            file=sys.stderr,
        )
        return EXIT_INADMISSIBLE
    try:
        surface = build_geometry(inst, Normalization(args.normalize))
        full = build_full_report(surface)
    except ObpError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _write_json(full, args.output)
    if not full["checks"]["internal_invariants"]["passed"]:
        problems = full["checks"]["internal_invariants"]["problems"]
        print(f"internal invariant failure: {problems}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_svg(args) -> int:
    inst = load_instance(args.instance)
    report = check_admissible(inst)
    if not report.overall:
        print(
            f"instance is not admissible (first failing condition: {report.first_failed})",
            file=sys.stderr,
        )
        return EXIT_INADMISSIBLE
    if args.highlight_orbit is not None and not 1 <= args.highlight_orbit <= inst.n:
        print(f"--highlight-orbit must be in 1..{inst.n}", file=sys.stderr)
        return EXIT_INPUT
    try:
        surface = build_geometry(inst)
    except ObpError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _write(build_svg(surface, args.highlight_orbit), args.output)
    return EXIT_OK


def _result_row(result, digits: int) -> dict:
    return {
        "n": result.instance.n,
        "sigma": list(result.instance.sigma),
        "k": list(result.instance.k),
        "K": result.instance.K,
        "m": list(result.m),
        "side": result.side.value,
        "lambda": float(f"{result.lam:.{digits}g}"),
        "genus": result.genus,
        "nu": result.nu,
        "stratum": list(result.stratum),
    }


def cmd_search(args) -> int:
    if args.n < 2:
        print("--n must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    if args.kmax < args.n:
        print("--kmax must be at least n", file=sys.stderr)
        return EXIT_INPUT
    spec = SearchSpec(args.n, args.kmax)
    digits = report_precision()
    if args.min_dilatation:
        try:
            best = min_dilatation(spec)
        except EmptySearchSpace as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_INADMISSIBLE
        _write(json.dumps(_result_row(best, digits)) + "\n", args.output)
        return EXIT_OK
    results, counters = run_search(spec, workers=args.workers)
    lines = [json.dumps(_result_row(r, digits)) for r in results]
    _write("".join(line + "\n" for line in lines), args.output)
    print(json.dumps(counters.to_dict()), file=sys.stderr)
    return EXIT_OK


def cmd_invert(args) -> int:
    inst = load_instance(args.instance)
    from .core import invert_obp

    _write_json(instance_to_dict(invert_obp(inst)), args.output)
    return EXIT_OK


def _make_parser() -> _Parser:
    parser = _Parser(prog="obp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide admissibility of an instance file")
    p_check.add_argument("instance")
    p_check.add_argument("-o", "--output")
    p_check.set_defaults(func=cmd_check)

    p_build = sub.add_parser("build", help="construct the full surface report")
    p_build.add_argument("instance")
    p_build.add_argument(
        "--normalize",
        choices=[norm.value for norm in Normalization],
        default=Normalization.SUM_H.value,
    )
    p_build.add_argument("-o", "--output")
    p_build.set_defaults(func=cmd_build)

    p_svg = sub.add_parser("svg", help="render the rectangle decomposition as SVG")
    p_svg.add_argument("instance")
    p_svg.add_argument("--highlight-orbit", type=int, default=None)
    p_svg.add_argument("-o", "--output")
    p_svg.set_defaults(func=cmd_svg)

    p_search = sub.add_parser("search", help="enumerate admissible instances")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--kmax", type=int, required=True)
    p_search.add_argument("--min-dilatation", action="store_true")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("-o", "--output")
    p_search.set_defaults(func=cmd_search)

    p_invert = sub.add_parser("invert", help="write the inverse instance")
    p_invert.add_argument("instance")
    p_invert.add_argument("-o", "--output")
    p_invert.set_defaults(func=cmd_invert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
