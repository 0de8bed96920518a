"""``esp-spectra`` command line: build | member | verify | derivative-cone.

Exit codes: 0 success (member for ``member``), 1 check failed or point
outside, 2 usage or input error, 3 guard limit exceeded (``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import EspSpectraError, GuardExceeded
from .export import parse_point, pencil_from_json, pencil_to_json, pencil_to_sdpa, read_forms
from .pencil import build_esp_pencil, derivative_cone_pencil, membership_certificate
from .poly import elem_sym_values
from .verify import IDENTITY_MIN_RANGE, TrialConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR, EXIT_GUARD = 0, 1, 2, 3
DEFAULT_CONE_RANGE = 1000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    # binary mode keeps "\n" line endings on every platform
    Path(out).write_bytes(text.encode("utf-8"))


def _render(P, fmt: str, objective: str | None) -> str:
    if fmt == "json":
        return pencil_to_json(P)
    return pencil_to_sdpa(P, parse_point(objective, P.n) if objective else None)


def cmd_build(args) -> int:
    P = build_esp_pencil(args.n, args.k)
    _write(_render(P, args.format, args.objective), args.out)
    return EXIT_OK


def cmd_member(args) -> int:
    if args.pencil:
        P = pencil_from_json(Path(args.pencil).read_text())
    elif args.n is not None and args.k is not None:
        P = build_esp_pencil(args.n, args.k)
    else:
        raise ValueError("give either --pencil PATH or both --n and --k")
    x = parse_point(args.point, P.n)
    verdict, cert = membership_certificate(P, x)
    print(verdict.value)
    if args.explain:
        print(f"pencil size m={P.m}; elimination pivots: {len(cert.pivots)}")
        if cert.witness is not None:
            vec = ",".join(str(v) for v in cert.witness)
            print(f"witness v=({vec}) with v^T A(x) v = {cert.witness_value}")
        else:
            index, pivot = min(cert.pivots, key=lambda ip: ip[1])
            print(f"smallest pivot: {pivot} (row {index + 1})")
        if P.provenance.kind == "esp":
            values = elem_sym_values(x, P.k + 1)
            for j in range(1, P.k + 2):
                print(f"e_{j}(x) = {values[j]}")
    return EXIT_OK if verdict.is_member else EXIT_FAIL


def cmd_verify(args) -> int:
    identity_range = args.range if args.range is not None else IDENTITY_MIN_RANGE
    cfg = TrialConfig(seed=args.seed, trials=args.trials, coordinate_range=identity_range)
    cone_cfg = TrialConfig(seed=args.seed, trials=args.trials,
                           coordinate_range=args.cone_range or DEFAULT_CONE_RANGE)
    try:
        reports = run_suite(args.suite, args.n, args.k, args.r, cfg, cone_cfg)
    except GuardExceeded as exc:
        print(f"GUARD EXCEEDED: {exc}")
        return EXIT_GUARD
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True))
    else:
        print("\n".join(r.to_text() for r in reports))
        print("OVERALL: " + ("PASS" if all(r.passed for r in reports) else "FAIL"))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_derivative_cone(args) -> int:
    F = read_forms(Path(args.forms).read_text())
    P = derivative_cone_pencil(F, args.kderiv)
    _write(_render(P, args.format, args.objective), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="esp-spectra",
                     description="Exact PSD pencils for hyperbolicity cones of elementary symmetric polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="write the integer pencil for e_{k+1} in n variables")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--format", choices=("json", "sdpa"), default="json")
    b.add_argument("--out", help="output path (stdout when omitted)")
    b.add_argument("--objective", help="SDPA objective as comma-separated rationals (default all ones)")
    b.set_defaults(func=cmd_build)

    m = sub.add_parser("member", help="decide membership of a point in the pencil's cone")
    m.add_argument("--pencil", help="pencil JSON file")
    m.add_argument("--n", type=int)
    m.add_argument("--k", type=int)
    m.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1,1,-1/2")
    m.add_argument("--explain", action="store_true")
    m.set_defaults(func=cmd_member)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("matrix-tree", "step", "hkk", "cone", "inclusion", "all"),
                   default="all")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--r", type=int, help="weight parameter for the step suite (default k)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--range", type=int, help=f"identity-testing coordinate range (default {IDENTITY_MIN_RANGE})")
    v.add_argument("--cone-range", type=int,
                   help=f"coordinate range for cone sampling (default {DEFAULT_CONE_RANGE})")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("derivative-cone", help="pencil for a derivative cone of a polyhedral cone")
    d.add_argument("--forms", required=True, help="forms file: 'd n', d rows, then the base point")
    d.add_argument("--kderiv", type=int, required=True)
    d.add_argument("--out")
    d.add_argument("--format", choices=("json", "sdpa"), default="json")
    d.add_argument("--objective")
    d.set_defaults(func=cmd_derivative_cone)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EspSpectraError, ValueError, ZeroDivisionError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
