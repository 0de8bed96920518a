"""Pencil serialization (JSON and SDPA sparse) and parsing of CLI rationals and forms files."""

from __future__ import annotations

import json
import re
from collections.abc import Sequence
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .errors import DimensionError
from .linalg import SymMatrix
from .pencil import SCHEMA_VERSION, LinearFormsSystem, Pencil, Provenance

_RATIONAL = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")


def parse_rational(text: str) -> Fraction:
    """Integer, ``p/q`` or finite decimal; anything else (``nan``, ``1e3``) is rejected."""
    s = text.strip()
    if not _RATIONAL.match(s):
        raise ValueError(f"cannot parse {text!r} as an exact rational")
    try:
        return Fraction(Decimal(s)) if "." in s else Fraction(s)
    except (ZeroDivisionError, InvalidOperation) as exc:
        raise ValueError(f"cannot parse {text!r} as an exact rational: {exc}") from None


def parse_point(text: str, n: int | None = None) -> list[Fraction]:
    values = [parse_rational(part) for part in text.split(",")]
    if n is not None and len(values) != n:
        raise DimensionError(f"point has {len(values)} coordinates, expected {n}")
    return values


def _frac_dict(v: Fraction | None) -> dict | None:
    if v is None:
        return None
    return {"numerator": str(v.numerator), "denominator": str(v.denominator)}


def _frac_from(obj: dict | None) -> Fraction | None:
    if obj is None:
        return None
    return Fraction(int(obj["numerator"]), int(obj["denominator"]))


def _rows_out(rows):
    return None if rows is None else [[str(v) for v in row] for row in rows]


def pencil_to_dict(P: Pencil) -> dict:
    prov = P.provenance
    provenance = {
        "kind": prov.kind,
        "deleted_vertex": prov.deleted_vertex,
        "vertex_order": list(prov.vertex_order),
        "constant": _frac_dict(prov.constant),
    }
    if prov.kind != "esp":
        provenance.update(
            kderiv=prov.kderiv,
            scale=_frac_dict(prov.scale),
            forms=_rows_out(prov.forms),
            base_point=None if prov.base_point is None else [str(v) for v in prov.base_point],
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "n": P.n,
        "k": P.k,
        "m": P.m,
        "provenance": provenance,
        "matrices": [
            {"var_index": j,
             "entries": [[r + 1, c + 1, int(v)] for r, c, v in B.upper_entries()]}
            for j, B in enumerate(P.matrices, start=1)
        ],
    }


def pencil_to_json(P: Pencil) -> str:
    """Canonical bytes: sorted keys, no whitespace, trailing newline. Indices are 1-based."""
    return json.dumps(pencil_to_dict(P), sort_keys=True, separators=(",", ":")) + "\n"


def pencil_from_dict(obj: dict) -> Pencil:
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {obj.get('schema_version')!r}")
    n, k, m = int(obj["n"]), int(obj["k"]), int(obj["m"])
    mats = sorted(obj["matrices"], key=lambda e: e["var_index"])
    if [e["var_index"] for e in mats] != list(range(1, n + 1)):
        raise DimensionError("matrices must have var_index 1..n exactly once")
    matrices = []
    for e in mats:
        entries = []
        for r, c, v in e["entries"]:
            if not 1 <= r <= c <= m:
                raise DimensionError(f"entry ({r}, {c}) is not in the upper triangle of an {m}x{m} matrix")
            if not isinstance(v, int):
                raise ValueError(f"entry value {v!r} is not an integer")
            entries.append((r - 1, c - 1, v))
        matrices.append(SymMatrix(m, entries))
    p = obj["provenance"]
    forms = p.get("forms")
    base = p.get("base_point")
    prov = Provenance(
        kind=p["kind"],
        deleted_vertex=p["deleted_vertex"],
        vertex_order=tuple(p["vertex_order"]),
        constant=_frac_from(p.get("constant")),
        kderiv=p.get("kderiv"),
        scale=_frac_from(p.get("scale")),
        forms=None if forms is None else tuple(tuple(Fraction(v) for v in row) for row in forms),
        base_point=None if base is None else tuple(Fraction(v) for v in base),
    )
    return Pencil(n, k, m, tuple(matrices), prov)


def pencil_from_json(text: str) -> Pencil:
    return pencil_from_dict(json.loads(text))


def _decimal(v: Fraction) -> str:
    """Finite decimal rendering without exponent; rejects values with no finite expansion."""
    if v.denominator == 1:
        return str(v.numerator)
    d = v.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        raise ValueError(f"{v} has no finite decimal expansion")
    digits = max(twos, fives)
    scaled = v * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(int(scaled)), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def pencil_to_sdpa(P: Pencil, objective: Sequence | None = None) -> str:
    """SDPA sparse text for ``max c.x s.t. sum_j x_j F_j >= 0`` (one block, no constant matrix)."""
    c = [Fraction(1)] * P.n if objective is None else [Fraction(v) for v in objective]
    if len(c) != P.n:
        raise DimensionError(f"objective has {len(c)} entries, pencil has {P.n} variables")
    lines = [
        f"* esp-spectra pencil n={P.n} k={P.k} m={P.m} schema_version={SCHEMA_VERSION}",
        f"* kind={P.provenance.kind} deleted_vertex={P.provenance.deleted_vertex}",
        str(P.n),
        "1",
        str(P.m),
        " ".join(_decimal(v) for v in c),
    ]
    for j, B in enumerate(P.matrices, start=1):
        for r, col, v in B.upper_entries():
            lines.append(f"{j} 1 {r + 1} {col + 1} {int(v)}")
    return "\n".join(lines) + "\n"


def read_sdpa(text: str) -> tuple[int, list[int], list[Fraction], list[tuple[int, int, int, int, Fraction]]]:
    """Minimal SDPA-sparse reader: ``(n_vars, block_sizes, objective, entries)``.

    Entries are ``(matrix, block, row, col, value)`` as written. Comment lines
    start with ``*`` or ``"``; separators ``,(){}`` count as whitespace.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and ln.lstrip()[0] not in '*"']

    def tokens(ln: str) -> list[str]:
        return re.sub(r"[,(){}]", " ", ln).split()

    n_vars = int(tokens(lines[0])[0])
    n_blocks = int(tokens(lines[1])[0])
    blocks = [int(t) for t in tokens(lines[2])[:n_blocks]]
    objective = [Fraction(Decimal(t)) for t in tokens(lines[3])[:n_vars]]
    entries = []
    for ln in lines[4:]:
        j, b, r, c, v = tokens(ln)[:5]
        entries.append((int(j), int(b), int(r), int(c), Fraction(Decimal(v))))
    return n_vars, blocks, objective, entries


def pencil_from_sdpa(text: str) -> Pencil:
    """Rebuild the matrices of a single-block, constant-free SDPA file (provenance is not stored there)."""
    n, blocks, _, entries = read_sdpa(text)
    if len(blocks) != 1:
        raise DimensionError("expected exactly one block")
    m = blocks[0]
    per_var: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for j, _, r, c, v in entries:
        if j == 0:
            raise ValueError("constant matrix F0 is not supported")
        if v.denominator != 1:
            raise ValueError(f"non-integer entry {v}")
        r, c = min(r, c), max(r, c)
        per_var[j - 1].append((r - 1, c - 1, int(v)))
    prov = Provenance(kind="sdpa", deleted_vertex="", vertex_order=(), constant=None)
    return Pencil(n, 0, m, tuple(SymMatrix(m, e) for e in per_var), prov)


def read_forms(text: str) -> LinearFormsSystem:
    """Forms file: ``d n``, then ``d`` rows of ``n`` rationals, then the base point (``n`` rationals)."""
    rows = [ln.replace(",", " ").split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("forms file must start with a line 'd n'")
    d, n = (int(t) for t in rows[0])
    if len(rows) != d + 2:
        raise ValueError(f"forms file must have {d + 2} non-empty lines, found {len(rows)}")
    body = [[parse_rational(t) for t in r] for r in rows[1:]]
    for i, r in enumerate(body, start=2):
        if len(r) != n:
            raise DimensionError(f"line {i} has {len(r)} values, expected {n}")
    return LinearFormsSystem(tuple(map(tuple, body[:d])), tuple(body[d]))
