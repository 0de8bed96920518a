"""Integer PSD pencils whose spectrahedral cone is the hyperbolicity cone of ``e_{k+1}``.

``build_esp_pencil(n, k)`` deletes the sink ``z`` from the weighted
Laplacian of ``G_{n,k}`` (weights with ``r = k``, all linear forms with
nonnegative integer coefficients) and collects the coefficient matrix of
each ``x_j``. Its determinant is ``C_k * e_{k+1}(x)`` times products of
partial derivatives of ``e_k``; ``C_k`` is inferred from the value at the
all-ones point, never hard-coded.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, lcm

from .errors import DegreeError, DimensionError, InadmissibleBasePoint
from .graph import Vertex, assign_weights, build_G, reduced_laplacian, weighted_laplacian
from .linalg import PsdCertificate, PsdVerdict, SymMatrix, det_exact, psd_check_exact
from .poly import Polynomial, _as_fraction, elem_sym, elem_sym_values, partial_derivative

SCHEMA_VERSION = 1


class Verdict(enum.Enum):
    INTERIOR = "INTERIOR"
    BOUNDARY = "BOUNDARY"
    OUTSIDE = "OUTSIDE"

    @property
    def is_member(self) -> bool:
        return self is not Verdict.OUTSIDE


@dataclass(frozen=True)
class Provenance:
    kind: str
    deleted_vertex: str
    vertex_order: tuple[str, ...]
    constant: Fraction | None
    kderiv: int | None = None
    scale: Fraction | None = None
    forms: tuple[tuple[Fraction, ...], ...] | None = None
    base_point: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class Pencil:
    """``x -> sum_j x_j B_j`` with symmetric ``m x m`` matrices ``B_1..B_n``."""

    n: int
    k: int
    m: int
    matrices: tuple[SymMatrix, ...]
    provenance: Provenance = field(compare=True)

    def __post_init__(self):
        if len(self.matrices) != self.n:
            raise DimensionError(f"expected {self.n} matrices, got {len(self.matrices)}")
        if any(B.size != self.m for B in self.matrices):
            raise DimensionError("all pencil matrices must be m x m")

    @property
    def constant(self) -> Fraction | None:
        return self.provenance.constant


def hkk_product(n: int, k: int, point: Sequence) -> Fraction:
    """``e_{k+1}(x) * prod_{|S| <= k-1} e_{k-|S|}([n] - S)(x) ** (|S|! (n-|S|-1))`` at a point."""
    x = [_as_fraction(v) for v in point]
    if len(x) != n:
        raise DimensionError("point does not match n")
    value = elem_sym_values(x, k + 1)[k + 1]
    for size in range(k):
        exponent = factorial(size) * (n - size - 1)
        for s in combinations(range(n), size):
            rest = [x[i] for i in range(n) if i not in s]
            value *= elem_sym_values(rest, k - size)[k - size] ** exponent
    return value


def hkk_product_polynomial(n: int, k: int) -> Polynomial:
    """Symbolic ``e_{k+1} * prod_{|S| <= k-1} (d^S e_k) ** (|S|! (n-|S|-1))``."""
    full = range(1, n + 1)
    ek = elem_sym(n, full, k)
    out = elem_sym(n, full, k + 1)
    for size in range(k):
        exponent = factorial(size) * (n - size - 1)
        for s in combinations(full, size):
            out = out * partial_derivative(ek, s) ** exponent
    return out


@lru_cache(maxsize=64)
def _esp_pencil(n: int, k: int) -> Pencil:
    # k = 0 is allowed here: it yields the 1x1 pencil of e_1, needed by derivative cones
    g = build_G(n, k)
    lap = reduced_laplacian(weighted_laplacian(g, assign_weights(g, k)), Vertex.sink())
    m = lap.size
    entries: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for (i, j), rf in lap.entries.items():
        for var, c in enumerate(rf.as_polynomial().linear_coefficients()):
            if c:
                if c.denominator != 1:
                    raise AssertionError("pencil coefficient is not an integer")
                entries[var].append((i, j, int(c)))
    matrices = tuple(SymMatrix(m, e) for e in entries)
    total = SymMatrix.linear_combination([1] * n, matrices)
    constant = det_exact(total) / hkk_product(n, k, [1] * n)
    prov = Provenance(
        kind="esp",
        deleted_vertex=Vertex.sink().label,
        vertex_order=tuple(v.label for v in lap.order),
        constant=constant,
    )
    return Pencil(n, k, m, matrices, prov)


def build_esp_pencil(n: int, k: int) -> Pencil:
    """Integer PSD pencil representing ``H_{k,k}``, for ``1 <= k <= n-1``."""
    if not 1 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 1 <= k <= n-1, got n={n}, k={k}")
    return _esp_pencil(n, k)


def pencil_eval(P: Pencil, point: Sequence) -> SymMatrix:
    if len(point) != P.n:
        raise DimensionError(f"point has {len(point)} coordinates, pencil has {P.n} variables")
    return SymMatrix.linear_combination([_as_fraction(v) for v in point], P.matrices)


def pencil_polynomial_matrix(P: Pencil) -> list[list[Polynomial]]:
    """Dense symbolic matrix ``sum_j x_j B_j`` with linear-form entries."""
    zero = Polynomial.zero(P.n)
    coeffs: dict[tuple[int, int], list] = {}
    for j, B in enumerate(P.matrices):
        for r, c, v in B.upper_entries():
            coeffs.setdefault((r, c), [0] * P.n)[j] = v
    out = [[zero] * P.m for _ in range(P.m)]
    for (r, c), row in coeffs.items():
        form = Polynomial.linear_form(row)
        out[r][c] = form
        out[c][r] = form
    return out


def pencil_determinant(P: Pencil, point: Sequence) -> Fraction:
    return det_exact(pencil_eval(P, point))


_VERDICTS = {PsdVerdict.PD: Verdict.INTERIOR, PsdVerdict.PSD: Verdict.BOUNDARY,
             PsdVerdict.NOT_PSD: Verdict.OUTSIDE}


def membership_certificate(P: Pencil, point: Sequence) -> tuple[Verdict, PsdCertificate]:
    cert = psd_check_exact(pencil_eval(P, point))
    return _VERDICTS[cert.verdict], cert


def membership(P: Pencil, point: Sequence) -> Verdict:
    """INTERIOR when the pencil is PD at ``point``, BOUNDARY when PSD and singular, else OUTSIDE."""
    return membership_certificate(P, point)[0]


def substitute_linear(P: Pencil, T: Sequence[Sequence]) -> Pencil:
    """Pencil in ``len(T[0])`` variables with ``A'_i = sum_j T[j][i] B_j`` (``x_j -> (T y)_j``)."""
    if len(T) != P.n:
        raise DimensionError(f"substitution needs {P.n} rows, got {len(T)}")
    new_n = len(T[0]) if T else 0
    if any(len(row) != new_n for row in T):
        raise DimensionError("substitution matrix rows have different lengths")
    rows = [[_as_fraction(v) for v in row] for row in T]
    matrices = tuple(
        SymMatrix.linear_combination([rows[j][i] for j in range(P.n)], P.matrices)
        for i in range(new_n))
    return Pencil(new_n, P.k, P.m, matrices, P.provenance)


@dataclass(frozen=True)
class LinearFormsSystem:
    """Forms ``l_j(x) = sum_i coefficients[j][i] x_i`` with a base point where none vanishes.

    Rows are sign-normalized on construction so that every ``l_j(e) > 0``.
    """

    coefficients: tuple[tuple[Fraction, ...], ...]
    base_point: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.base_point)
        rows = []
        e = tuple(_as_fraction(v) for v in self.base_point)
        for j, row in enumerate(self.coefficients, start=1):
            row = tuple(_as_fraction(v) for v in row)
            if len(row) != n:
                raise DimensionError(f"form {j} has {len(row)} coefficients, expected {n}")
            value = sum((a * b for a, b in zip(row, e)), Fraction(0))
            if not value:
                raise InadmissibleBasePoint(f"inadmissible base point (e not admissible): form {j} vanishes at e")
            rows.append(row if value > 0 else tuple(-a for a in row))
        if not rows:
            raise DimensionError("need at least one linear form")
        object.__setattr__(self, "coefficients", tuple(rows))
        object.__setattr__(self, "base_point", e)

    @property
    def d(self) -> int:
        return len(self.coefficients)

    @property
    def n(self) -> int:
        return len(self.base_point)

    def values_at(self, point: Sequence) -> tuple[Fraction, ...]:
        x = [_as_fraction(v) for v in point]
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.coefficients)

    def normalized(self) -> tuple[tuple[Fraction, ...], ...]:
        """Rows scaled so that each form equals 1 at the base point."""
        return tuple(tuple(a / v for a in row)
                     for row, v in zip(self.coefficients, self.values_at(self.base_point)))

    def product_polynomial(self) -> Polynomial:
        h = Polynomial.constant(self.n, 1)
        for row in self.coefficients:
            h = h * Polynomial.linear_form(row)
        return h


def derivative_cone_pencil(F: LinearFormsSystem, kderiv: int) -> Pencil:
    """Integer pencil whose cone is the hyperbolicity cone of ``D_e^kderiv (l_1 ... l_d)`` at ``e``.

    With ``l_j`` rescaled to equal 1 at ``e``, that derivative is a positive
    multiple of ``e_{d-kderiv}(l(x))``, so the ESP pencil for
    ``(d, d-kderiv-1)`` is composed with the forms and then multiplied by the
    least common denominator to make it integral.
    """
    d = F.d
    if not 1 <= kderiv <= d - 1:
        raise DegreeError(f"kderiv out of range: need 1 <= kderiv <= d-1, got d={d}, kderiv={kderiv}")
    base = _esp_pencil(d, d - kderiv - 1)
    composed = substitute_linear(base, F.normalized())
    scale = 1
    for B in composed.matrices:
        for _, _, v in B.upper_entries():
            scale = lcm(scale, Fraction(v).denominator)
    matrices = tuple(
        SymMatrix(B.size, ((r, c, int(Fraction(v) * scale)) for r, c, v in B.upper_entries()))
        for B in composed.matrices)
    prov = Provenance(
        kind="derivative-cone",
        deleted_vertex=base.provenance.deleted_vertex,
        vertex_order=base.provenance.vertex_order,
        constant=base.provenance.constant,
        kderiv=kderiv,
        scale=Fraction(scale),
        forms=F.coefficients,
        base_point=F.base_point,
    )
    return Pencil(F.n, base.k, base.m, matrices, prov)
