"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``x_1, ..., x_n`` is stored as a mapping from exponent tuples
(one entry per variable) to nonzero :class:`~fractions.Fraction` coefficients.
Variables are 1-indexed in every public function, matching the usual
``x_1, ..., x_n`` notation; exponent tuples are 0-indexed internally.

Terms are ordered graded-lexicographically (total degree first, then
lexicographic with ``x_1 > x_2 > ...``), which makes the leading term of a
polynomial well defined and printing canonical.

Besides the arithmetic, this module holds the elementary symmetric machinery
the rest of the package consumes: ``e_k(S)``, the ratios ``q_k(S)``,
``S``-fold partial derivatives, directional derivatives and restrictions to
lines.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Union

from .errors import DegreeError, DimensionError, PoleError
from .univariate import UnivariatePolynomial

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _grlex_key(exps: Monomial) -> tuple[int, Monomial]:
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ambient_dim", "_terms", "_hash")

    def __init__(self, ambient_dim: int, terms: Mapping[Monomial, Scalar] | None = None):
        if ambient_dim < 0:
            raise DimensionError("ambient dimension must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ambient_dim:
                raise DimensionError(
                    f"monomial {exps} does not have {ambient_dim} exponents")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _as_fraction(coeff)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.ambient_dim = ambient_dim
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ambient_dim: int, terms: dict[Monomial, Fraction]) -> Polynomial:
        # trusted constructor: caller guarantees shape and no zero coefficients
        p = cls.__new__(cls)
        p.ambient_dim = ambient_dim
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ambient_dim: int) -> Polynomial:
        return cls._raw(ambient_dim, {})

    @classmethod
    def constant(cls, ambient_dim: int, value: Scalar) -> Polynomial:
        c = _as_fraction(value)
        return cls._raw(ambient_dim, {(0,) * ambient_dim: c} if c else {})

    @classmethod
    def variable(cls, ambient_dim: int, index: int) -> Polynomial:
        """The coordinate polynomial ``x_index`` (1-indexed)."""
        if not 1 <= index <= ambient_dim:
            raise DimensionError(f"variable index {index} outside 1..{ambient_dim}")
        exps = [0] * ambient_dim
        exps[index - 1] = 1
        return cls._raw(ambient_dim, {tuple(exps): Fraction(1)})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> Polynomial:
        n = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            c = _as_fraction(c)
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = c
        return cls._raw(n, terms)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted by decreasing graded-lex order of monomials."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self._terms, key=_grlex_key)
        return m, self._terms[m]

    def linear_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients ``(c_1, ..., c_n)`` of a homogeneous linear form."""
        out = [Fraction(0)] * self.ambient_dim
        for m, c in self._terms.items():
            if sum(m) != 1:
                raise ValueError("polynomial is not a homogeneous linear form")
            out[m.index(1)] = c
        return tuple(out)

    def variables(self) -> set[int]:
        """1-indexed variables that occur in some term."""
        used = set()
        for m in self._terms:
            used.update(i + 1 for i, e in enumerate(m) if e)
        return used

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.ambient_dim != self.ambient_dim:
                raise DimensionError(
                    f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ambient_dim, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ambient_dim, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.ambient_dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.ambient_dim)
            return Polynomial._raw(self.ambient_dim, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        right = list(other._terms.items())
        for a, ca in self._terms.items():
            for b, cb in right:
                m = tuple(x + y for x, y in zip(a, b))
                terms[m] = terms.get(m, 0) + ca * cb
        return Polynomial._raw(self.ambient_dim, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.ambient_dim, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_divide(self, divisor: Polynomial) -> Polynomial:
        """Quotient ``self / divisor``; raises ``ValueError`` if the division is not exact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_m, lead_c = divisor.leading_term()
        dividend = dict(self._terms)
        quotient: dict[Monomial, Fraction] = {}
        dterms = list(divisor._terms.items())
        while dividend:
            m = max(dividend, key=_grlex_key)
            c = dividend[m]
            shift = tuple(x - y for x, y in zip(m, lead_m))
            if any(s < 0 for s in shift):
                raise ValueError("polynomial division is not exact")
            qc = c / lead_c
            quotient[shift] = qc
            for dm, dc in dterms:
                key = tuple(x + y for x, y in zip(dm, shift))
                v = dividend.get(key, 0) - qc * dc
                if v:
                    dividend[key] = v
                else:
                    dividend.pop(key, None)
        return Polynomial._raw(self.ambient_dim, quotient)

    # -- calculus and evaluation --------------------------------------------

    def partial(self, index: int) -> Polynomial:
        """``d/dx_index`` (1-indexed)."""
        if not 1 <= index <= self.ambient_dim:
            raise DimensionError(f"variable index {index} outside 1..{self.ambient_dim}")
        i = index - 1
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                terms[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._raw(self.ambient_dim, terms)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.ambient_dim:
            raise DimensionError(
                f"point has {len(point)} coordinates, expected {self.ambient_dim}")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term *= pt[i] ** e
            total += term
        return total

    def compose_linear(self, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
        """Substitute ``x_j -> sum_i matrix[j][i] * y_i``; the result lives in ``len(matrix[0])`` variables."""
        if len(matrix) != self.ambient_dim:
            raise DimensionError("substitution needs one row per variable")
        new_dim = len(matrix[0]) if matrix else 0
        forms = [Polynomial.linear_form(row) for row in matrix]
        result = Polynomial.zero(new_dim)
        for m, c in self._terms.items():
            term = Polynomial.constant(new_dim, c)
            for j, e in enumerate(m):
                if e:
                    term = term * forms[j] ** e
            result = result + term
        return result

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient_dim, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient_dim, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e)
            if not mono:
                text = str(abs(c))
            elif abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.ambient_dim}, {str(self)!r})"


class RationalFunction:
    """Quotient of two polynomials, kept unreduced.

    Equality is decided by cross-multiplication, so two representations of
    the same function compare equal even when no common factor is cancelled.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial | Scalar = 1):
        if not isinstance(denominator, Polynomial):
            denominator = Polynomial.constant(numerator.ambient_dim, denominator)
        if denominator.ambient_dim != numerator.ambient_dim:
            raise DimensionError("numerator and denominator live in different dimensions")
        if denominator.is_zero():
            raise PoleError("denominator is identically zero")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def ambient_dim(self) -> int:
        return self.numerator.ambient_dim

    @classmethod
    def zero(cls, ambient_dim: int) -> RationalFunction:
        return cls(Polynomial.zero(ambient_dim))

    def _coerce(self, other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, int, Fraction)):
            if not isinstance(other, Polynomial):
                other = Polynomial.constant(self.ambient_dim, other)
            return RationalFunction(other)
        return None

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        """True when the stored denominator is a nonzero constant."""
        return self.denominator.is_constant()

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("denominator is not constant")
        return self.numerator * (1 / self.denominator.coefficient((0,) * self.ambient_dim))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise PoleError("division by the zero rational function")
        return RationalFunction(self.numerator * other.denominator,
                                self.denominator * other.numerator)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        den = self.denominator.evaluate(point)
        if not den:
            raise PoleError(f"pole: denominator vanishes at {tuple(str(v) for v in point)}")
        return self.numerator.evaluate(point) / den

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


# ---------------------------------------------------------------------------
# elementary symmetric polynomials


def _check_subset(n: int, subset: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(set(subset)))
    if any(not 1 <= j <= n for j in s):
        raise DimensionError(f"subset {s} is not contained in 1..{n}")
    return s


def elem_sym(n: int, subset: Iterable[int], k: int) -> Polynomial:
    """``e_k(S)``: sum over all ``k``-subsets ``T`` of ``S`` of ``prod_{j in T} x_j``.

    ``k > |S|`` is rejected rather than returning zero.
    """
    s = _check_subset(n, subset)
    if k < 0:
        raise DegreeError("degree must be nonnegative")
    if k > len(s):
        raise DegreeError(f"degree exceeds set size: k={k}, |S|={len(s)}")
    terms = {}
    for chosen in combinations(s, k):
        exps = [0] * n
        for j in chosen:
            exps[j - 1] = 1
        terms[tuple(exps)] = Fraction(1)
    return Polynomial._raw(n, terms)


def elem_sym_values(values: Sequence[Scalar], kmax: int | None = None) -> list[Fraction]:
    """Numeric ``[e_0, ..., e_kmax]`` of the given numbers, by the one-variable-at-a-time recursion."""
    kmax = len(values) if kmax is None else kmax
    e = [Fraction(1)] + [Fraction(0)] * kmax
    for count, v in enumerate(values, start=1):
        v = _as_fraction(v)
        for j in range(min(count, kmax), 0, -1):
            e[j] += v * e[j - 1]
    return e


def partial_derivative(p: Polynomial, subset: Iterable[int]) -> Polynomial:
    """``prod_{j in S} d/dx_j`` applied to ``p``."""
    for j in _check_subset(p.ambient_dim, subset):
        p = p.partial(j)
    return p


def directional_derivative(p: Polynomial, direction: Sequence[Scalar]) -> Polynomial:
    if len(direction) != p.ambient_dim:
        raise DimensionError("direction does not match the ambient dimension")
    out = Polynomial.zero(p.ambient_dim)
    for i, v in enumerate(direction, start=1):
        v = _as_fraction(v)
        if v:
            out = out + p.partial(i) * v
    return out


def q_ratio(n: int, subset: Iterable[int], k: int) -> RationalFunction:
    """``q_k(S) = e_k(S) / e_{k-1}(S)``, unreduced."""
    if k < 1:
        raise DegreeError("q_k is defined for k >= 1")
    s = _check_subset(n, subset)
    return RationalFunction(elem_sym(n, s, k), elem_sym(n, s, k - 1))


def evaluate(p: Polynomial | RationalFunction, point: Sequence[Scalar]) -> Fraction:
    return p.evaluate(point)


def restrict_univariate(p: Polynomial, point: Sequence[Scalar],
                        direction: Sequence[Scalar]) -> UnivariatePolynomial:
    """Coefficients of ``t -> p(point + t * direction)``."""
    n = p.ambient_dim
    if len(point) != n or len(direction) != n:
        raise DimensionError("point and direction must match the ambient dimension")
    lines = [UnivariatePolynomial([_as_fraction(a), _as_fraction(b)])
             for a, b in zip(point, direction)]
    powers: dict[tuple[int, int], UnivariatePolynomial] = {}
    result = UnivariatePolynomial([])
    for m, c in p._terms.items():
        term = UnivariatePolynomial([c])
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = lines[i] ** e
                term = term * powers[key]
        result = result + term
    return result


def check_engine_recursion(n: int, subset: Iterable[int], k: int,
                           point: Sequence[Scalar]) -> bool | None:
    """Check ``k q_k(S) = sum_j x_j q_{k-1}(S-j) / (x_j + q_{k-1}(S-j))`` exactly at ``point``.

    Returns ``None`` when some denominator on either side vanishes at the
    point, which is distinct from a genuine mismatch (``False``).
    """
    s = _check_subset(n, subset)
    if k < 2:
        raise DegreeError("the recursion needs k >= 2")
    if k > len(s):
        raise DegreeError(f"degree exceeds set size: k={k}, |S|={len(s)}")
    x = [_as_fraction(v) for v in point]
    if len(x) != n:
        raise DimensionError("point does not match the ambient dimension")
    try:
        lhs = k * q_ratio(n, s, k).evaluate(x)
        rhs = Fraction(0)
        for j in s:
            rest = [i for i in s if i != j]
            q = q_ratio(n, rest, k - 1).evaluate(x)
            den = x[j - 1] + q
            if not den:
                return None
            rhs += x[j - 1] * q / den
    except PoleError:
        return None
    return lhs == rhs
