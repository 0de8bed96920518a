"""Univariate polynomials over the rationals with exact Sturm-sequence root counting."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


class UnivariatePolynomial:
    """Dense polynomial in one variable ``t``; ``coefficients[i]`` multiplies ``t**i``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    evaluate = __call__

    def __add__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(out)

    def __neg__(self) -> UnivariatePolynomial:
        return UnivariatePolynomial([-c for c in self.coefficients])

    def __sub__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        return self + (-other)

    def __mul__(self, other) -> UnivariatePolynomial:
        if not isinstance(other, UnivariatePolynomial):
            return UnivariatePolynomial([c * other for c in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UnivariatePolynomial:
        result = UnivariatePolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self == UnivariatePolynomial(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({[str(c) for c in self.coefficients]})"

    def divmod(self, divisor: UnivariatePolynomial) -> tuple[UnivariatePolynomial, UnivariatePolynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        d = divisor.coefficients
        dl = d[-1]
        quot = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for shift in range(len(rem) - len(d), -1, -1):
            c = rem[shift + len(d) - 1] / dl
            quot[shift] = c
            if c:
                for i, dc in enumerate(d):
                    rem[shift + i] -= c * dc
        return UnivariatePolynomial(quot), UnivariatePolynomial(rem[:len(d) - 1])

    def derivative(self) -> UnivariatePolynomial:
        return UnivariatePolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def monic(self) -> UnivariatePolynomial:
        if self.is_zero():
            return self
        return self * (1 / self.leading_coefficient)

    def gcd(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def squarefree_part(self) -> UnivariatePolynomial:
        """``f / gcd(f, f')``: same roots as ``f``, each simple."""
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        return self.divmod(g)[0]

    def sturm_sequence(self) -> list[UnivariatePolynomial]:
        """Sturm sequence of the square-free part of ``self``."""
        f = self.squarefree_part()
        seq = [f, f.derivative()]
        while not seq[-1].is_zero():
            seq.append(-seq[-2].divmod(seq[-1])[1])
        return seq[:-1]

    def count_roots(self, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
        """Number of distinct real roots in ``(lo, hi]``; ``None`` means infinity on that side."""
        if self.is_zero():
            raise ValueError("the zero polynomial has infinitely many roots")
        seq = self.sturm_sequence()
        return _variations(seq, lo, -1) - _variations(seq, hi, 1)

    def distinct_real_roots(self) -> int:
        return self.count_roots(None, None)

    def is_real_rooted(self) -> bool:
        """True when every complex root is real (multiplicities allowed)."""
        if self.is_zero():
            raise ValueError("the zero polynomial has no well-defined roots")
        return self.distinct_real_roots() == self.squarefree_part().degree

    def root_bound(self) -> Fraction:
        """Cauchy bound: every root has absolute value strictly below this."""
        lead = abs(self.leading_coefficient)
        return 1 + max((abs(c) / lead for c in self.coefficients[:-1]), default=Fraction(0))

    def largest_root_bracket(self, width: Fraction) -> tuple[Fraction, Fraction] | None:
        """Rational ``(lo, hi)`` with ``hi - lo <= width`` and the largest real root in ``(lo, hi]``.

        Returns ``None`` when there is no real root.
        """
        seq = self.sturm_sequence()
        bound = self.root_bound()
        lo, hi = -bound, bound
        if _variations(seq, lo, -1) - _variations(seq, hi, 1) == 0:
            return None
        v_hi = _variations(seq, hi, 1)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _variations(seq, mid, 0) - v_hi > 0:
                lo = mid
            else:
                hi = mid
                v_hi = _variations(seq, hi, 1)
        return lo, hi


def _variations(seq: list[UnivariatePolynomial], at: Fraction | None, infinity_side: int) -> int:
    if at is None:
        signs = []
        for p in seq:
            s = _sign(p.leading_coefficient)
            if infinity_side < 0 and p.degree % 2:
                s = -s
            signs.append(s)
    else:
        signs = [_sign(p(at)) for p in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
