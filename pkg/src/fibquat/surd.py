"""Exact elements r + s*sqrt(5) of the quadratic field Q(sqrt 5).

Carries the golden ratio alpha = (1 + sqrt 5)/2 and the growth indicators
built from it.  The sign of a surd is decided exactly by case analysis on
the signs of r and s, comparing r^2 against 5 s^2 when they differ; no
floating point is involved.
"""

from ._kernel import Rational
from .algebra import as_rational
from .errors import ConsistencyError


class QuadraticSurd:
    """r + s*sqrt(5) with rational r, s; equality is componentwise."""

    __slots__ = ("r", "s")

    def __init__(self, r, s=0):
        self.r = as_rational(r)
        self.s = as_rational(s)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadraticSurd(self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadraticSurd(self.r - other.r, self.s - other.s)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadraticSurd(other.r - self.r, other.s - self.s)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        return QuadraticSurd(
            self.r * other.r + 5 * (self.s * other.s),
            self.r * other.s + self.s * other.r,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("surd powers take non-negative integer exponents")
        out = QuadraticSurd(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __neg__(self):
        return QuadraticSurd(-self.r, -self.s)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.r == other.r and self.s == other.s

    def __hash__(self):
        return hash((self.r, self.s))

    def __bool__(self):
        return bool(self.r or self.s)

    def is_zero(self):
        return not self

    def sign(self):
        """Exact sign of the real value r + s*sqrt(5): -1, 0 or +1."""
        sr = self.r.sign()
        ss = self.s.sign()
        if ss == 0:
            return sr
        if sr == 0:
            return ss
        if sr == ss:
            return sr
        # opposite signs: |r| vs |s|*sqrt(5), i.e. r^2 vs 5 s^2
        r2 = self.r * self.r
        s25 = 5 * (self.s * self.s)
        if r2 == s25:
            # would make sqrt(5) rational
            raise ConsistencyError(f"irrationality violated for {self!r}")
        if r2 > s25:
            return sr
        return ss

    def __float__(self):
        return float(self.r) + float(self.s) * 5 ** 0.5

    def __str__(self):
        return f"{self.r} + {self.s}*sqrt(5)"

    def __repr__(self):
        return f"QuadraticSurd({self.r!r}, {self.s!r})"


def _coerce(x):
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, (int, Rational)):
        return QuadraticSurd(x, 0)
    return None


#: The golden ratio (1 + sqrt 5)/2, the dominant root of t^2 - t - 1.
ALPHA = QuadraticSurd(Rational(1, 2), Rational(1, 2))
