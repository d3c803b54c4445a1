# cython: language_level=3
"""Compiled rational scalar kernel.

Same interface and semantics as ``_pyrational.Rational``; the speedup
comes from C-level attribute access and dispatch, not from different
arithmetic (the integers stay arbitrary-precision Python ints).
"""

import sys
from math import gcd

cdef object _HASH_MODULUS = sys.hash_info.modulus
cdef object _HASH_INF = sys.hash_info.inf
cdef object _gcd = gcd


cdef inline Rational _raw(object num, object den):
    # caller guarantees den > 0 and gcd == 1
    cdef Rational self = Rational.__new__(Rational)
    self._num = num
    self._den = den
    return self


cdef inline Rational _norm(object num, object den):
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if den < 0:
        num = -num
        den = -den
    g = _gcd(num, den)
    if g > 1:
        num = num // g
        den = den // g
    return _raw(num, den)


cdef inline Rational _add_rat(Rational a, object nb, object db):
    cdef object na = a._num
    cdef object da = a._den
    g = _gcd(da, db)
    if g == 1:
        return _raw(na * db + nb * da, da * db)
    s = da // g
    t = na * (db // g) + nb * s
    g2 = _gcd(t, g)
    if g2 == 1:
        return _raw(t, s * db)
    return _raw(t // g2, s * (db // g2))


cdef inline Rational _mul_rat(object na, object da, object nb, object db):
    g1 = _gcd(na, db)
    if g1 > 1:
        na = na // g1
        db = db // g1
    g2 = _gcd(nb, da)
    if g2 > 1:
        nb = nb // g2
        da = da // g2
    return _raw(na * nb, da * db)


cdef class Rational:
    """Exact fraction.  Invariants: denominator > 0, gcd(|num|, den) == 1."""

    cdef object _num
    cdef object _den

    def __init__(self, num=0, den=1):
        if isinstance(num, Rational):
            if den != 1:
                raise ValueError("denominator must be 1 when wrapping a Rational")
            self._num = (<Rational>num)._num
            self._den = (<Rational>num)._den
            return
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("Rational components must be integers")
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num = -num
            den = -den
        g = _gcd(num, den)
        if g > 1:
            num = num // g
            den = den // g
        self._num = num
        self._den = den

    @classmethod
    def _raw(cls, num, den):
        return _raw(num, den)

    @classmethod
    def from_str(cls, text):
        """Parse "a" or "a/b" with arbitrary-precision integer parts."""
        text = text.strip()
        if "/" in text:
            top, _, bottom = text.partition("/")
            return _norm(int(top), int(bottom))
        return _raw(int(text), 1)

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def sign(self):
        """-1, 0 or +1."""
        if self._num > 0:
            return 1
        if self._num < 0:
            return -1
        return 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Rational):
            return _add_rat(<Rational>self, (<Rational>other)._num, (<Rational>other)._den)
        if isinstance(other, int):
            return _raw(self._num + other * self._den, self._den)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return _raw(self._num + other * self._den, self._den)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Rational):
            return _add_rat(<Rational>self, -(<Rational>other)._num, (<Rational>other)._den)
        if isinstance(other, int):
            return _raw(self._num - other * self._den, self._den)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return _raw(other * self._den - self._num, self._den)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Rational):
            return _mul_rat(self._num, self._den,
                            (<Rational>other)._num, (<Rational>other)._den)
        if isinstance(other, int):
            return _mul_rat(self._num, self._den, other, 1)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return _mul_rat(self._num, self._den, other, 1)
        return NotImplemented

    def __truediv__(self, other):
        cdef object nb, db
        if isinstance(other, Rational):
            nb = (<Rational>other)._num
            db = (<Rational>other)._den
        elif isinstance(other, int):
            nb = other
            db = 1
        else:
            return NotImplemented
        if nb == 0:
            raise ZeroDivisionError("division by zero rational")
        if nb < 0:
            nb = -nb
            db = -db
        return _mul_rat(self._num, self._den, db, nb)

    def __rtruediv__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        if self._num == 0:
            raise ZeroDivisionError("division by zero rational")
        return _norm(other * self._den, self._num)

    def __pow__(self, exponent, modulo):
        if modulo is not None:
            return NotImplemented
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent >= 0:
            return _raw(self._num**exponent, self._den**exponent)
        if self._num == 0:
            raise ZeroDivisionError("zero to a negative power")
        return _norm(self._den ** (-exponent), self._num ** (-exponent))

    def __neg__(self):
        return _raw(-self._num, self._den)

    def __pos__(self):
        return self

    def __abs__(self):
        if self._num < 0:
            return _raw(-self._num, self._den)
        return self

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self._num == (<Rational>other)._num and self._den == (<Rational>other)._den
        if isinstance(other, int):
            return self._den == 1 and self._num == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Rational):
            return self._num * (<Rational>other)._den < (<Rational>other)._num * self._den
        if isinstance(other, int):
            return self._num < other * self._den
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Rational):
            return self._num * (<Rational>other)._den <= (<Rational>other)._num * self._den
        if isinstance(other, int):
            return self._num <= other * self._den
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Rational):
            return self._num * (<Rational>other)._den > (<Rational>other)._num * self._den
        if isinstance(other, int):
            return self._num > other * self._den
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Rational):
            return self._num * (<Rational>other)._den >= (<Rational>other)._num * self._den
        if isinstance(other, int):
            return self._num >= other * self._den
        return NotImplemented

    def __hash__(self):
        # same scheme as the stdlib numeric tower, so hash(Rational(k)) == hash(k)
        try:
            dinv = pow(self._den, -1, _HASH_MODULUS)
        except ValueError:
            h = _HASH_INF
        else:
            h = hash(abs(self._num)) * dinv % _HASH_MODULUS
        result = h if self._num >= 0 else -h
        return -2 if result == -1 else result

    def __bool__(self):
        return self._num != 0

    def __float__(self):
        return self._num / self._den

    def __str__(self):
        if self._den == 1:
            return str(self._num)
        return f"{self._num}/{self._den}"

    def __repr__(self):
        return f"Rational({self._num}, {self._den})"
