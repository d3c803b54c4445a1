"""Exact integer sequences: Fibonacci, generalized Fibonacci, Fibonacci-Narayana,
binomials, figurate sums, and the cow-herd count.

All sequences are memoized and evaluated iteratively; negative indices run
the defining recurrence backward.  Caches only ever grow and are guarded by
a lock, so concurrent callers always see the same deterministic values.
"""

import math
import threading
from typing import NamedTuple

from .errors import ConsistencyError, DomainError


class GenFibParams(NamedTuple):
    """Seeds (p, q) of the generalized Fibonacci sequence h0 = p, h1 = q."""

    p: int
    q: int


class _Recurrence2:
    """x_n = x_{n-1} + x_{n-2}, extended both ways from x_0, x_1."""

    def __init__(self, x0, x1):
        self._fwd = [x0, x1]  # x_0, x_1, ...
        self._bwd = [x0]      # x_0, x_-1, x_-2, ...
        self._lock = threading.Lock()

    def value(self, n):
        if n >= 0:
            fwd = self._fwd
            if n >= len(fwd):
                with self._lock:
                    while n >= len(self._fwd):
                        self._fwd.append(self._fwd[-1] + self._fwd[-2])
                    fwd = self._fwd
            return fwd[n]
        k = -n
        bwd = self._bwd
        if k >= len(bwd):
            with self._lock:
                while k >= len(self._bwd):
                    m = len(self._bwd)  # next index is -m
                    # backward: x_n = x_{n+2} - x_{n+1}
                    nxt = self.value(-m + 2) - self.value(-m + 1)
                    self._bwd.append(nxt)
                bwd = self._bwd
        return bwd[k]


class _Recurrence3:
    """x_n = x_{n-1} + x_{n-3}, extended both ways from x_0, x_1, x_2."""

    def __init__(self, x0, x1, x2):
        self._fwd = [x0, x1, x2]
        self._bwd = [x0]
        self._lock = threading.Lock()

    def value(self, n):
        if n >= 0:
            fwd = self._fwd
            if n >= len(fwd):
                with self._lock:
                    while n >= len(self._fwd):
                        self._fwd.append(self._fwd[-1] + self._fwd[-3])
                    fwd = self._fwd
            return fwd[n]
        k = -n
        bwd = self._bwd
        if k >= len(bwd):
            with self._lock:
                while k >= len(self._bwd):
                    m = len(self._bwd)
                    # backward: x_n = x_{n+3} - x_{n+2}
                    nxt = self.value(-m + 3) - self.value(-m + 2)
                    self._bwd.append(nxt)
                bwd = self._bwd
        return bwd[k]


_fib = _Recurrence2(0, 1)
_narayana = _Recurrence3(0, 1, 1)

_genfib_caches = {}
_genfib_lock = threading.Lock()


def fib(n):
    """Fibonacci number f_n for any signed n (f_0 = 0, f_1 = 1)."""
    return _fib.value(n)


def gen_fib(pq, n):
    """Generalized Fibonacci number h_n with seeds h_0 = p, h_1 = q.

    Computed by the recurrence itself (not the closed form), so it can be
    checked independently against h_{n+1} = p*f_n + q*f_{n+1}.
    """
    p, q = pq
    key = (p, q)
    cache = _genfib_caches.get(key)
    if cache is None:
        with _genfib_lock:
            cache = _genfib_caches.setdefault(key, _Recurrence2(p, q))
    return cache.value(n)


def narayana(n):
    """Fibonacci-Narayana number u_n for any signed n (u_0, u_1, u_2 = 0, 1, 1)."""
    return _narayana.value(n)


def binom(n, k):
    """Exact binomial coefficient C(n, k) = n!/(k!(n-k)!)."""
    if n < 0 or k < 0:
        raise DomainError(f"binom requires non-negative arguments, got ({n}, {k})")
    if k > n:
        raise DomainError(f"binom requires k <= n, got ({n}, {k})")
    return math.comb(n, k)


def figurate(n, m):
    """Figurate sum S_n^(m) = n(n+1)...(n+m) / (m+1)!.

    Equals the m-fold iterated prefix sum of 1..n; the quotient is always
    an integer.
    """
    if n < 1:
        raise DomainError(f"figurate requires n >= 1, got {n}")
    if m < 0:
        raise DomainError(f"figurate requires m >= 0, got {m}")
    num = 1
    for i in range(n, n + m + 1):
        num *= i
    return num // math.factorial(m + 1)


def herd_total(years):
    """Herd size after the given number of years.

    Starts at 2 head (a cow and her heifer); grows by x_n = x_{n-1} + x_{n-3}
    with x_1, x_2, x_3 = 2, 3, 4.  The same count is recomputed through the
    figurate expansion 1 + Y + sum_{j>=1, Y-3j>=1} S^(j)_{Y-3j}; the two
    routes must agree.
    """
    if years < 1:
        raise DomainError(f"herd_total requires years >= 1, got {years}")
    by_recurrence = _herd_recurrence(years)
    by_figurate = 1 + years
    j = 1
    while years - 3 * j >= 1:
        by_figurate += figurate(years - 3 * j, j)
        j += 1
    if by_recurrence != by_figurate:
        raise ConsistencyError(
            f"herd routes disagree at year {years}: "
            f"recurrence {by_recurrence}, figurate {by_figurate}"
        )
    return by_recurrence


_herd = _Recurrence3(2, 3, 4)  # indexed from year 1 at position 0


def _herd_recurrence(years):
    return _herd.value(years - 1)
