"""Quaternion-valued sequences: F_n, H_n^{p,q} and U_n in any H(beta1, beta2).

Four consecutive sequence values become the coefficients of one quaternion:
F_n = f_n*1 + f_{n+1}*e2 + f_{n+2}*e3 + f_{n+3}*e4, and likewise for the
generalized and Fibonacci-Narayana variants.  All builders accept any signed
index; the scalar sequences extend backward by their own recurrences.
"""

from .algebra import Quaternion
from .sequences import fib, gen_fib, narayana


def fib_quat(params, n):
    """Fibonacci quaternion F_n."""
    return Quaternion(fib(n), fib(n + 1), fib(n + 2), fib(n + 3), params)


def gen_fib_quat(params, pq, n):
    """Generalized Fibonacci quaternion H_n^{p,q}."""
    return Quaternion(
        gen_fib(pq, n), gen_fib(pq, n + 1), gen_fib(pq, n + 2), gen_fib(pq, n + 3),
        params,
    )


def narayana_quat(params, n):
    """Fibonacci-Narayana quaternion U_n."""
    return Quaternion(
        narayana(n), narayana(n + 1), narayana(n + 2), narayana(n + 3), params
    )
