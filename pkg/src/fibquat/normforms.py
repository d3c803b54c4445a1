"""Closed-form norms of the quaternion sequences, the growth indicators
E and E' in Q(sqrt 5), and empirical invertibility thresholds.

The closed forms evaluate h-values with *rational* seeds through the
relation h_{n+1} = p*f_n + q*f_{n+1}, which is the route independent of the
integer recurrence used by the direct norms.
"""

from dataclasses import dataclass

from ._kernel import Rational
from .algebra import AlgebraParams, as_rational
from .errors import (
    ConsistencyError,
    DomainError,
    IndicatorDegenerateError,
    ScanExhaustedError,
)
from .quatseq import fib_quat, gen_fib_quat
from .sequences import GenFibParams, fib
from .surd import ALPHA, QuadraticSurd


def _h(p, q, m):
    # h_m for rational seeds, via h_m = p*f_{m-1} + q*f_m
    return p * fib(m - 1) + q * fib(m)


def norm_fib_formula(params, n):
    """Closed form of n(F_n):

    h^{1+2b2, 3b2}_{2n+2} + (b1-1) h^{1+2b2, b2}_{2n+3} - 2(b1-1)(1+b2) f_n f_{n+1}
    """
    b1 = params.beta1
    b2 = params.beta2
    p_hi = 1 + 2 * b2
    return (
        _h(p_hi, 3 * b2, 2 * n + 2)
        + (b1 - 1) * _h(p_hi, b2, 2 * n + 3)
        - 2 * ((b1 - 1) * (1 + b2)) * (fib(n) * fib(n + 1))
    )


def norm_genfib_formula(params, pq, n):
    """Closed form of n(H^{p,q}_n) for n >= 1 (it references f_{n-1}):

    p^2 h^{1+2b2,3b2}_{2n} + p^2(b1-1) h^{1+2b2,b2}_{2n+1}
    + q^2 h^{1+2b2,3b2}_{2n+2} + q^2(b1-1) h^{1+2b2,b2}_{2n+3}
    - 2p(b1-1)(p*b2+p+q) f_{n-1} f_n - 2q^2(b1-1)(1+b2) f_n f_{n+1}
    + h^{2pq*b1, 2pq*b1*b2}_{2n+1} + 2pq*b1*b2 (f_{2n} + f_{2n+3})
    + 2pq*b2(1-b1) f_{n+1} f_{n+2}
    """
    b1 = params.beta1
    b2 = params.beta2
    p, q = pq
    p_hi = 1 + 2 * b2
    p2 = p * p
    q2 = q * q
    pq2 = 2 * p * q
    total = p2 * _h(p_hi, 3 * b2, 2 * n)
    total = total + (p2 * (b1 - 1)) * _h(p_hi, b2, 2 * n + 1)
    total = total + q2 * _h(p_hi, 3 * b2, 2 * n + 2)
    total = total + (q2 * (b1 - 1)) * _h(p_hi, b2, 2 * n + 3)
    total = total - (2 * p) * ((b1 - 1) * (p * b2 + p + q)) * (fib(n - 1) * fib(n))
    total = total - (2 * q2) * ((b1 - 1) * (1 + b2)) * (fib(n) * fib(n + 1))
    total = total + _h(pq2 * b1, pq2 * (b1 * b2), 2 * n + 1)
    total = total + (pq2 * (b1 * b2)) * (fib(2 * n) + fib(2 * n + 3))
    total = total + (pq2 * b2 * (1 - b1)) * (fib(n + 1) * fib(n + 2))
    return total


def swamy_norm_as_stated(pq, n):
    """The transcription 3(2pq - p^2) f_{2n+2} + (p^2 + q^2) f_{2n+3}.

    Evaluated literally so the audit can hold it against direct norms in
    H(1,1); it fails the (p,q) = (0,1) reduction.
    """
    p, q = pq
    return 3 * (2 * p * q - p * p) * fib(2 * n + 2) + (p * p + q * q) * fib(2 * n + 3)


def swamy_norm_corrected(pq, n):
    """Repaired transcription: the factor 3 applies to both terms.

    3[(2pq - p^2) f_{2n+2} + (p^2 + q^2) f_{2n+3}] equals the direct norm of
    H^{p,q}_n in H(1,1); validated exhaustively against direct norms before
    registration (and it reduces to 3 f_{2n+3} at (p,q) = (0,1)).
    """
    p, q = pq
    return 3 * ((2 * p * q - p * p) * fib(2 * n + 2) + (p * p + q * q) * fib(2 * n + 3))


def growth_indicator_E(params):
    """E(b1, b2) = (1/5)[1 + b1 + 2 b2 + 5 b1 b2 + alpha(b1 + 3 b2 + 8 b1 b2)].

    Exact element of Q(sqrt 5); its sign is the eventual sign of n(F_n).
    Nonzero for every rational (b1, b2): E = 0 would force
    b2^2 + 7 b2 + 1 = 0, whose discriminant 45 is not a perfect square.
    """
    b1 = params.beta1
    b2 = params.beta2
    c0 = 1 + b1 + 2 * b2 + 5 * (b1 * b2)
    c1 = b1 + 3 * b2 + 8 * (b1 * b2)
    fifth = Rational(1, 5)
    return QuadraticSurd(fifth * (c0 + c1 * Rational(1, 2)), fifth * (c1 * Rational(1, 2)))


def growth_indicator_Eprime(params, pq):
    """E'(b1, b2) = (1/5)(p + alpha*q)^2 [1 + b1 a^2 + b2 a^4 + b1 b2 a^6].

    Evaluated literally from powers of alpha, then cross-checked against the
    reduced form (p + alpha*q)^2 * E(b1, b2); the two must agree exactly.
    """
    b1 = params.beta1
    b2 = params.beta2
    p, q = pq
    a2 = ALPHA * ALPHA
    a4 = a2 * a2
    a6 = a4 * a2
    bracket = 1 + b1 * a2 + b2 * a4 + (b1 * b2) * a6
    weight = (p + q * ALPHA) ** 2
    literal = Rational(1, 5) * (weight * bracket)
    reduced = weight * growth_indicator_E(params)
    if literal != reduced:
        raise ConsistencyError(
            f"growth indicator routes disagree: {literal} vs {reduced}"
        )
    return literal


@dataclass(frozen=True)
class ThresholdReport:
    """Outcome of an invertibility scan over n in [0, scanned_up_to].

    empirical_n0 is the least index from which every scanned norm is nonzero
    with sign equal to sign_of_E; it is an observation about the scanned
    range, not a proven bound.  Zero norms below it are listed.
    """

    params: AlgebraParams
    pq: GenFibParams | None
    sign_of_E: int
    empirical_n0: int
    scanned_up_to: int
    zero_norm_indices: tuple[int, ...]


def invertibility_threshold(params, pq=None, n_max=50):
    """Scan exact norms of F_n (or H^{p,q}_n when pq is given) for n in [0, n_max].

    Raises IndicatorDegenerateError when the applicable growth indicator is
    zero (only possible for pq == (0, 0) with rational parameters), and
    ScanExhaustedError when even the last scanned index breaks the sign
    condition.
    """
    if n_max < 1:
        raise DomainError(f"invertibility_threshold requires n_max >= 1, got {n_max}")
    if pq is None:
        indicator = growth_indicator_E(params)
    else:
        indicator = growth_indicator_Eprime(params, pq)
    if indicator.is_zero():
        raise IndicatorDegenerateError(
            f"growth indicator vanishes for {params} with seeds {pq}"
        )
    target = indicator.sign()
    norms = [_scanned_norm(params, pq, n) for n in range(n_max + 1)]
    n0 = 0
    for n in range(n_max, -1, -1):
        if norms[n].sign() != target:  # zero norm also fails this
            n0 = n + 1
            break
    if n0 > n_max:
        raise ScanExhaustedError(
            f"no sign threshold within [0, {n_max}] for {params} with seeds {pq}"
        )
    zeros = tuple(n for n in range(n0) if not norms[n])
    return ThresholdReport(
        params=params,
        pq=pq,
        sign_of_E=target,
        empirical_n0=n0,
        scanned_up_to=n_max,
        zero_norm_indices=zeros,
    )


def verify_threshold_report(report):
    """Re-verify a ThresholdReport by an independent second scan.

    The second scan evaluates norms through the closed-form route instead of
    the direct quadratic form, and rechecks every invariant: the tail is
    uniformly nonzero with sign sign_of_E, empirical_n0 is minimal, and
    zero_norm_indices lists exactly the zero norms below it.  Raises
    ConsistencyError on any disagreement.
    """
    params = report.params
    pq = report.pq
    indicator = (
        growth_indicator_E(params)
        if pq is None
        else growth_indicator_Eprime(params, pq)
    )
    if indicator.sign() != report.sign_of_E:
        raise ConsistencyError("sign_of_E does not match the growth indicator")
    norms = [_formula_norm(params, pq, n) for n in range(report.scanned_up_to + 1)]
    for n in range(report.empirical_n0, report.scanned_up_to + 1):
        if norms[n].sign() != report.sign_of_E:
            raise ConsistencyError(f"tail condition fails at n = {n}")
    if report.empirical_n0 > 0:
        before = norms[report.empirical_n0 - 1]
        if before.sign() == report.sign_of_E:
            raise ConsistencyError("empirical_n0 is not minimal")
    zeros = tuple(n for n in range(report.empirical_n0) if not norms[n])
    if zeros != report.zero_norm_indices:
        raise ConsistencyError(
            f"zero norms disagree: {zeros} vs {report.zero_norm_indices}"
        )


def _scanned_norm(params, pq, n):
    if pq is None:
        return fib_quat(params, n).norm()
    return gen_fib_quat(params, pq, n).norm()


def _formula_norm(params, pq, n):
    if pq is None:
        return norm_fib_formula(params, n)
    if n >= 1:
        return norm_genfib_formula(params, pq, n)
    # the closed form is stated for n >= 1; fall back to the quadratic form
    # evaluated on closed-form coefficients h_m = p f_{m-1} + q f_m
    p, q = pq
    b1 = params.beta1
    b2 = params.beta2
    h0, h1, h2, h3 = (_h(as_rational(p), as_rational(q), m) for m in range(n, n + 4))
    return h0 * h0 + b1 * (h1 * h1) + b2 * (h2 * h2) + b1 * (b2 * (h3 * h3))
