"""Exact arithmetic for Fibonacci and Fibonacci-Narayana quaternions in
generalized quaternion algebras H(beta1, beta2), with closed-form norm
formulas, growth indicators in Q(sqrt 5), numeric Binet cross-checks, and an
audit engine that verifies or refutes each classical identity.
"""

from ._kernel import KERNEL_BACKEND, Rational
from .algebra import (
    AlgebraParams,
    Quaternion,
    basis,
    combine,
    conj,
    inverse,
    mul,
    norm,
    square,
    trace,
)
from .analytic import (
    CubicRoots,
    SeriesCheck,
    binet_fib,
    binet_narayana,
    binet_narayana_quat,
    cubic_roots,
    gf_check,
)
from .audit import (
    AS_STATED,
    CORRECTED,
    DEFAULT_SEED,
    AuditReport,
    Counterexample,
    IdentityCheck,
    adjudicate,
    aggregate_ok,
    audit,
    audit_all,
    expected_failure_ids,
    get_check,
    list_identities,
)
from .errors import (
    AlgebraMismatchError,
    ConsistencyError,
    DomainError,
    FibquatError,
    IndicatorDegenerateError,
    NotInvertibleError,
    PrecisionGuardError,
    ScanExhaustedError,
    SeriesMismatchError,
    UnknownIdentityError,
)
from .normforms import (
    ThresholdReport,
    growth_indicator_E,
    growth_indicator_Eprime,
    invertibility_threshold,
    norm_fib_formula,
    norm_genfib_formula,
    swamy_norm_as_stated,
    swamy_norm_corrected,
    verify_threshold_report,
)
from .quatseq import fib_quat, gen_fib_quat, narayana_quat
from .sequences import (
    GenFibParams,
    binom,
    fib,
    figurate,
    gen_fib,
    herd_total,
    narayana,
)
from .surd import ALPHA, QuadraticSurd

__version__ = "0.1.0"
