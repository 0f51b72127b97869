"""Truncation-error approximants for series of special functions."""

from ._core import (
    DegenerateParameter,
    DegeneratePade,
    DomainError,
    Error,
    FactorialGamma,
    Family,
    GammaVector,
    InvariantViolation,
    Kind,
    KindMismatch,
    OracleFailure,
    PadeApproximant,
    PoleError,
    Scalar,
    bernoulli,
    corrected_sum,
    e1_reference,
    euler_maclaurin_zeta_tail,
    gamma_to_factorial,
    make_2f1,
    make_e1,
    make_pfq,
    make_zeta,
    pade_from_series,
    partial_sum,
    pochhammer,
    remainder,
    remainder_exact,
    remainder_factorial,
    remainder_pade,
    remainder_power,
    residual_defect,
    scale_at,
    solve_gamma,
    stirling_first,
    term,
    zeta_reference,
)

__all__ = [name for name in dir() if not name.startswith("_")]
