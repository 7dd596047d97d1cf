"""Supersingular and Fricke polynomials over F_p.

Polynomials are lists of coefficients in ascending degree order, reduced mod p.
"""

from ._core import (
    FrickeError,
    SplitPrimeResult,
    Unsupported,
    VerificationReport,
    Verdict,
    Witness,
    class_pipeline_targets,
    expected_degree,
    factor,
    fricke_ss,
    in_theorem_range,
    is_prime,
    isogeny_spot_check,
    monster_split_primes,
    render,
    run_cli,
    run_identity_suite,
    split_primes,
    ss_poly,
    sweep_congruence,
    verify_class_pipeline,
    verify_congruence,
    verify_identity,
)

__all__ = [
    "FrickeError",
    "SplitPrimeResult",
    "Unsupported",
    "VerificationReport",
    "Verdict",
    "Witness",
    "class_pipeline_targets",
    "expected_degree",
    "factor",
    "fricke_ss",
    "in_theorem_range",
    "is_prime",
    "isogeny_spot_check",
    "monster_split_primes",
    "render",
    "run_cli",
    "run_identity_suite",
    "split_primes",
    "ss_poly",
    "sweep_congruence",
    "verify_class_pipeline",
    "verify_congruence",
    "verify_identity",
]
