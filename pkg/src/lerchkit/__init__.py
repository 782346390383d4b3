"""Lerch transcendent toolkit.

Evaluation of Phi(s, z, c) = sum_{n>=0} z^n (n+c)^{-s} as a multivalued
function (principal branch, cuts attached to the upper half-plane),
closed-form monodromy over homotopy words, exact rational values at
non-positive integer s, the c-deformed polylogarithm Fuchsian ODE with
its monodromy representation, and residual checks for the differential
and reflection identities the family satisfies.
"""

from .branch_numerics import (branched_power, complex_gamma, principal_log,
                              reciprocal_gamma, semi_principal_log)
from .deformed_polylog import (FuchsianBasis, MonodromyMatrix, WeylOperator,
                               basis, li_star, numeric_transport, rho,
                               rho_word, unipotency_class, weyl_expand,
                               z0_loop, z1_loop)
from .errors import (AccuracyError, BranchError, DomainError, IdentityViolation,
                     LerchError, PoleError, StratumError, TransportError)
from .eval_core import (EvalResult, LerchPoint, StratumClass, classify_stratum,
                        extended_polylog, hurwitz_zeta, lerch_zeta,
                        periodic_zeta, phi, phi_series)
from .monodromy import (BranchValue, GeneratorLetter, HomotopyWord,
                        branch_value, f_elementary, monodromy,
                        monodromy_space_basis, parse_word, reduce_word,
                        z_profile)
from .special_values import (BivariateRational, egf_check, laurent_coeffs,
                             negative_polylog, q_ratio, r_poly)
from .verify import ResidualReport, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "BivariateRational", "BranchError", "BranchValue",
    "DomainError", "EvalResult", "FuchsianBasis", "GeneratorLetter",
    "HomotopyWord", "IdentityViolation", "LerchError", "LerchPoint",
    "MonodromyMatrix", "PoleError", "ResidualReport", "StratumClass",
    "StratumError", "SuiteReport", "TransportError", "WeylOperator",
    "basis", "branch_value", "branched_power", "classify_stratum",
    "complex_gamma", "egf_check", "extended_polylog", "f_elementary",
    "hurwitz_zeta", "laurent_coeffs", "lerch_zeta", "li_star", "monodromy",
    "monodromy_space_basis", "negative_polylog", "numeric_transport",
    "parse_word", "periodic_zeta", "phi", "phi_series", "principal_log",
    "q_ratio", "r_poly", "reduce_word", "reciprocal_gamma", "rho",
    "rho_word", "run_suite", "semi_principal_log", "unipotency_class",
    "weyl_expand", "z0_loop", "z1_loop", "z_profile",
]
