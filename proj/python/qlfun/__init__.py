"""q-Euler numbers, q-zeta/l-functions and p-adic q-l-functions.

Thin python surface over the C++ core: exact rationals, finite-precision
p-adic numbers, the q-Euler number/polynomial family, archimedean and
p-adic l-functions, and the named verification suites.
"""

import json as _json

from ._qlfun import (
    ConvergenceError,
    DomainError,
    PadicNumber,
    PrecisionError,
    Rational,
    alt_power_sum,
    alt_power_sum_closed,
    binomial,
    classical_euler_number,
    dirichlet_l,
    generalized_binomial,
    padic_l,
    padic_power,
    q_euler_number,
    q_euler_polynomial,
    q_int,
    run_suite_json,
    suite_names,
    teichmuller,
    theorem5_lhs,
    volkenborn_approx,
    zeta_E,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "PadicNumber",
    "PrecisionError",
    "Rational",
    "alt_power_sum",
    "alt_power_sum_closed",
    "binomial",
    "classical_euler_number",
    "dirichlet_l",
    "generalized_binomial",
    "padic_l",
    "padic_power",
    "q_euler_number",
    "q_euler_polynomial",
    "q_int",
    "run_suite",
    "run_suite_json",
    "suite_names",
    "teichmuller",
    "theorem5_lhs",
    "volkenborn_approx",
    "zeta_E",
]


def run_suite(name, **params):
    """Run a named verification suite and return the report as a dict."""
    return _json.loads(run_suite_json(name, **params))
