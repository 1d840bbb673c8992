"""Graded Lie algebra workbench.

Exact degree-by-degree construction of finitely presented graded Lie
algebras on two degree-1 generators over GF(p^k), central quotients,
diamond classification and identity checking.
"""

import json as _json

from ._core import (
    Field,
    GradedAlgebra,
    Presentation,
    ThinReport,
    binom_mod_p,
    brute_quotient_dims,
    build,
    diamond_report,
    free_dims,
    gen_jacobi_expand,
    lyndon_words,
    nottingham_mixed,
    nottingham_mixed_lambda0,
    parse_presentation,
    read_presentation_file,
    suite_names,
    verify_suite,
)

__all__ = [
    "Field",
    "GradedAlgebra",
    "Presentation",
    "ThinReport",
    "analyze",
    "binom_mod_p",
    "brute_quotient_dims",
    "build",
    "diamond_report",
    "free_dims",
    "gen_jacobi_expand",
    "lyndon_words",
    "nottingham_mixed",
    "nottingham_mixed_lambda0",
    "parse_presentation",
    "read_presentation_file",
    "report_dict",
    "suite_names",
    "verify_suite",
    "verify_suites",
]


def report_dict(report):
    """ThinReport -> plain dict (the CLI's JSON report schema)."""
    return _json.loads(report.to_json())


def analyze(p, q, s, lam="0", k=1, max_degree=None, iterations=1):
    """Build a preset, quotient by the graded centre, classify diamonds.

    Returns (N, L, report_dict).
    """
    pres = (
        nottingham_mixed_lambda0(p, q, s)
        if str(lam) == "0"
        else nottingham_mixed(p, q, s, str(lam), k)
    )
    if max_degree is None:
        max_degree = (2 * p**s + 2) * (q - 1) + 6
    n = build(pres, max_degree)
    l = n.central_quotient(max_degree - 1, iterations)
    rep = diamond_report(l)
    return n, l, report_dict(rep)


def verify_suites(quotient, pre_quotient, report, suites=None, at=None):
    """Run identity suites; returns {suite: result dict}."""
    out = {}
    for name in suites or suite_names():
        out.update(_json.loads(verify_suite(quotient, pre_quotient, report, name, at)))
    return out
