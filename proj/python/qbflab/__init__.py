"""Quantified boolean formula laboratory.

Thin wrapper over the C++ core: structured results come back as Python
dicts and lists.
"""

import json

from ._qbflab import (
    BudgetExceededError,
    ParseError,
    PrenexQbf,
    QbfError,
    anf_size,
    bounded_skolem_decision,
    classify_prefix,
    evaluate_qbf,
    matrix_truth_table,
    parse_qbf_text,
    parse_qdimacs,
    phi_prime,
    print_qbf,
    print_qdimacs,
    replay_phi_prime_instance,
    substitute,
)
from . import _qbflab

__all__ = [
    "BudgetExceededError",
    "ParseError",
    "PrenexQbf",
    "QbfError",
    "anf_size",
    "audit",
    "bounded_skolem_decision",
    "classify_prefix",
    "evaluate_qbf",
    "exists_skolem_witness",
    "matrix_truth_table",
    "parse_qbf_text",
    "parse_qdimacs",
    "phi_prime",
    "print_qbf",
    "print_qdimacs",
    "replay_phi_prime_instance",
    "substitute",
    "to_standard_form",
    "verify_certificate",
]


def to_standard_form(q):
    """Returns (standard_form, mapping) where mapping is a list of dicts."""
    standard, mapping = _qbflab._to_standard_form(q)
    return standard, json.loads(mapping)


def exists_skolem_witness(q, budget=20.0):
    """Returns (value, certificate); certificate is a list of dicts or None."""
    value, cert = _qbflab._exists_skolem_witness(q, budget)
    return value, (json.loads(cert) if cert else None)


def verify_certificate(q, certificate):
    return _qbflab._verify_certificate(q, json.dumps(certificate))


def audit(claim, *, seed=0, n=2, family="EXHAUSTIVE_2VAR", count=100, max_depth=4,
          max_clauses=3, n_max=3, k_max=10):
    """Runs one audit and returns its report as a dict."""
    if claim == "swap-criterion":
        text = _qbflab._swap_criterion_report()
    elif claim == "residual-count":
        text = _qbflab._residual_count_report(n_max)
    elif claim == "skolem-blowup":
        text = _qbflab._skolem_blowup_report(k_max)
    elif claim == "phi-prime-equivalence":
        text = _qbflab._phi_prime_equivalence_report(seed, n, family, count, max_depth, max_clauses)
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return json.loads(text)
