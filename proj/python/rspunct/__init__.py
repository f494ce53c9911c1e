"""Reed-Solomon puncturing laboratory.

Thin wrapper over the C++ core: code construction over prime fields,
rate/radius trade-off curves, exact list-decoding/recovery oracles with
witnesses, bad-puncturing certificate checking, and reproducible Monte Carlo
puncturing experiments.  Composite results cross the boundary as JSON and are
decoded to plain dicts here.
"""

import json as _json

from ._core import (
    RNG_ALGORITHM,
    CapExceededError,
    InfeasibleError,
    PrimeField,
    RSCode,
    capacity_radius,
    chernoff_tail,
    count_bad_puncturings,
    curves_csv,
    error_budget,
    field_size_bound,
    is_list_decodable,
    is_list_recoverable,
    johnson_radius,
    list_size,
    paper_radius,
    substream_seed,
    sweep_csv,
    theorem_radius,
)
from . import _core

__all__ = [
    "RNG_ALGORITHM",
    "CapExceededError",
    "InfeasibleError",
    "PrimeField",
    "RSCode",
    "capacity_radius",
    "chernoff_tail",
    "check_certificate",
    "count_bad_puncturings",
    "curves_csv",
    "error_budget",
    "field_size_bound",
    "is_list_decodable",
    "is_list_recoverable",
    "johnson_radius",
    "list_decoding_witness",
    "list_recovery_witness",
    "list_size",
    "paper_radius",
    "plan",
    "run_experiment",
    "substream_seed",
    "sweep_csv",
    "theorem_radius",
]


def plan(l, rate, eps=0.1, zeta=None, n=None):
    """Full feasible parameter assignment as a dict; raises InfeasibleError."""
    return _json.loads(_core.plan_json(l, rate, eps, zeta, n))


def list_decoding_witness(code, r, L, jobs=1):
    """Violation of (r, L) list-decodability as a dict, or None if decodable."""
    text = _core.list_decoding_witness_json(code, r, L, jobs)
    return None if text is None else _json.loads(text)


def list_recovery_witness(code, r, l, L, jobs=1):
    """Violation of (r, l, L) list-recoverability as a dict, or None."""
    text = _core.list_recovery_witness_json(code, r, l, L, jobs)
    return None if text is None else _json.loads(text)


def check_certificate(cert, parent):
    """Validate a bad-puncturing certificate (dict or JSON string).

    Returns (valid, first_violated); first_violated is 1, 2, or 3 for the
    first failing condition and 0 when the certificate is valid.
    """
    text = cert if isinstance(cert, str) else _json.dumps(cert)
    return _core.check_certificate_json(text, parent)


def run_experiment(config, jobs=1):
    """Monte Carlo puncturing experiment; config is a dict or JSON string.

    Returns the summary as a dict (trial/failure counts, failure fraction,
    95% confidence radius, and the tail-bound regime report).
    """
    text = config if isinstance(config, str) else _json.dumps(config)
    return _json.loads(_core.run_experiment_json(text, jobs))
