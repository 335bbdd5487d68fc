"""Discrete matrix norms: constructive witnesses, exact oracles and audits.

Matrices are 2-d numpy arrays (real or complex). Functions return the same
report dictionaries the command-line tool prints with ``--json``.
"""

from ._core import (
    SCHEMA_VERSION,
    SpecnormError,
    delta_witness,
    entropy,
    exact_delta,
    exact_rho,
    format_matrix,
    gen_invsqrt,
    gen_tensor,
    graph_audit,
    graph_witness,
    kneser_audit,
    norms,
    parse_matrix,
    rho_witness,
    tau,
    tau_scaled_series,
)

__all__ = [
    "SCHEMA_VERSION",
    "SpecnormError",
    "delta_witness",
    "entropy",
    "exact_delta",
    "exact_rho",
    "format_matrix",
    "gen_invsqrt",
    "gen_tensor",
    "graph_audit",
    "graph_witness",
    "kneser_audit",
    "norms",
    "parse_matrix",
    "rho_witness",
    "tau",
    "tau_scaled_series",
]
