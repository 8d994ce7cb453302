"""Exact Sombor indices of total and unit graphs of finite commutative rings.

Values are exact: a ``Radical`` is a finite sum of rational multiples of
square roots of square-free integers. ``float(r)`` evaluates one.
"""

import json

from ._sombor import (
    CeilingExceededError,
    EmptySweepError,
    NonLocalRingError,
    OffFamilyError,
    Radical,
    Ring,
    SomborError,
    closed_forms,
    complement_identity_residual,
    edge_partition,
    edges,
    predicted_degrees,
    so_regular,
    so_total_even,
    so_total_local,
    so_total_p2q,
    so_total_pq,
    so_total_prime_power,
    so_unit_even,
    so_unit_local,
    so_unit_p2q,
    so_unit_pq,
    so_unit_prime_power,
    sombor_index,
)
from . import _sombor

__all__ = [
    "CeilingExceededError",
    "EmptySweepError",
    "NonLocalRingError",
    "OffFamilyError",
    "Radical",
    "Ring",
    "SomborError",
    "closed_forms",
    "complement_identity_residual",
    "edge_partition",
    "edges",
    "predicted_degrees",
    "so_regular",
    "so_total_even",
    "so_total_local",
    "so_total_p2q",
    "so_total_pq",
    "so_total_prime_power",
    "so_unit_even",
    "so_unit_local",
    "so_unit_p2q",
    "so_unit_pq",
    "so_unit_prime_power",
    "sombor_index",
    "sweep",
    "verify",
]


def _ring(ring):
    return Ring.integers_mod(ring) if isinstance(ring, int) else ring


def verify(ring, graph="total", ceiling=1 << 14):
    """Brute force against every applicable closed form; returns a dict.

    ``ring`` is a Ring or an int n meaning Z_n.
    """
    return json.loads(_sombor._verify_json(_ring(ring), graph, ceiling))


def sweep(family="all", max_n=100, min_n=2, max_poly_order=0, graphs=("total", "unit"), workers=1):
    """Verify a whole family; returns the JSON report as a dict."""
    return json.loads(_sombor._sweep_json(family, min_n, max_n, max_poly_order, list(graphs), workers))
