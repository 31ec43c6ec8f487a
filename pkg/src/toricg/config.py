"""Capacity bounds for the exhaustive enumerations.

All size limits live here so that callers (and the command line's
``--unsafe-max`` flag) have a single source of truth.  The defaults keep
every enumeration comfortably under a few seconds of CPU on ordinary
hardware:

==================  =======  ==================================================
key                 default  what it bounds (n = dimension / semilength)
==================  =======  ==================================================
parking_trees       7        enumerate_parking_trees: (n!)^2 trees (25.4M at 7)
b_permutations      7        b_permutations: filters (n+1)! permutations
direct_route        6        toric_g_direct: parking-tree route for one polytope
functions_route     7        123-avoiding (parking) function sweeps: n^n inputs
table               12       closed-form table rows (gamma / h routes)
==================  =======  ==================================================
"""

from .errors import CapacityError

CAPS = {
    "parking_trees": 7,
    "b_permutations": 7,
    "direct_route": 6,
    "functions_route": 7,
    "table": 12,
}


def check_capacity(kind: str, n: int, unsafe: bool = False) -> None:
    """Raise CapacityError when ``n`` exceeds the configured bound.

    ``unsafe=True`` (the --unsafe-max override) skips the check.
    """
    cap = CAPS[kind]
    if not unsafe and n > cap:
        raise CapacityError(
            f"{kind} is bounded at n <= {cap} (requested n = {n}); "
            "pass unsafe/--unsafe-max to override"
        )
