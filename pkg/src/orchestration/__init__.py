"""
Orchestration package for hklab.

Runs independent pure computations (per prime, per Frobenius exponent)
concurrently and returns their results in input order.
"""

from .fanout import fanout_map, resolve_jobs, run_fanout

__all__ = [
    "fanout_map",
    "resolve_jobs",
    "run_fanout",
]
