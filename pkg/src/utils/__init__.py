"""
Utilities package for hklab.

This package contains small reusable helpers for:
- Deterministic input hashing
- De-duplication
- Exact number formatting
"""

from .dedupe import DedupeResult, dedupe_by_key
from .formatting import format_exact, parse_range_or_list, to_decimal_string
from .hash_utils import calculate_hash, compute_input_hash

__all__ = [
    "DedupeResult",
    "calculate_hash",
    "compute_input_hash",
    "dedupe_by_key",
    "format_exact",
    "parse_range_or_list",
    "to_decimal_string",
]
