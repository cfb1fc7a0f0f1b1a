"""Content hashes of experiment inputs.

Every report carries the SHA-256 of its normalized inputs, so two runs can be
compared by hash without diffing their parameters.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Mapping

# Inputs that change how a run is executed but not what it computes.
_INPUT_HASH_EXCLUDE_FIELDS: frozenset[str] = frozenset({
    "jobs",
    "verbose",
    "json_path",
    "csv_path",
})


def canonical_json(payload: Any) -> str:
    """Key-sorted, whitespace-free JSON; Fractions and QuadNums go through str()"""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"), default=str)


def calculate_hash(payload: Any) -> str:
    """Hex SHA-256 of the canonical JSON form"""
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def compute_input_hash(inputs: Mapping[str, Any]) -> str:
    """Hash experiment inputs, ignoring execution-only settings."""
    return calculate_hash({k: v for k, v in inputs.items() if k not in _INPUT_HASH_EXCLUDE_FIELDS})
