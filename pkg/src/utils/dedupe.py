"""
Generator clean-up before a Gröbner computation.

Responsibility: Keep the first occurrence of each key in input order, count
repeats, and count the items that have no key at all (zero generators).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, Iterable, Optional, TypeVar

T = TypeVar("T")


@dataclass
class DedupeResult(Generic[T]):
    unique: list[T] = field(default_factory=list)
    repeated: int = 0
    dropped: int = 0

    @property
    def removed(self) -> int:
        return self.repeated + self.dropped


def dedupe_by_key(items: Iterable[T], key_fn: Callable[[T], Optional[Hashable]]) -> DedupeResult[T]:
    """
    First-seen unique items under ``key_fn``.

    An item whose key is None is dropped and counted in ``dropped``; a key
    already seen counts in ``repeated``.
    """
    result: DedupeResult[T] = DedupeResult()
    keys: set[Hashable] = set()
    for item in items:
        key = key_fn(item)
        if key is None:
            result.dropped += 1
        elif key in keys:
            result.repeated += 1
        else:
            keys.add(key)
            result.unique.append(item)
    return result
