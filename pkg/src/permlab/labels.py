"""Edge labels for vertex labels 1..n and their collision classes.

Every pair low < high carries the value P(high, low).  Pairs sharing a value
form a collision class; a maximal permutation graph takes exactly one edge
from each class, so the number of classes D(n) is its exact edge count.
"""
from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

__all__ = [
    "FINGERPRINT_PRIMES",
    "MAX_N",
    "CapError",
    "CollisionTable",
    "LabelPair",
    "build_collision_table",
    "distinct_value_count",
    "enumerate_pairs",
    "singleton_values",
]

MAX_N = 2000

# Three primes just below 2**64.
FINGERPRINT_PRIMES = (2**64 - 59, 2**64 - 83, 2**64 - 95)


class CapError(ValueError):
    """Raised when a request exceeds a configured size cap."""


@dataclass(frozen=True)
class LabelPair:
    low: int
    high: int
    value: int

    @property
    def key(self) -> tuple[int, int]:
        return (self.high, self.low)

    def __str__(self) -> str:
        return f"{self.low}-{self.high}"


def _check_n(n: int, cap: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n > cap:
        raise CapError(f"n={n} exceeds the cap of {cap}")


def iter_pairs(n: int) -> Iterator[LabelPair]:
    # value(high, low) = value(high, low - 1) * (high - low + 1)
    for high in range(2, n + 1):
        value = 1
        for low in range(1, high):
            value *= high - low + 1
            yield LabelPair(low, high, value)


def enumerate_pairs(n: int, cap: int = MAX_N) -> list[LabelPair]:
    """All n(n-1)/2 label pairs, ordered by (high, low)."""
    _check_n(n, cap)
    return list(iter_pairs(n))


@dataclass(frozen=True)
class CollisionTable:
    n: int
    classes: Mapping[int, tuple[LabelPair, ...]]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def pair_count(self) -> int:
        return sum(len(c) for c in self.classes.values())

    def nontrivial(self, min_size: int = 2) -> dict[int, tuple[LabelPair, ...]]:
        return {v: c for v, c in self.classes.items() if len(c) >= min_size}

    def to_csv(self, min_size: int = 1) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["value_decimal", "size", "pairs"])
        for value, pairs in self.nontrivial(min_size).items():
            writer.writerow([value, len(pairs), ";".join(map(str, pairs))])
        return buf.getvalue()


def _freeze(n: int, groups: Mapping[int, list[LabelPair]]) -> CollisionTable:
    classes = {v: tuple(sorted(groups[v], key=lambda p: p.key)) for v in sorted(groups)}
    return CollisionTable(n, classes)


def _residue_pairs(n: int) -> Iterator[tuple[int, int, int]]:
    # one residue modulo the product carries the same information as the
    # three residues (the moduli are coprime), at one multiplication per pair
    modulus = math.prod(FINGERPRINT_PRIMES)
    for high in range(2, n + 1):
        res = 1
        for low in range(1, high):
            res = res * (high - low + 1) % modulus
            yield res, low, high


def _fingerprint_groups(n: int) -> dict[int, list[LabelPair]]:
    buckets: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for fp, low, high in _residue_pairs(n):
        buckets[fp].append((low, high))
    groups: dict[int, list[LabelPair]] = defaultdict(list)
    for members in buckets.values():
        # exact confirmation: a bucket may in principle mix distinct values
        for low, high in members:
            value = math.perm(high, low)
            groups[value].append(LabelPair(low, high, value))
    return groups


def build_collision_table(n: int, mode: str = "exact", cap: int = MAX_N) -> CollisionTable:
    """Group all label pairs of 1..n by value.

    ``mode="fingerprint"`` buckets pairs by their residues modulo
    FINGERPRINT_PRIMES first and confirms each bucket by exact comparison.
    Both modes return identical tables: classes keyed by increasing value,
    each class ordered by (high, low).
    """
    _check_n(n, cap)
    if mode == "exact":
        groups: dict[int, list[LabelPair]] = defaultdict(list)
        for pair in iter_pairs(n):
            groups[pair.value].append(pair)
    elif mode == "fingerprint":
        groups = _fingerprint_groups(n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _freeze(n, groups)


@lru_cache(maxsize=4096)
def _distinct_count(n: int) -> int:
    return len({pair.value for pair in iter_pairs(n)})


def distinct_value_count(n: int, cap: int = MAX_N) -> int:
    """D(n): the number of distinct edge values over all pairs in 1..n."""
    _check_n(n, cap)
    return _distinct_count(n)


def singleton_values(n: int, cap: int = MAX_N) -> set[int]:
    table = build_collision_table(n, cap=cap)
    return {v for v, pairs in table.classes.items() if len(pairs) == 1}
