"""The six witness families S1..S6 and the lower-bound bookkeeping around them.

Each family is a set of edge values P(top, sub) known to sit in collision
classes of their own.  Elements keep the parameters that produced them so a
reader can re-derive every value.

Label-validity convention: an element belongs to S_i(n) when its top is at
most n.  With ``strict_tops`` the S4/S5 families use the printed strict
inequality top < n instead; for S2 and S3 the printed bounds (q < n,
q < n - 1) already coincide with top <= n.
"""
from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .numtheory import (
    exceeds_shifted_sqrt,
    factorial,
    factorial_valuation,
    falling_factorial,
    integer_log,
    m_index,
    pi_shifted_sqrt,
    prime_pi,
    prime_power_decompose,
    primes_up_to,
)

__all__ = [
    "SET_IDS",
    "ClosedForms",
    "DeltaReport",
    "WitnessConfig",
    "WitnessElement",
    "WitnessSet",
    "closed_form_cardinalities",
    "first_n",
    "s1",
    "s2",
    "s3",
    "s4",
    "s5",
    "s6",
    "union_and_delta",
    "witness_csv",
    "witness_sets",
]

SET_IDS = ("S1", "S2", "S3", "S4", "S5", "S6")


@dataclass(frozen=True)
class WitnessConfig:
    s_min: int = 2
    strict_tops: bool = False

    def __post_init__(self) -> None:
        if self.s_min not in (2, 3):
            raise ValueError(f"s_min must be 2 or 3, got {self.s_min}")

    @property
    def config_id(self) -> str:
        return f"smin{self.s_min}-{'strict' if self.strict_tops else 'loose'}"

    def as_dict(self) -> dict:
        return {"s_min": self.s_min, "strict_tops": self.strict_tops}


DEFAULT_CONFIG = WitnessConfig()


@dataclass(frozen=True)
class WitnessElement:
    set_id: str
    value: int
    top: int
    sub: int
    params: dict = field(default_factory=dict, compare=False)

    def recheck(self) -> bool:
        return 1 <= self.sub < self.top and falling_factorial(self.top, self.sub) == self.value


@dataclass(frozen=True)
class WitnessSet:
    set_id: str
    n: int
    elements: tuple[WitnessElement, ...]

    @property
    def values(self) -> frozenset[int]:
        return frozenset(e.value for e in self.elements)

    def __len__(self) -> int:
        return len(self.values)


def _element(set_id: str, top: int, sub: int, **params: int) -> WitnessElement:
    return WitnessElement(set_id, falling_factorial(top, sub), top, sub, params)


def _s4_s5_params(bound: int) -> Iterator[tuple[int, int, int, int]]:
    """(q, l, m, ql) for every prime q and l >= 1 with ql < bound."""
    for q in primes_up_to(bound - 1):
        l = 1
        while q * l < bound:
            yield q, l, l + factorial_valuation(q, l), q * l
            l += 1


# ---------------------------------------------------------------------------
# the six families
# ---------------------------------------------------------------------------

def s1(n: int) -> WitnessSet:
    """P(k, i) for k = 3..n and i = k - m_k .. k - 1."""
    elems = []
    for k in range(3, n + 1):
        mk = m_index(k)
        for i in range(k - mk, k):
            elems.append(_element("S1", k, i, k=k, i=i, m_k=mk))
    return WitnessSet("S1", n, tuple(elems))


def s2(n: int, s_min: int = 2) -> WitnessSet:
    """P(q+1, s) for primes q with s + sqrt(s+1) < q < n and s >= s_min."""
    elems = []
    for q in primes_up_to(n - 1):
        s = s_min
        # q > s + sqrt(s+1) fails for every larger s once it fails
        while exceeds_shifted_sqrt(q, s):
            elems.append(_element("S2", q + 1, s, q=q, s=s))
            s += 1
    return WitnessSet("S2", n, tuple(elems))


def s3(n: int) -> WitnessSet:
    """P(q+2, s) for primes q with 4s < q < n - 1 and s >= 3."""
    elems = []
    for q in primes_up_to(n - 2):
        s = 3
        while 4 * s < q:
            elems.append(_element("S3", q + 2, s, q=q, s=s))
            s += 1
    return WitnessSet("S3", n, tuple(elems))


def _s45(n: int, set_id: str, top_of: Callable[[int, int, int, int], int], strict: bool) -> WitnessSet:
    limit = n - 1 if strict else n
    elems = []
    for q, l, m, ql in _s4_s5_params(n):
        k = 1
        while (top := top_of(q, l, m, k)) <= limit:
            elems.append(_element(set_id, top, ql - 1, q=q, l=l, k=k, m=m))
            k += 1
    return WitnessSet(set_id, n, tuple(elems))


def s4(n: int, strict_tops: bool = False) -> WitnessSet:
    """P(q^m k + ql - 1, ql - 1) with m = l + v_q(l!)."""
    return _s45(n, "S4", lambda q, l, m, k: q**m * k + q * l - 1, strict_tops)


def s5(n: int, strict_tops: bool = False) -> WitnessSet:
    """P(q^m (k + l) - 1, ql - 1) with m = l + v_q(l!)."""
    return _s45(n, "S5", lambda q, l, m, k: q**m * (k + l) - 1, strict_tops)


def s6(n: int) -> WitnessSet:
    """P(2, 1) together with P(2x, 1) for prime powers x != 3 and 2x <= n."""
    elems = [_element("S6", 2, 1, q=2, h=0)]
    for x in range(2, n // 2 + 1):
        qh = prime_power_decompose(x)
        if qh is None or x == 3:
            continue
        q, h = qh
        elems.append(_element("S6", 2 * x, 1, q=q, h=h))
    return WitnessSet("S6", n, tuple(elems))


def witness_sets(n: int, config: WitnessConfig = DEFAULT_CONFIG) -> dict[str, WitnessSet]:
    return {
        "S1": s1(n),
        "S2": s2(n, config.s_min),
        "S3": s3(n),
        "S4": s4(n, config.strict_tops),
        "S5": s5(n, config.strict_tops),
        "S6": s6(n),
    }


def first_n(element: WitnessElement, config: WitnessConfig = DEFAULT_CONFIG) -> int:
    """Smallest n at which ``element`` belongs to its family."""
    if element.set_id in ("S4", "S5") and config.strict_tops:
        return element.top + 1
    return element.top


# ---------------------------------------------------------------------------
# union, delta and the printed closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaReport:
    n: int
    cards: dict[str, int]
    multiplicity: dict[int, int]
    delta: int
    union_size: int

    @property
    def union(self) -> frozenset[int]:
        return frozenset(self.multiplicity)


def union_and_delta(n: int, config: WitnessConfig = DEFAULT_CONFIG,
                    sets: dict[str, WitnessSet] | None = None) -> DeltaReport:
    """Multiplicities over S1, S2, S3, S4 u S5, S6 and delta = sum(mult - 1)."""
    if sets is None:
        sets = witness_sets(n, config)
    parts = {
        "S1": sets["S1"].values,
        "S2": sets["S2"].values,
        "S3": sets["S3"].values,
        "S45": sets["S4"].values | sets["S5"].values,
        "S6": sets["S6"].values,
    }
    mult: Counter[int] = Counter()
    for values in parts.values():
        mult.update(values)
    delta = sum(c - 1 for c in mult.values())
    return DeltaReport(
        n=n,
        cards={k: len(v) for k, v in parts.items()},
        multiplicity=dict(sorted(mult.items())),
        delta=delta,
        union_size=len(mult),
    )


@dataclass(frozen=True)
class ClosedForms:
    s1: int
    s2: int
    s3: int
    s3_proof: int
    s6: int


def _s2_upper_limit(n: int) -> int:
    # floor((2n + 3 - sqrt(4n + 18)) / 2) == floor((2n + 3 - ceil(sqrt(4n + 18))) / 2)
    t = 4 * n + 18
    root = math.isqrt(t)
    ceil_root = root if root * root == t else root + 1
    return (2 * n + 3 - ceil_root) // 2


def closed_form_cardinalities(n: int) -> ClosedForms:
    """Literal evaluation of the printed cardinality summands.

    These are diagnostics: for small n they disagree with the direct
    enumerations (e.g. the S1 summand is 2 short for 3 <= n <= 6).
    ``s3`` sums s = 2..floor((n-1)/4); ``s3_proof`` is the variant summing
    s = 3..floor((n-3)/4).
    """
    m = m_index(n)
    first = n * m - factorial(m) - 4 - sum(factorial(k) for k in range(3, m))

    pi_top = prime_pi(n - 1)
    second = sum(pi_top - pi_shifted_sqrt(s) for s in range(2, _s2_upper_limit(n) + 1))
    third = sum(pi_top - prime_pi(4 * s) for s in range(2, (n - 1) // 4 + 1))
    third_proof = sum(pi_top - prime_pi(4 * s) for s in range(3, (n - 3) // 4 + 1))
    sixth = sum(integer_log(q, n // 2) for q in primes_up_to(n // 2))
    return ClosedForms(first, second, third, third_proof, sixth)


def witness_csv(sets: dict[str, WitnessSet]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["set_id", "value_decimal", "top", "sub", "params_json"])
    for set_id in SET_IDS:
        if set_id not in sets:
            continue
        for e in sets[set_id].elements:
            writer.writerow([e.set_id, e.value, e.top, e.sub, json.dumps(e.params, sort_keys=True)])
    return buf.getvalue()
