"""Exhaustive checks of the lemma and theorem statements over finite ranges.

Checkers return a :class:`ClaimReport`; they never raise on a failed claim.
Claim ids follow the textual order of the lemmas (L1..L5) because the source
numbers them inconsistently; theorem ids are T31, T32, T41, T43 and
SANDWICH for the combined lower <= exact <= upper check.

Representation search.  A value v is written as P(k, r) with r < k.  For a
fixed r the map k -> P(k, r) is strictly increasing, so at most one k fits,
and (r+1)! <= v bounds r.  Hence the search over all (k, r) is finite and
complete; :func:`representations` walks it without truncation.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bounds import i_h, lower_bound, upper_bound, w_h_direct
from .labels import distinct_value_count
from .numtheory import (
    exceeds_shifted_sqrt,
    factorial,
    falling_factorial,
    integer_root,
    m_index,
    prime_power_decompose,
    primes_up_to,
)
from .witness import DEFAULT_CONFIG, WitnessConfig, first_n, s1, s2, s3, s4, s5, s6

__all__ = [
    "CLAIM_IDS",
    "ClaimReport",
    "check_L1",
    "check_L2",
    "check_L3",
    "check_L4",
    "check_L5",
    "check_T31",
    "check_T32",
    "check_T41",
    "check_T43",
    "check_sandwich",
    "representations",
    "run_claims",
]

CLAIM_IDS = ("L1", "L2", "L3", "L4", "L5", "T31", "T32", "T41", "T43", "SANDWICH")

LEMMA_MAP = ("L1: first lemma (max label below P(k, k-m) when m! < k); "
             "L2: P(q+1, s) for q > s + sqrt(s+1); "
             "L3: P(q+2, s) for q > 4s, s >= 3; "
             "L4: S4/S5 forms with m = l + v_q(l!); "
             "L5: P(2q^h, 1) for prime powers q^h != 3")


@dataclass
class ClaimReport:
    claim_id: str
    range: dict
    config: dict = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    flags: list[dict] = field(default_factory=list)
    checked: int = 0
    notes: str = ""

    @property
    def status(self) -> str:
        return "counterexamples_found" if self.counterexamples else "verified"

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "range": self.range,
            "config": self.config,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "flags": self.flags,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False)


def _counterexample(params: dict, value: int, other: tuple[int, int] | dict) -> dict:
    if isinstance(other, tuple):
        other = {"top": other[0], "sub": other[1]}
    return {"params": params, "value_decimal": str(value), "other_representation": other}


# ---------------------------------------------------------------------------
# representation search
# ---------------------------------------------------------------------------

def _top_for(value: int, r: int, max_top: int | None) -> int | None:
    """The k > r with P(k, r) == value, if any."""
    if r == 1:
        k = value
    else:
        e = math.log(value) / r
        # k lies in [root, root + r - 1]; start mid-window and walk
        root = int(math.exp(e)) if e < 36 else integer_root(value, r)
        k = max(r + 1, root + (r - 1) // 2)
        if max_top is not None:
            k = min(k, max_top)
        if k <= r:
            return None
        p = math.perm(k, r)
        while p < value:
            k += 1
            p = p * k // (k - r)
            if max_top is not None and k > max_top:
                return None
        while p > value and k > r + 1:
            p = p * (k - r) // k
            k -= 1
        if p != value:
            return None
    if k <= r or (max_top is not None and k > max_top):
        return None
    return k


def representations(value: int, min_sub: int = 1, max_top: int | None = None) -> list[tuple[int, int]]:
    """Every (top, sub) with sub >= min_sub, top > sub and P(top, sub) == value.

    ``max_top`` only prunes; callers pass it when a larger top is already
    impossible (for a value P(t, s), any representation with sub > s has
    top < t, because P(t, sub) > P(t, s)).
    """
    out = []
    r = max(min_sub, 1)
    smallest = factorial(r + 1)  # P(r+1, r), the least value with subscript r
    while smallest <= value:
        if max_top is not None and r + 1 > max_top:
            break
        k = _top_for(value, r, max_top)
        if k is not None:
            out.append((k, r))
        r += 1
        smallest *= r + 1
    return out


# ---------------------------------------------------------------------------
# lemmas
# ---------------------------------------------------------------------------

def check_L1(n_max: int) -> ClaimReport:
    """For m! < k: every P(h, r) with r <= h < k is below P(k, k - m).

    The maximum over the earlier rows is tracked by scanning every pair, not
    by assuming it equals (k-1)!.  The hypothesis used is m! < k; the printed
    statement says m! < n, which the proof does not use.
    """
    rep = ClaimReport("L1", {"n_max": n_max},
                      notes="hypothesis taken as m! < k; " + LEMMA_MAP)
    best, best_at = 0, (0, 0)
    for k in range(2, n_max + 1):
        # fold row h = k - 1 into the running maximum
        h = k - 1
        for r in range(1, h + 1):
            v = falling_factorial(h, r)
            if v > best:
                best, best_at = v, (h, r)
        if k < 3:
            continue
        m = 1
        while factorial(m) < k and m < k:
            target = falling_factorial(k, k - m)
            rep.checked += 1
            if not best < target:
                rep.counterexamples.append(
                    _counterexample({"k": k, "m": m}, target, best_at))
            m += 1
    return rep


def _no_rep_above(rep: ClaimReport, params: dict, top: int, sub: int, min_sub: int) -> None:
    value = falling_factorial(top, sub)
    rep.checked += 1
    for other in representations(value, min_sub, max_top=top - 1):
        rep.counterexamples.append(_counterexample(params, value, other))


def check_L2(n_max: int) -> ClaimReport:
    rep = ClaimReport("L2", {"n_max": n_max}, notes=LEMMA_MAP)
    for q in primes_up_to(n_max - 1):
        s = 2
        while exceeds_shifted_sqrt(q, s):
            _no_rep_above(rep, {"q": q, "s": s}, q + 1, s, s + 1)
            s += 1
    return rep


def check_L3(n_max: int) -> ClaimReport:
    rep = ClaimReport("L3", {"n_max": n_max}, notes=LEMMA_MAP)
    for q in primes_up_to(n_max - 2):
        s = 3
        while 4 * s < q:
            _no_rep_above(rep, {"q": q, "s": s}, q + 2, s, s + 1)
            s += 1
    return rep


def check_L4(n_max: int) -> ClaimReport:
    """No representation with subscript >= ql for any S4/S5 element."""
    rep = ClaimReport("L4", {"n_max": n_max}, notes=LEMMA_MAP)
    for family in (s4(n_max), s5(n_max)):
        for e in family.elements:
            params = {"form": e.set_id, **e.params}
            ql = e.sub + 1
            _no_rep_above(rep, params, e.top, e.sub, ql)
    return rep


def check_L5(n_max: int) -> ClaimReport:
    rep = ClaimReport("L5", {"n_max": n_max}, notes=LEMMA_MAP)
    for x in range(2, n_max // 2 + 1):
        qh = prime_power_decompose(x)
        if qh is None or x == 3:
            continue
        _no_rep_above(rep, {"q": qh[0], "h": qh[1]}, 2 * x, 1, 2)
    return rep


# ---------------------------------------------------------------------------
# theorems
# ---------------------------------------------------------------------------

def check_T32(n_max: int, config: WitnessConfig = DEFAULT_CONFIG) -> ClaimReport:
    """Report every value shared by S1 and another family for n <= n_max.

    Membership is monotone in n, so a shared value is reported once, with the
    first n at which both families contain it.
    """
    rep = ClaimReport("T32", {"n_max": n_max}, config.as_dict())
    first_in_s1: dict[int, tuple[int, object]] = {}
    for e in s1(n_max).elements:
        n0 = first_n(e, config)
        if e.value not in first_in_s1 or n0 < first_in_s1[e.value][0]:
            first_in_s1[e.value] = (n0, e)
    others = (s2(n_max, config.s_min), s3(n_max), s4(n_max, config.strict_tops),
              s5(n_max, config.strict_tops), s6(n_max))
    for family in others:
        seen: dict[int, tuple[int, object]] = {}
        for e in family.elements:
            n0 = first_n(e, config)
            if e.value not in seen or n0 < seen[e.value][0]:
                seen[e.value] = (n0, e)
        rep.checked += len(seen)
        for value in sorted(seen.keys() & first_in_s1.keys()):
            n_a, ea = first_in_s1[value]
            n_b, eb = seen[value]
            n0 = max(n_a, n_b)
            if n0 > n_max:
                continue
            rep.counterexamples.append(_counterexample(
                {"n": n0, "set": family.set_id, **eb.params},
                value,
                {"top": ea.top, "sub": ea.sub, "set": "S1"}))
    return rep


def check_T41(n_max: int) -> ClaimReport:
    """|W_h(n)| == i_h - h for h = 2..m_n - 1 and every n <= n_max."""
    rep = ClaimReport("T41", {"n_max": n_max})
    for n in range(3, n_max + 1):
        for h in range(2, m_index(n)):
            rep.checked += 1
            size = len(w_h_direct(n, h))
            predicted = i_h(n, h) - h
            if size != predicted:
                rep.counterexamples.append(_counterexample(
                    {"n": n, "h": h}, size, {"i_h_minus_h": predicted}))
    return rep


def check_T43(n_max: int) -> ClaimReport:
    """D(n) <= upper(n), with the W_h collisions re-derived pair by pair.

    Each k in W_h gives a collision between (1, k) and (h, i) with
    P(i, h) = k.  The (h, i) pairs are pairwise distinct, so deleting them
    removes sum |W_h| edges.  A k lying in several W_h is flagged: there
    (1, k) is shared and must not be the deleted edge.
    """
    rep = ClaimReport("T43", {"n_max": n_max})
    for n in range(3, n_max + 1):
        rep.checked += 1
        owners: dict[int, list[int]] = {}
        for h in range(2, m_index(n)):
            i = h + 1
            while (k := falling_factorial(i, h)) <= n:
                if falling_factorial(k, 1) != falling_factorial(i, h):
                    rep.counterexamples.append(_counterexample(
                        {"n": n, "h": h, "i": i}, k, {"top": k, "sub": 1}))
                owners.setdefault(k, []).append(h)
                i += 1
        for k, hs in sorted(owners.items()):
            if len(hs) > 1:
                rep.flags.append({"n": n, "k": k, "h_values": hs, "flag": "shared (1, k) pair"})
        exact, upper = distinct_value_count(n), upper_bound(n)
        if exact > upper:
            rep.counterexamples.append(_counterexample({"n": n}, exact, {"upper": upper}))
    return rep


def check_T31(n_max: int, config: WitnessConfig = DEFAULT_CONFIG) -> ClaimReport:
    """lower_union(n) <= D(n); equalities are flagged since the bound is stated strictly."""
    rep = ClaimReport("T31", {"n_max": n_max}, config.as_dict())
    for n in range(3, n_max + 1):
        rep.checked += 1
        _, lower = lower_bound(n, config)
        exact = distinct_value_count(n)
        if lower > exact:
            rep.counterexamples.append(_counterexample({"n": n}, lower, {"exact": exact}))
        elif lower == exact:
            rep.flags.append({"n": n, "lower_union": lower, "exact": exact, "flag": "equality"})
    return rep


def check_sandwich(n_max: int, config: WitnessConfig = DEFAULT_CONFIG) -> ClaimReport:
    rep = ClaimReport("SANDWICH", {"n_max": n_max}, config.as_dict())
    for n in range(3, n_max + 1):
        rep.checked += 1
        _, lower = lower_bound(n, config)
        exact, upper = distinct_value_count(n), upper_bound(n)
        if not lower <= exact <= upper:
            rep.counterexamples.append(_counterexample(
                {"n": n}, exact, {"lower_union": lower, "upper": upper}))
        elif lower == exact:
            rep.flags.append({"n": n, "lower_union": lower, "exact": exact, "flag": "equality"})
    return rep


def run_claims(ids: list[str], n_max: int, config: WitnessConfig = DEFAULT_CONFIG) -> list[ClaimReport]:
    table = {
        "L1": lambda: check_L1(n_max),
        "L2": lambda: check_L2(n_max),
        "L3": lambda: check_L3(n_max),
        "L4": lambda: check_L4(n_max),
        "L5": lambda: check_L5(n_max),
        "T31": lambda: check_T31(n_max, config),
        "T32": lambda: check_T32(n_max, config),
        "T41": lambda: check_T41(n_max),
        "T43": lambda: check_T43(n_max),
        "SANDWICH": lambda: check_sandwich(n_max, config),
    }
    unknown = [c for c in ids if c not in table]
    if unknown:
        raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    return [table[c]() for c in ids]
