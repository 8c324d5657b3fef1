"""Lower and upper bounds on the edge count of a maximal permutation graph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .labels import CapError, distinct_value_count
from .numtheory import falling_factorial, m_index
from .witness import DEFAULT_CONFIG, DeltaReport, WitnessConfig, closed_form_cardinalities, union_and_delta

__all__ = [
    "CSV_HEADER",
    "ORACLE_CAP",
    "BoundReport",
    "i_h",
    "lower_bound",
    "sandwich_report",
    "upper_bound",
    "upper_bound_extended",
    "w_h_direct",
]

ORACLE_CAP = 300

CSV_HEADER = ("n", "lower_formula", "lower_union", "delta", "upper", "exact",
              "s1", "s2", "s3", "s45", "s6", "config_id")


def lower_bound(n: int, config: WitnessConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """Return ``(lower_formula, lower_union)``.

    ``lower_formula`` plugs the printed closed forms into the bound together
    with the directly computed |S4 u S5| and delta.  ``lower_union`` is the
    size of the union of the six witness sets, which is what the bound counts.
    """
    if n < 3:
        raise ValueError("lower_bound needs n >= 3")
    rep = union_and_delta(n, config)
    return _printed_lower(n, rep), rep.union_size


def _printed_lower(n: int, rep: DeltaReport) -> int:
    forms = closed_form_cardinalities(n)
    return forms.s1 + forms.s2 + rep.cards["S45"] + forms.s3 + forms.s6 - rep.delta


def i_h(n: int, h: int) -> int:
    """Largest i > h with P(i, h) <= n, or h itself when there is none."""
    if n < 2 or h < 2:
        raise ValueError("i_h needs n >= 2 and h >= 2")
    if falling_factorial(h + 1, h) > n:
        return h
    # P(i, h) is increasing in i: gallop up, then bisect
    lo, hi = h + 1, h + 2
    while falling_factorial(hi, h) <= n:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if falling_factorial(mid, h) <= n:
            lo = mid
        else:
            hi = mid
    return lo


def w_h_direct(n: int, h: int) -> set[int]:
    """{k in 3..n : k = P(i, h) for some i in 3..n with i > h}."""
    found = set()
    for i in range(max(3, h + 1), n + 1):
        k = falling_factorial(i, h)
        if k > n:
            break  # increasing in i
        if k >= 3:
            found.add(k)
    return found


def _w_sum(n: int, hs: range) -> int:
    return sum(i_h(n, h) - h for h in hs)


def upper_bound(n: int) -> int:
    """n(n-1)/2 minus the sum of (i_h - h) over h = 2..m_n - 1."""
    if n < 2:
        raise ValueError("upper_bound needs n >= 2")
    return n * (n - 1) // 2 - _w_sum(n, range(2, m_index(n)))


def upper_bound_extended(n: int) -> int:
    """Same subtraction over every h >= 2 whose W_h is nonempty.

    Not the published bound; reported next to it for comparison.
    """
    h = 2
    while falling_factorial(h + 1, h) <= n:
        h += 1
    return n * (n - 1) // 2 - _w_sum(n, range(2, h))


@dataclass(frozen=True)
class BoundReport:
    n: int
    lower_formula: int
    lower_union: int
    delta: int
    upper: int
    upper_extended: int
    exact: int | None
    set_cards: dict[str, int]
    config: WitnessConfig = field(default=DEFAULT_CONFIG)

    @property
    def lower_equals_exact(self) -> bool:
        """The published lower bound is strict; equality is worth flagging."""
        return self.exact is not None and self.lower_union == self.exact

    @property
    def sandwich_holds(self) -> bool | None:
        if self.exact is None:
            return None
        return self.lower_union <= self.exact <= self.upper

    def csv_row(self) -> list:
        c = self.set_cards
        return [self.n, self.lower_formula, self.lower_union, self.delta, self.upper,
                "" if self.exact is None else self.exact,
                c["S1"], c["S2"], c["S3"], c["S45"], c["S6"], self.config.config_id]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lower_formula": self.lower_formula,
            "lower_union": self.lower_union,
            "delta": self.delta,
            "upper": self.upper,
            "upper_extended": self.upper_extended,
            "exact": self.exact,
            "set_cards": dict(self.set_cards),
            "lower_equals_exact": self.lower_equals_exact,
            "config_id": self.config.config_id,
            "config": self.config.as_dict(),
        }


def sandwich_report(n: int, config: WitnessConfig = DEFAULT_CONFIG,
                    with_exact: bool = True, oracle_cap: int = ORACLE_CAP) -> BoundReport:
    if n < 3:
        raise ValueError("sandwich_report needs n >= 3")
    exact = None
    if with_exact:
        if n > oracle_cap:
            raise CapError(f"n={n} exceeds the oracle cap of {oracle_cap}")
        exact = distinct_value_count(n)

    rep = union_and_delta(n, config)
    return BoundReport(
        n=n,
        lower_formula=_printed_lower(n, rep),
        lower_union=rep.union_size,
        delta=rep.delta,
        upper=upper_bound(n),
        upper_extended=upper_bound_extended(n),
        exact=exact,
        set_cards=rep.cards,
        config=config,
    )
