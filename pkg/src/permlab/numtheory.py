"""Exact integer primitives: falling factorials, primes, valuations.

Everything here works on Python ints, so values such as P(1000, 500) are
exact.  The prime table and the factorial table are module-level caches that
grow on demand; both are guarded by a lock so worker threads may share them.
"""
from __future__ import annotations

import math
import os
import threading
from bisect import bisect_right
from dataclasses import dataclass
from numbers import Real
from pathlib import Path

__all__ = [
    "PrimeTable",
    "exceeds_shifted_sqrt",
    "factorial",
    "factorial_valuation",
    "falling_factorial",
    "integer_log",
    "integer_root",
    "is_prime",
    "m_index",
    "pi_shifted_sqrt",
    "prime_pi",
    "prime_power_decompose",
    "primes_up_to",
    "valuation",
]

CACHE_ENV = "PERMLAB_CACHE_DIR"

_lock = threading.Lock()
_factorials: list[int] = [1]
_table: PrimeTable | None = None


def falling_factorial(k: int, r: int) -> int:
    """Return P(k, r) = k (k-1) ... (k-r+1) = k!/(k-r)!.

    >>> falling_factorial(7, 3)
    210
    """
    if k < 1:
        raise ValueError(f"top must be positive, got k={k}")
    if not 0 <= r <= k:
        raise ValueError(f"subscript must lie in 0..{k}, got r={r}")
    return math.perm(k, r)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    with _lock:
        while len(_factorials) <= n:
            _factorials.append(_factorials[-1] * len(_factorials))
        return _factorials[n]


def m_index(k: int) -> int:
    """The unique m with m! < k <= (m+1)!."""
    if k < 2:
        raise ValueError(f"m_index needs k >= 2, got {k}")
    m = 1
    while factorial(m + 1) < k:
        m += 1
    return m


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Trial division.  Used for argument checks and as a sieve cross-check."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: tuple[int, ...]

    @classmethod
    def build(cls, limit: int) -> PrimeTable:
        if limit < 1:
            raise ValueError("limit must be positive")
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = 0
        sieve[1] = 0
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
        return cls(limit, tuple(i for i, flag in enumerate(sieve) if flag))

    def count_le(self, x: int) -> int:
        if x > self.limit:
            raise ValueError(f"{x} exceeds table limit {self.limit}")
        return bisect_right(self.primes, x)

    def up_to(self, x: int) -> tuple[int, ...]:
        return self.primes[: self.count_le(x)]


def _cache_file() -> Path | None:
    root = os.environ.get(CACHE_ENV)
    return Path(root) / "primes.txt" if root else None


def _load_cached(limit: int) -> PrimeTable | None:
    path = _cache_file()
    if path is None or not path.is_file():
        return None
    try:
        head, *rest = path.read_text().split()
        stored = int(head)
        if stored < limit:
            return None
        return PrimeTable(stored, tuple(int(p) for p in rest))
    except (ValueError, OSError):
        return None


def _store_cached(table: PrimeTable) -> None:
    path = _cache_file()
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(" ".join(map(str, (table.limit, *table.primes))))
    except OSError:
        pass


def prime_table(limit: int) -> PrimeTable:
    """A shared table covering at least ``limit``; rebuilt (doubling) on demand."""
    global _table
    with _lock:
        if _table is None or _table.limit < limit:
            size = max(limit, 2 * _table.limit if _table else 1024)
            table = _load_cached(size)
            if table is None:
                table = PrimeTable.build(size)
                _store_cached(table)
            _table = table
        return _table


def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    return prime_table(limit).up_to(limit)


def prime_pi(x: Real) -> int:
    """Number of primes p <= x.  ``x`` may be any real (int, float, Fraction)."""
    if x < 0:
        raise ValueError("prime_pi needs x >= 0")
    bound = math.floor(x)
    if bound < 2:
        return 0
    return prime_table(bound).count_le(bound)


def pi_shifted_sqrt(s: int) -> int:
    """pi(s + sqrt(s+1)) without floating point.

    floor(s + sqrt(s+1)) == s + isqrt(s+1), and pi only depends on the floor.
    """
    return prime_pi(s + math.isqrt(s + 1))


def exceeds_shifted_sqrt(q: int, s: int) -> bool:
    """Exact test of q > s + sqrt(s+1)."""
    d = q - s
    return d > 0 and d * d > s + 1


# ---------------------------------------------------------------------------
# valuations, roots, logs
# ---------------------------------------------------------------------------

def valuation(q: int, x: int) -> int:
    """Largest e with q**e dividing x."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if x < 1:
        raise ValueError("valuation needs x >= 1")
    e = 0
    while x % q == 0:
        x //= q
        e += 1
    return e


def factorial_valuation(q: int, l: int) -> int:
    """v_q(l!) via Legendre's sum of floor(l / q**t)."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if l < 0:
        raise ValueError("l must be non-negative")
    total = 0
    power = q
    while power <= l:
        total += l // power
        power *= q
    return total


def integer_root(x: int, r: int) -> int:
    """floor(x ** (1/r)) for non-negative int x."""
    if x < 0 or r < 1:
        raise ValueError("integer_root needs x >= 0 and r >= 1")
    if x < 2 or r == 1:
        return x
    guess = 1 << -(-x.bit_length() // r)
    while True:
        nxt = ((r - 1) * guess + x // guess ** (r - 1)) // r
        if nxt >= guess:
            return guess
        guess = nxt


def integer_log(base: int, x: int) -> int:
    """floor(log_base(x)) for x >= 1, computed without floats."""
    if base < 2 or x < 1:
        raise ValueError("integer_log needs base >= 2 and x >= 1")
    e, power = 0, base
    while power <= x:
        e += 1
        power *= base
    return e


def prime_power_decompose(x: int) -> tuple[int, int] | None:
    """(q, h) with q prime and q**h == x, or None when x is not a prime power."""
    if x < 2:
        raise ValueError("prime_power_decompose needs x >= 2")
    q = 2
    while q * q <= x and x % q:
        q += 1
    if x % q:
        return (x, 1)  # no factor up to sqrt(x): x is prime
    h = 0
    while x % q == 0:
        x //= q
        h += 1
    return (q, h) if x == 1 else None
