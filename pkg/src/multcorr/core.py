"""Exact pointwise arithmetic for sign functions attached to prime sets.

A completely multiplicative function taking values in {-1, +1} is determined
by the set of primes where it equals -1.  This module holds the two set types
(`PrimeSet`, `ShiftSet`), the derived pairwise-difference set, and the exact
pointwise evaluators: the restricted prime-factor count `omega`, the sign
`liouville`, and the shifted product `shifted_sign`.

Everything here is pure and immutable; values are computed by repeated
division by the configured primes only, never by full factorization.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

# Pointwise evaluators accept inputs up to 2**63 - 1 (minus the largest shift
# for shifted products); larger arguments are rejected.
MAX_INPUT = 2**63 - 1


class BudgetError(RuntimeError):
    """A configured resource cap was exceeded (prime budget, degree cap)."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality check, exact for 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int) -> Iterator[int]:
    """Yield primes strictly greater than `start` in increasing order."""
    n = max(start, 1) + 1
    if n <= 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def _check_distinct_sorted(values: tuple[int, ...], what: str) -> None:
    for a, b in zip(values, values[1:]):
        if a == b:
            raise ValueError(f"duplicate {what} {a}")


class PrimeSet:
    """Finite sorted set of verified primes (the -1 support of the sign function).

    May be empty, which encodes the constant function +1.  Construction
    rejects duplicates and anything that fails the primality check.
    """

    __slots__ = ("primes",)

    def __init__(self, primes: Iterable[int] = ()):
        ps = tuple(sorted(int(p) for p in primes))
        _check_distinct_sorted(ps, "prime")
        for p in ps:
            if p > MAX_INPUT:
                raise ValueError(f"prime {p} exceeds the 64-bit input width")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.primes = ps

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeSet) and self.primes == other.primes

    def __hash__(self) -> int:
        return hash(("PrimeSet", self.primes))

    def __repr__(self) -> str:
        return f"PrimeSet({list(self.primes)!r})"

    def symmetric_difference(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(set(self.primes) ^ set(other.primes))


class ShiftSet:
    """Finite sorted set of non-negative integer shifts.

    May be empty (the empty shifted product is identically +1).  Duplicates
    are rejected rather than collapsed: a repeated shift would silently flip
    the parity semantics of the product.
    """

    __slots__ = ("shifts",)

    def __init__(self, shifts: Iterable[int] = ()):
        hs = tuple(sorted(int(h) for h in shifts))
        _check_distinct_sorted(hs, "shift")
        if hs and hs[0] < 0:
            raise ValueError(f"negative shift {hs[0]}")
        self.shifts = hs

    def __iter__(self) -> Iterator[int]:
        return iter(self.shifts)

    def __len__(self) -> int:
        return len(self.shifts)

    def __contains__(self, h: int) -> bool:
        return h in self.shifts

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ShiftSet) and self.shifts == other.shifts

    def __hash__(self) -> int:
        return hash(("ShiftSet", self.shifts))

    def __repr__(self) -> str:
        return f"ShiftSet({list(self.shifts)!r})"

    @property
    def max_shift(self) -> int:
        return self.shifts[-1] if self.shifts else 0

    def translate(self, a: int) -> "ShiftSet":
        return ShiftSet(h + a for h in self.shifts)

    def symmetric_difference(self, other: "ShiftSet") -> "ShiftSet":
        return ShiftSet(set(self.shifts) ^ set(other.shifts))

    def differences(self) -> "DiffSet":
        return DiffSet(self)


class DiffSet:
    """Positive representatives of the pairwise differences of a shift set.

    Divisibility by a prime is sign-invariant, so each difference is stored
    once as its absolute value.  Empty whenever the shift set has at most one
    element; every element is at most the largest shift.
    """

    __slots__ = ("diffs",)

    def __init__(self, shifts: ShiftSet):
        hs = shifts.shifts
        self.diffs = tuple(sorted({b - a for i, a in enumerate(hs) for b in hs[i + 1 :]}))

    def __iter__(self) -> Iterator[int]:
        return iter(self.diffs)

    def __len__(self) -> int:
        return len(self.diffs)

    def __contains__(self, d: int) -> bool:
        return d in self.diffs

    def __repr__(self) -> str:
        return f"DiffSet({list(self.diffs)!r})"

    def divisible_by(self, p: int) -> bool:
        """True when p divides at least one pairwise difference."""
        return any(d % p == 0 for d in self.diffs)


def _check_argument(n: int, limit: int = MAX_INPUT) -> None:
    if n < 1:
        raise ValueError(f"argument must be a positive integer, got {n}")
    if n > limit:
        raise ValueError(f"argument {n} exceeds the supported input width")


def omega(pset: PrimeSet, n: int) -> int:
    """Number of prime factors of n, with multiplicity, restricted to pset."""
    _check_argument(n)
    count = 0
    for p in pset.primes:
        if p > n:
            break
        while n % p == 0:
            n //= p
            count += 1
    return count


def liouville(pset: PrimeSet, n: int) -> int:
    """The +-1 sign (-1)**omega(pset, n); completely multiplicative in n."""
    return -1 if omega(pset, n) & 1 else 1


def shifted_sign(pset: PrimeSet, shifts: ShiftSet, n: int) -> int:
    """Product of liouville(pset, n + h) over all shifts h; +1 when empty."""
    _check_argument(n, MAX_INPUT - shifts.max_shift)
    sign = 1
    for h in shifts:
        sign *= liouville(pset, n + h)
    return sign


def _prime_factors(m: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def exceptional_primes(shifts: ShiftSet) -> PrimeSet:
    """Primes dividing at least one pairwise difference of the shift set."""
    found: set[int] = set()
    for d in shifts.differences():
        found |= _prime_factors(d)
    return PrimeSet(found)
