"""Exponents in Z[1/p]: canonical fractions a/p^b and two enumerations.

The exponent monoid of the rings handled here is the set of rationals whose
denominator is a power of a fixed prime p.  Exponents are kept in the
canonical shape num/p**pow with pow == 0 or p not dividing num, so equality
and hashing agree with equality of rationals.  The prime itself is ambient:
it is supplied to the operations rather than stored on every exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PExp:
    """The exponent num / p**pow in canonical form."""

    num: int
    pow: int

    def as_fraction(self, p: int) -> Fraction:
        return Fraction(self.num, p ** self.pow)

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def __repr__(self) -> str:
        return f"PExp({self.num}, {self.pow})"


ZERO = PExp(0, 0)
ONE = PExp(1, 0)


def canon(num: int, pow: int, p: int) -> PExp:
    """Bring num / p**pow to canonical form."""
    if pow < 0:
        raise ValueError("denominator exponent must be non-negative")
    if num == 0:
        return ZERO
    while pow > 0 and num % p == 0:
        num //= p
        pow -= 1
    return PExp(num, pow)


def exp_add(x: PExp, y: PExp, p: int) -> PExp:
    b = max(x.pow, y.pow)
    return canon(x.num * p ** (b - x.pow) + y.num * p ** (b - y.pow), b, p)


def exp_neg(x: PExp) -> PExp:
    return PExp(-x.num, x.pow)


def exp_sub(x: PExp, y: PExp, p: int) -> PExp:
    return exp_add(x, exp_neg(y), p)


def exp_cmp(x: PExp, y: PExp, p: int) -> int:
    """-1, 0 or +1 as x is below, equal to or above y in the rational order."""
    lhs = x.num * p ** y.pow
    rhs = y.num * p ** x.pow
    return (lhs > rhs) - (lhs < rhs)


def antidiagonal_stream(p: int) -> Iterator[PExp]:
    """Yield a/p**b walking antidiagonals of the (a, b) grid.

    The walk visits a + b = k for k = 0, 1, 2, ... and runs each antidiagonal
    from (0, k) to (k, 0).  Pairs whose value was already produced are
    skipped, so the stream enumerates Z[1/p] cap [0, oo) without repetition.
    """
    seen: set[PExp] = set()
    k = 0
    while True:
        for a in range(k + 1):
            e = canon(a, k - a, p)
            if e not in seen:
                seen.add(e)
                yield e
        k += 1


def enumerate_antidiagonal(p: int, count: int) -> list[PExp]:
    if count < 1:
        raise ValueError("count must be positive")
    stream = antidiagonal_stream(p)
    return [next(stream) for _ in range(count)]


def calkin_wilf_stream() -> Iterator[Fraction]:
    """The Calkin-Wilf walk of the positive rationals, starting at 1."""
    q = Fraction(1)
    while True:
        yield q
        q = 1 / (2 * (q.numerator // q.denominator) - q + 1)


def _power_of(n: int, p: int) -> int | None:
    """Return b when n == p**b, else None."""
    b = 0
    while n > 1 and n % p == 0:
        n //= p
        b += 1
    return b if n == 1 else None


def enumerate_calkin_wilf(count: int, p_filter: int | None = None):
    """First `count` Calkin-Wilf terms.

    Without a filter the raw sequence of positive rationals is returned.
    With p_filter the stream is restricted to terms whose denominator is a
    power of p_filter and those are returned as PExp values; `count` is the
    number of terms kept, not the number inspected.
    """
    if count < 1:
        raise ValueError("count must be positive")
    out: list = []
    for q in calkin_wilf_stream():
        if p_filter is None:
            out.append(q)
        else:
            b = _power_of(q.denominator, p_filter)
            if b is not None:
                out.append(canon(q.numerator, b, p_filter))
        if len(out) == count:
            return out
