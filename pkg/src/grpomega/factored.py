"""Exact arithmetic on positive integers kept as prime -> exponent mappings.

Values like the product of all element orders of a group run to hundreds of
digits; holding them in factored form makes products, powers, divisibility
and the prime-count Omega cheap and overflow-free.  A value is only ever
expanded to a plain integer by the explicit decimal renderer, which exists
for display.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Tuple

FACTOR_INPUT_LIMIT = 2**32  # factor() is trial division; keep inputs desk-sized


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (inputs are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class FactoredNat:
    """A positive integer stored as its prime factorization.

    The mapping sends each prime to an exponent >= 1; the integer 1 is the
    empty mapping.  Instances are immutable and hashable.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = dict(factors)
        for p, e in items.items():
            if not is_prime(p):
                raise ValueError(f"key {p} is not prime")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
        self._factors = tuple(sorted(items.items()))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def items(self) -> Tuple[Tuple[int, int], ...]:
        """(prime, exponent) pairs with primes ascending."""
        return self._factors

    def omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self._factors)

    def exponent_of(self, p: int) -> int:
        """Exponent of the prime p, 0 when p does not occur."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        for q, e in self._factors:
            if q == p:
                return e
        return 0

    def divides(self, other: "FactoredNat") -> bool:
        """True iff self divides other (exponent-wise comparison)."""
        theirs = dict(other._factors)
        return all(e <= theirs.get(p, 0) for p, e in self._factors)

    def __mul__(self, other: "FactoredNat") -> "FactoredNat":
        return combine([(self, 1), (other, 1)])

    def __pow__(self, k: int) -> "FactoredNat":
        if k < 0:
            raise ValueError("negative powers leave the positive integers")
        return combine([(self, k)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredNat):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(self._factors)

    def __bool__(self) -> bool:
        return True

    def __str__(self) -> str:
        # Canonical serialized form: primes ascending, exponent 1 explicit.
        if not self._factors:
            return "1"
        return " * ".join(f"{p}^{e}" for p, e in self._factors)

    def __repr__(self) -> str:
        return f"FactoredNat({dict(self._factors)!r})"

    def to_decimal(self) -> str:
        """Decimal rendering of the denoted integer; display only."""
        value = 1
        for p, e in self._factors:
            value *= p**e
        return str(value)


ONE = FactoredNat()


def factor(n: int) -> FactoredNat:
    """Factor a positive integer n <= 2^32 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}; need n >= 1")
    if n > FACTOR_INPUT_LIMIT:
        raise ValueError(f"{n} exceeds the factor() input bound {FACTOR_INPUT_LIMIT}")
    factors: dict[int, int] = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    d = 3
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return FactoredNat(factors)


def combine(terms: Iterable[Tuple[FactoredNat, int]]) -> FactoredNat:
    """Product of t_i^m_i for (t_i, m_i) in terms; multiplier 0 contributes nothing."""
    acc: dict[int, int] = {}
    for t, m in terms:
        if m < 0:
            raise ValueError("multipliers must be nonnegative")
        if m == 0:
            continue
        for p, e in t.items():
            acc[p] = acc.get(p, 0) + m * e
    return FactoredNat(acc)


def omega(x: FactoredNat) -> int:
    return x.omega()


def exponent_of(x: FactoredNat, p: int) -> int:
    return x.exponent_of(p)


def divides(a: FactoredNat, b: FactoredNat) -> bool:
    return a.divides(b)
