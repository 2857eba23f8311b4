"""Element-order statistics: the order spectrum, rho, Omega_rho.

The order spectrum (order -> count of elements with that order) is the
sufficient statistic for everything here: rho(G), the product of all element
orders, is the factored product over the spectrum, and Omega_rho(G) counts
its prime factors with multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .factored import FactoredNat, combine, factor
from .groups import FiniteGroup, Perm


@dataclass(frozen=True)
class OrderSpectrum:
    """Mapping element order -> number of elements of that order."""

    counts: Tuple[Tuple[int, int], ...]  # (order, count), orders ascending

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> "OrderSpectrum":
        return cls(tuple(sorted(counts.items())))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def count_of(self, order: int) -> int:
        return dict(self.counts).get(order, 0)

    def orders(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.counts)

    def __str__(self) -> str:
        return ", ".join(f"{d}:{c}" for d, c in self.counts)


def totient(n: int) -> int:
    """Euler's phi, computed from the prime factorization."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    result = 1
    for p, e in factor(n).items():
        result *= p ** (e - 1) * (p - 1)
    return result


def spectrum_of(elements: Iterable[Perm]) -> OrderSpectrum:
    """Order spectrum of any set of permutations (e.g. a subgroup)."""
    return OrderSpectrum.from_counts(Counter(g.order() for g in elements))


def order_spectrum(G: FiniteGroup) -> OrderSpectrum:
    return spectrum_of(G.elements)


def validate_spectrum(spectrum: OrderSpectrum, group_order: int) -> None:
    """Check the spectrum invariants against the group order; raise on violation."""
    if spectrum.total() != group_order:
        raise ValueError(f"spectrum total {spectrum.total()} != group order {group_order}")
    if spectrum.count_of(1) != 1:
        raise ValueError("spectrum must count the identity exactly once")
    for d, c in spectrum.counts:
        if group_order % d != 0:
            raise ValueError(f"element order {d} does not divide {group_order}")
        if c % totient(d) != 0:
            raise ValueError(f"count of order-{d} elements ({c}) not divisible by phi({d})")


def rho_of_spectrum(spectrum: OrderSpectrum) -> FactoredNat:
    return combine([(factor(d), c) for d, c in spectrum.counts])


def rho(G: FiniteGroup) -> FactoredNat:
    """Product of the orders of all elements of G, as a factored integer."""
    return rho_of_spectrum(order_spectrum(G))


def omega_rho(G: FiniteGroup) -> int:
    """Prime factor count (with multiplicity) of rho(G)."""
    return rho(G).omega()


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factor(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def rho_cyclic(n: int) -> FactoredNat:
    """rho of the cyclic group of order n, without constructing it.

    A cyclic group has exactly phi(d) elements of order d for each divisor d,
    so rho(C_n) is the product of d^phi(d) over divisors.
    """
    if n < 1:
        raise ValueError(f"rho_cyclic needs n >= 1, got {n}")
    return combine([(factor(d), totient(d)) for d in divisors(n)])


def omega_rho_cyclic(n: int) -> int:
    return rho_cyclic(n).omega()
