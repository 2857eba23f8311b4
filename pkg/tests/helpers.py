"""Independent oracles for the tests.

These deliberately avoid the library's own code paths: element orders by
repeated composition, phi and Omega by trial division, spectra from abstract
group models.  Expected values frozen in the tests were computed with these.
"""

from collections import Counter
from math import gcd


def naive_order(perm):
    """Order by repeated composition until identity."""
    q = perm
    n = 1
    while not q.is_identity():
        q = q * perm
        n += 1
    return n


def naive_spectrum(group):
    """Order spectrum via the repeated-composition oracle."""
    return dict(Counter(naive_order(g) for g in group.elements))


def naive_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def naive_big_omega(n):
    count = 0
    d = 2
    while n > 1:
        while n % d == 0:
            count += 1
            n //= d
        d += 1
    return count


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_omega_rho_cyclic(n):
    """Omega_rho of a cyclic group: sum of phi(d) * Omega(d) over divisors."""
    return sum(naive_phi(d) * naive_big_omega(d) for d in naive_divisors(n))


def expand(factored):
    """Multiply a FactoredNat back out to a plain integer."""
    value = 1
    for p, e in factored.items():
        value *= p**e
    return value
