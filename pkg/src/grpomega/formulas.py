"""Closed-form evaluation of the element-order statistics.

Each function evaluates one side of a rule exactly, so the verifier can hold
it against brute-force enumeration.  All divisions are checked: a non-exact
division raises instead of rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, Optional, Tuple

from .factored import FactoredNat, combine, factor, is_prime
from .groups import FiniteGroup, Perm, construct_cyclic, construct_psl2, direct_product
from .stats import omega_rho, omega_rho_cyclic, rho, rho_cyclic, rho_of_spectrum, spectrum_of


class InexactDivisionError(ArithmeticError):
    """A closed form produced a non-integer where an integer is required."""


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """(p, a) with n = p^a when n is a prime power > 1, else None."""
    if n < 2:
        return None
    for p, a in factor(n).items():
        return (p, a) if p**a == n else None
    return None


def cf_omega_cyclic_prime_power(p: int, alpha: int) -> int:
    """Omega_rho of the cyclic group of order p^alpha."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return alpha * p**alpha - _exact_div(p**alpha - 1, p - 1)


def cf_omega_cyclic_two_prime_powers(p: int, alpha: int, beta: int) -> int:
    """Omega_rho of C_{p^alpha} x C_{p^beta}.

    The displayed closed form is only valid with the smaller exponent first
    (verbatim evaluation diverges from enumeration once alpha >= beta + 2).
    The product itself is symmetric in its factors, so the exponents are
    normalized before evaluating.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if alpha < 1 or beta < 1:
        raise ValueError(f"exponents must be >= 1, got ({alpha}, {beta})")
    alpha, beta = min(alpha, beta), max(alpha, beta)
    numerator = (
        beta * p ** (alpha + beta + 2)
        - p ** (alpha + beta + 1)
        - (beta + 1) * p ** (alpha + beta)
        + p ** (2 * alpha + 1)
        + 1
    )
    return _exact_div(numerator, p * p - 1)


def _check_psl2_arg(q: int) -> None:
    if q < 5 or q % 2 == 0 or not is_prime(q):
        raise ValueError(f"psl2 closed forms need an odd prime q >= 5, got {q}")


def cf_rho_psl2(q: int) -> FactoredNat:
    """rho(L2(q)) assembled from the partition into cyclic pieces.

    q(q+1)/2 conjugate cyclic subgroups of order (q-1)/2, q(q-1)/2 of order
    (q+1)/2, and (q+1)(q-1) elements of order q.  Prime q only; prime powers
    would need field arithmetic the engine does not carry.
    """
    _check_psl2_arg(q)
    return combine(
        [
            (rho_cyclic((q - 1) // 2), q * (q + 1) // 2),
            (rho_cyclic((q + 1) // 2), q * (q - 1) // 2),
            (factor(q), (q + 1) * (q - 1)),
        ]
    )


def cf_omega_psl2(q: int) -> int:
    """Omega_rho(L2(q)) by the closed form."""
    _check_psl2_arg(q)
    return (
        q * (q + 1) // 2 * omega_rho_cyclic((q - 1) // 2)
        + q * (q - 1) // 2 * omega_rho_cyclic((q + 1) // 2)
        + (q + 1) * (q - 1)
    )


def cf_product_rule_rhs(A: FiniteGroup, B: FiniteGroup) -> int:
    """Upper bound Omega_rho(A)*|B| + Omega_rho(B)*|A| for Omega_rho(A x B)."""
    return omega_rho(A) * B.order + omega_rho(B) * A.order


def is_cyclic_set(H: FrozenSet[Perm]) -> bool:
    n = len(H)
    return any(h.order() == n for h in H)


def require_cyclic_normal_sylow(G: FiniteGroup, P: FrozenSet[Perm]) -> int:
    """Validate that P is a cyclic normal Sylow subgroup of G; return its prime."""
    P = G.require_subgroup(P)
    pp = prime_power(len(P))
    if pp is None:
        raise ValueError(f"subgroup of order {len(P)} is not a nontrivial p-group")
    p, _ = pp
    residue = G.order
    while residue % p == 0:
        residue //= p
    if len(P) * residue != G.order:
        raise ValueError(f"subgroup of order {len(P)} is not a Sylow {p}-subgroup")
    if not is_cyclic_set(P):
        raise ValueError("Sylow subgroup is not cyclic")
    if not G.is_normal(P):
        raise ValueError("Sylow subgroup is not normal")
    return p


def cf_quotient_rule_rhs(G: FiniteGroup, P: FrozenSet[Perm]) -> Fraction:
    """Lower bound (Omega_rho(G)*|P| - Omega_rho(P)*|G|) / |P|^2 for Omega_rho(G/P).

    Exact rational: the bound is not always an integer.
    """
    require_cyclic_normal_sylow(G, P)
    omega_p = rho_of_spectrum(spectrum_of(P)).omega()
    return Fraction(omega_rho(G) * len(P) - omega_p * G.order, len(P) ** 2)


def cf_semidirect_omega(P: FiniteGroup, F: FiniteGroup, c: int) -> int:
    """Omega_rho of a semidirect product P x| F with |C_F(P)| = c.

    P must be a cyclic p-group of order coprime to |F|.
    """
    pp = prime_power(P.order)
    if P.order != 1 and pp is None:
        raise ValueError(f"|P| = {P.order} is not a prime power")
    if math.gcd(P.order, F.order) != 1:
        raise ValueError(f"orders {P.order} and {F.order} are not coprime")
    if not 0 <= c <= F.order:
        raise ValueError(f"centralizer size {c} out of range for |F| = {F.order}")
    return c * omega_rho(P) + P.order * omega_rho(F)


@dataclass(frozen=True)
class FormulaResult:
    """One evaluated closed form: label, parameters, exact value."""

    name: str
    inputs: Dict[str, int]
    value: Any  # int or FactoredNat

    def value_str(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Formula:
    params: Tuple[str, ...]
    evaluate: Callable[..., Any]
    crosscheck: Optional[Callable[..., Any]] = None  # brute-force twin, when constructible


def _brute_cyclic_pp(p: int, alpha: int) -> int:
    return omega_rho(construct_cyclic(p**alpha))


def _brute_two_pp(p: int, alpha: int, beta: int) -> int:
    return omega_rho(direct_product(construct_cyclic(p**alpha), construct_cyclic(p**beta)))


def _brute_psl2_omega(q: int) -> int:
    return omega_rho(construct_psl2(q))


def _brute_psl2_rho(q: int) -> FactoredNat:
    return rho(construct_psl2(q))


FORMULAS: Dict[str, Formula] = {
    "cyclic-pp": Formula(("p", "alpha"), cf_omega_cyclic_prime_power, _brute_cyclic_pp),
    "two-pp": Formula(("p", "alpha", "beta"), cf_omega_cyclic_two_prime_powers, _brute_two_pp),
    "psl2-omega": Formula(("q",), cf_omega_psl2, _brute_psl2_omega),
    "psl2-rho": Formula(("q",), cf_rho_psl2, _brute_psl2_rho),
}


def run_formula(name: str, **params: int) -> FormulaResult:
    """Evaluate a registered formula by name."""
    if name not in FORMULAS:
        raise KeyError(f"unknown formula {name!r}; known: {', '.join(sorted(FORMULAS))}")
    formula = FORMULAS[name]
    missing = [k for k in formula.params if k not in params]
    extra = [k for k in params if k not in formula.params]
    if missing or extra:
        raise ValueError(
            f"formula {name} takes parameters {formula.params}; missing {missing}, extra {extra}"
        )
    value = formula.evaluate(**{k: params[k] for k in formula.params})
    return FormulaResult(name, dict(params), value)
