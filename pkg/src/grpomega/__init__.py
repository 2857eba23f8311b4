"""grpomega: exact element-order statistics for finite groups.

Compute the product of element orders as a factored integer, its prime
factor count, and run executable checks of the rules relating them, over
permutation-group constructions of the classical small groups.
"""

from .factored import FactoredNat, combine, divides, exponent_of, factor, is_prime, omega
from .formulas import (
    cf_omega_cyclic_prime_power,
    cf_omega_cyclic_two_prime_powers,
    cf_omega_psl2,
    cf_product_rule_rhs,
    cf_quotient_rule_rhs,
    cf_rho_psl2,
    cf_semidirect_omega,
)
from .groups import (
    FiniteGroup,
    GroupConstructionError,
    GroupSizeError,
    Perm,
    closure,
    construct_alternating,
    construct_cyclic,
    construct_dihedral,
    construct_psl2,
    construct_symmetric,
    direct_product,
    find_sylow,
    perm_order,
    quotient_group,
    semidirect_product,
)
from .specs import Catalog, CatalogError, ParseError, build_group, load_catalog, parse_spec, render
from .stats import (
    OrderSpectrum,
    omega_rho,
    order_spectrum,
    rho,
    rho_cyclic,
    spectrum_of,
    totient,
)
from .verify import VerificationReport, run_catalog_suite

__version__ = "0.1.0"

__all__ = [
    "FactoredNat",
    "FiniteGroup",
    "GroupConstructionError",
    "GroupSizeError",
    "OrderSpectrum",
    "Perm",
    "Catalog",
    "CatalogError",
    "ParseError",
    "VerificationReport",
    "build_group",
    "cf_omega_cyclic_prime_power",
    "cf_omega_cyclic_two_prime_powers",
    "cf_omega_psl2",
    "cf_product_rule_rhs",
    "cf_quotient_rule_rhs",
    "cf_rho_psl2",
    "cf_semidirect_omega",
    "closure",
    "combine",
    "construct_alternating",
    "construct_cyclic",
    "construct_dihedral",
    "construct_psl2",
    "construct_symmetric",
    "direct_product",
    "divides",
    "exponent_of",
    "factor",
    "find_sylow",
    "is_prime",
    "load_catalog",
    "omega",
    "omega_rho",
    "order_spectrum",
    "parse_spec",
    "perm_order",
    "quotient_group",
    "render",
    "rho",
    "rho_cyclic",
    "run_catalog_suite",
    "semidirect_product",
    "spectrum_of",
    "totient",
]
