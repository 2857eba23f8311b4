import random

import pytest

from grpomega.factored import FactoredNat, factor
from grpomega.groups import (
    construct_alternating,
    construct_cyclic,
    construct_dihedral,
    construct_psl2,
    construct_symmetric,
    direct_product,
    semidirect_product,
)
from grpomega.stats import (
    OrderSpectrum,
    divisors,
    omega_rho,
    omega_rho_cyclic,
    order_spectrum,
    rho,
    rho_cyclic,
    rho_of_spectrum,
    spectrum_of,
    totient,
    validate_spectrum,
)
from helpers import naive_phi, naive_spectrum


def test_order_spectrum_examples():
    assert order_spectrum(construct_alternating(4)).as_dict() == {1: 1, 2: 3, 3: 8}
    assert order_spectrum(construct_alternating(5)).as_dict() == {1: 1, 2: 15, 3: 20, 5: 24}
    assert order_spectrum(construct_cyclic(6)).as_dict() == {1: 1, 2: 1, 3: 2, 6: 2}


def test_order_spectrum_matches_naive_oracle():
    for G in [
        construct_dihedral(12),
        semidirect_product(5, 4, 2),
        construct_symmetric(4),
    ]:
        assert order_spectrum(G).as_dict() == naive_spectrum(G)


def test_rho_examples():
    assert rho(semidirect_product(3, 4, 2)) == FactoredNat({2: 15, 3: 4})
    assert rho(construct_cyclic(1)) == FactoredNat()
    assert rho(construct_psl2(11)).omega() == 769


def test_rho_equals_elementwise_product():
    for G in [
        construct_alternating(4),
        construct_dihedral(10),
        semidirect_product(3, 4, 2),
        construct_cyclic(12),
    ]:
        product = 1
        for g in G.elements:
            product *= g.order()
        value = rho(G)
        assert int(value.to_decimal()) == product


def test_omega_rho_examples():
    assert omega_rho(construct_alternating(5)) == 59
    assert omega_rho(construct_dihedral(12)) == 13
    for p in (2, 3, 5, 7, 11):
        assert omega_rho(construct_cyclic(p)) == p - 1


def test_rho_cyclic_examples():
    assert rho_cyclic(12) == FactoredNat({2: 15, 3: 8})
    assert rho_cyclic(1) == FactoredNat()
    assert rho_cyclic(7) == FactoredNat({7: 6})


def test_rho_cyclic_matches_construction_exhaustive_small():
    for n in range(1, 201):
        assert rho_cyclic(n) == rho(construct_cyclic(n)), n


@pytest.mark.parametrize("n", [512, 729, 1000, 1729, 2000])
def test_rho_cyclic_matches_construction_spot_checks(n):
    assert rho_cyclic(n) == rho(construct_cyclic(n))


def test_totient_against_naive():
    for n in range(1, 200):
        assert totient(n) == naive_phi(n), n
    with pytest.raises(ValueError):
        totient(0)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(660) == sorted(d for d in range(1, 661) if 660 % d == 0)


def test_parity_invariant():
    # odd primes get even exponents in rho; the 2-exponent is odd when 2 | |G|
    for G in [
        construct_alternating(5),
        construct_dihedral(12),
        semidirect_product(5, 4, 3),
        construct_symmetric(4),
        construct_cyclic(30),
    ]:
        r = rho(G)
        for p, _ in factor(G.order).items():
            e = r.exponent_of(p)
            if p == 2:
                assert e % 2 == 1
            else:
                assert e % 2 == 0


def test_divisibility_invariant():
    for G in [
        construct_alternating(5),
        construct_dihedral(10),
        construct_cyclic(24),
        semidirect_product(15, 4, 2),
    ]:
        r = rho(G)
        for p, _ in factor(G.order).items():
            k = G.order
            while k % p == 0:
                k //= p
            e = r.exponent_of(p)
            assert e % k == 0
            assert e % (p - 1) == 0 if p > 2 else True


def test_validate_spectrum_rejects_bad_spectra():
    good = order_spectrum(construct_cyclic(6))
    validate_spectrum(good, 6)
    with pytest.raises(ValueError):
        validate_spectrum(good, 7)  # total mismatch
    with pytest.raises(ValueError):
        validate_spectrum(OrderSpectrum.from_counts({1: 2, 2: 4}), 6)  # identity count
    with pytest.raises(ValueError):
        validate_spectrum(OrderSpectrum.from_counts({1: 1, 4: 5}), 6)  # 4 does not divide 6
    with pytest.raises(ValueError):
        validate_spectrum(OrderSpectrum.from_counts({1: 1, 3: 5}), 6)  # phi(3) = 2 | 5 fails


def test_spectrum_of_subset():
    A5 = construct_alternating(5)
    five = next(g for g in A5.sorted_elements() if g.order() == 5)
    C5 = A5.subgroup_generated([five])
    assert spectrum_of(C5).as_dict() == {1: 1, 5: 4}
    assert rho_of_spectrum(spectrum_of(C5)) == FactoredNat({5: 4})


def test_random_semidirect_spectra_validate():
    rng = random.Random(99)
    for _ in range(10):
        n = rng.randrange(2, 20)
        m = rng.randrange(2, 8)
        candidates = [k for k in range(1, n) if pow(k, m, n) == 1 % n]
        k = rng.choice(candidates) if candidates else 1
        G = semidirect_product(n, m, k)
        validate_spectrum(order_spectrum(G), G.order)
