"""Independent spectra for the order-60 catalog.

Each expected spectrum below was derived by hand from the abstract structure
(pair orders in products, conjugation arithmetic in the split extensions),
not from any enumeration code path.  Together with the fingerprint
distinctness check this pins the catalog to the thirteen isomorphism types.
"""

import math

import pytest

from grpomega.specs import build_group
from grpomega.stats import order_spectrum

EXPECTED_SPECTRA = {
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
    "C60": {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 10: 4, 12: 4, 15: 8, 20: 8, 30: 8, 60: 16},
    "C30xC2": {1: 1, 2: 3, 3: 2, 5: 4, 6: 6, 10: 12, 15: 8, 30: 24},
    "D60": {1: 1, 2: 31, 3: 2, 5: 4, 6: 2, 10: 4, 15: 8, 30: 8},
    "Dic15": {1: 1, 2: 1, 3: 2, 4: 30, 5: 4, 6: 2, 10: 4, 15: 8, 30: 8},
    "C15:C4": {1: 1, 2: 5, 3: 2, 4: 30, 5: 4, 6: 10, 15: 8},
    "C3xF20": {1: 1, 2: 5, 3: 2, 4: 10, 5: 4, 6: 10, 12: 20, 15: 8},
    "C3xDic5": {1: 1, 2: 1, 3: 2, 4: 10, 5: 4, 6: 2, 10: 4, 12: 20, 15: 8, 30: 8},
    "C3xD20": {1: 1, 2: 11, 3: 2, 5: 4, 6: 22, 10: 4, 15: 8, 30: 8},
    "C5xA4": {1: 1, 2: 3, 3: 8, 5: 4, 10: 12, 15: 32},
    "C5xD12": {1: 1, 2: 7, 3: 2, 5: 4, 6: 2, 10: 28, 15: 8, 30: 8},
    "C5xDic3": {1: 1, 2: 1, 3: 2, 4: 6, 5: 4, 6: 2, 10: 4, 15: 8, 20: 24, 30: 8},
    "S3xD10": {1: 1, 2: 23, 3: 2, 5: 4, 6: 10, 10: 12, 15: 8},
}


def test_expected_spectra_are_wellformed():
    for name, spectrum in EXPECTED_SPECTRA.items():
        assert sum(spectrum.values()) == 60, name
        assert spectrum[1] == 1, name
        for d in spectrum:
            assert 60 % d == 0, (name, d)


def test_catalog_spectra_match_hand_derivations(catalog60):
    assert {e.name for e in catalog60.entries} == set(EXPECTED_SPECTRA)
    for entry in catalog60.entries:
        got = order_spectrum(entry.build()).as_dict()
        assert got == EXPECTED_SPECTRA[entry.name], entry.name


def test_abelian_entries_are_exactly_two(catalog60):
    abelian = sorted(e.name for e in catalog60.entries if e.build().is_abelian())
    assert abelian == ["C30xC2", "C60"]


def test_cyclic_factor_counts():
    # C30 x C2 has three subgroups of index 2, all cyclic of order 30
    G = build_group("dirprod(cyclic:30,cyclic:2)")
    assert sum(1 for g in G.elements if g.order() == 30) == 24
    # D60 has a cyclic rotation subgroup of order 30
    D60 = build_group("dihedral:60")
    assert max(g.order() for g in D60.elements) == 30
