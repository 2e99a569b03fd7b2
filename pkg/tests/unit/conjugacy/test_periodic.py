"""Test cycle types and conjugacy of periodic automorphisms."""

import pytest

from thompson.algebra import Signature, SimpleWord
from thompson.automorphism import conjugate_by, from_map, power
from thompson.conjugacy import conjugate_periodic, cycle_type, orbits_of_periodic
from thompson.exceptions import NotPeriodicError
from thompson.models import CycleType


def test_cycle_types(example):
    """Test orbit-size censuses of the periodic examples."""
    assert cycle_type(example("periodic_phi")) == CycleType(entries={2: 1})
    assert cycle_type(example("periodic_psi")) == CycleType(entries={2: 3})
    assert str(cycle_type(example("cycle23"))) == "2:2 3:1"
    assert cycle_type(example("snf2")).total() == 4


def test_orbits_start_at_least_element(example, x):
    """Test the orbit listing of cycle23."""
    orbits = orbits_of_periodic(example("cycle23"))
    assert orbits[0] == (x(1, 1, 1), x(1, 1, 2), x(1, 2))
    assert [len(orbit) for orbit in orbits] == [3, 2, 2]


def test_cycle_type_needs_periodic_input(example):
    """Test that infinite order automorphisms are refused."""
    with pytest.raises(NotPeriodicError):
        cycle_type(example("snf0"))


def test_conjugate_periodic_with_unequal_multiplicities(example):
    """Test conjugacy after expanding orbits to equal counts."""
    psi, phi = example("periodic_psi"), example("periodic_phi")
    certificate = conjugate_periodic(psi, phi)
    assert certificate.conjugate
    assert conjugate_by(psi, certificate.conjugator) == phi


def test_conjugate_periodic_to_itself_and_powers(example):
    """Test that a periodic automorphism is conjugate to itself and its inverse."""
    psi = example("snf2")
    assert conjugate_periodic(psi, psi).conjugate
    certificate = conjugate_periodic(psi, power(psi, -1))
    assert certificate.conjugate
    assert conjugate_by(psi, certificate.conjugator) == power(psi, -1)
    assert conjugate_periodic(power(psi, 4), power(psi, 4)).conjugate


def test_conjugate_periodic_refutes_different_sizes(example):
    """Test the cycle type gate."""
    certificate = conjugate_periodic(example("cycle23"), example("periodic_psi"))
    assert not certificate.conjugate
    assert certificate.reason == "cycle type"
    assert certificate.conjugator is None


def test_conjugate_periodic_multiplicity_congruence():
    """Test the multiplicity gate for n = 3."""
    sig = Signature(n=3, r=1)
    leaves = [SimpleWord(1, (i,)) for i in (1, 2, 3)]
    swap = from_map(sig, [(leaves[0], leaves[1]), (leaves[1], leaves[0]), (leaves[2], leaves[2])])
    deeper = [SimpleWord(1, (3, i)) for i in (1, 2, 3)]
    two_swaps = from_map(
        sig,
        [(leaves[0], leaves[1]), (leaves[1], leaves[0])]
        + [(deeper[0], deeper[1]), (deeper[1], deeper[0]), (deeper[2], deeper[2])],
    )
    certificate = conjugate_periodic(swap, two_swaps)
    assert not certificate.conjugate
    assert certificate.reason == "multiplicity congruence"


def test_conjugate_periodic_needs_periodic_inputs(example):
    """Test that regular infinite inputs are refused."""
    with pytest.raises(NotPeriodicError):
        conjugate_periodic(example("snf0"), example("snf2"))
