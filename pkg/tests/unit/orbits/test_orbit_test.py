"""Test component scans, component types and the orbit-sharing test."""

import pytest

from thompson.algebra import ABasis, Contraction
from thompson.algebra.bases import expansion_of_size
from thompson.automorphism import apply, apply_power
from thompson.exceptions import NotABasisError, SearchLimitExceeded
from thompson.orbits import (
    ComponentType,
    ScanState,
    component_test,
    component_type,
    normalize,
    orbit_test,
    quasi_normal_basis,
    scan_component,
)
from thompson.orbits.scanning import scan_direction


def test_scan_of_semi_infinite_component(example, x):
    """Test the halting states of a right semi-infinite component."""
    psi = example("snf0")
    basis = quasi_normal_basis(psi).basis
    scan = scan_component(psi, basis, x(2))
    assert scan.states == (ScanState.REPEATS, ScanState.LEAVES)
    assert scan.forward.elements == (x(2, 2),)
    assert scan.raw_type() is ComponentType.RIGHT_SEMI_INFINITE
    assert scan.find(x(2, 2)) == 1


def test_scan_of_cycle(example, x, sig):
    """Test a complete finite component."""
    psi = example("snf2")
    basis = ABasis.of(sig, [x(1, 1), x(1, 2), x(2, 1), x(2, 2)])
    scan = scan_component(psi, basis, x(1, 1))
    assert scan.is_cycle
    assert scan.period == 4
    assert scan.forward.elements == (x(2, 2), x(1, 2), x(2, 1))
    assert scan.raw_type() is ComponentType.COMPLETE_FINITE


def test_scan_needs_word_below_basis(example, x, sig):
    """Test that scans start inside X<A>."""
    psi = example("snf0")
    with pytest.raises(NotABasisError):
        scan_component(psi, expansion_of_size(sig, 3), x())


def test_scan_step_limit(example, x, sig):
    """Test that a scan gives up after the step cap."""
    psi = example("snf2")
    basis = ABasis.of(sig, [x(1, 1), x(1, 2), x(2, 1), x(2, 2)])
    assert scan_direction(psi, basis, x(1, 1), limit=4).state is ScanState.CYCLE
    with pytest.raises(SearchLimitExceeded) as exc_info:
        scan_direction(psi, basis, x(1, 1), limit=2)
    assert exc_info.value.procedure == "scan"
    assert exc_info.value.steps == 2


def test_component_types(example, x):
    """Test the component type of elements of snf0."""
    psi = example("snf0")
    qnf = quasi_normal_basis(psi)
    assert component_type(psi, qnf, x(1)) is ComponentType.LEFT_SEMI_INFINITE
    assert component_type(psi, qnf, x(2)) is ComponentType.RIGHT_SEMI_INFINITE
    assert component_type(psi, qnf, x(2, 2, 2)) is ComponentType.RIGHT_SEMI_INFINITE
    assert component_type(psi, qnf, x(1, 2)) is ComponentType.COMPLETE_INFINITE


def test_periodic_component_type(example, x):
    """Test that elements below type A leaves are complete finite."""
    psi = example("orbiteg")
    qnf = quasi_normal_basis(psi)
    assert component_type(psi, qnf, x(2, 1, 2)) is ComponentType.COMPLETE_FINITE


def test_normalize_strips_multiplier_powers(example, x):
    """Test moving a word to its canonical element."""
    psi = example("snf0")
    qnf = quasi_normal_basis(psi)
    normal = normalize(psi, qnf, x(2, 2, 2, 1))
    assert normal.base == x(2, 1)
    assert normal.offset == 2
    assert apply_power(psi, normal.base, normal.offset) == x(2, 2, 2, 1)


def test_component_test(example, x):
    """Test the shift between two elements of one component."""
    psi = example("snf0")
    qnf = quasi_normal_basis(psi)
    assert component_test(psi, qnf, x(2), x(2, 2, 2)).shift == 2
    assert component_test(psi, qnf, x(2, 2, 2), x(2)).shift == -2
    assert component_test(psi, qnf, x(1, 1), x(1)).shift == 1
    assert not component_test(psi, qnf, x(2, 1), x(2, 2)).related


def test_orbit_test_simple_words(example, x):
    """Test shifts between simple words."""
    psi = example("snf0")
    assert orbit_test(psi, x(2), x(2, 2, 2)).shift == 2
    assert orbit_test(psi, x(1, 1), x(1)).shift == 1
    assert orbit_test(psi, x(1, 2), x(2, 1)).shift == 1
    assert orbit_test(psi, x(2, 1), x(2, 1)).shift == 0


def test_orbit_test_with_contraction(example, x):
    """Test an orbit that leaves the simple words."""
    psi = example("snf0")
    image = apply(psi, x(1))
    assert isinstance(image, Contraction)
    assert orbit_test(psi, x(1), image).shift == 1
    assert orbit_test(psi, image, x(1)).shift == -1


def test_orbit_test_periodic(example, x):
    """Test orbits of a periodic automorphism."""
    psi = example("snf2")
    assert orbit_test(psi, x(1, 1), x(2, 1)).shift == 3
    assert not orbit_test(psi, x(1, 1), x(1, 1, 1)).related


def test_orbit_test_across_pond(example, x):
    """Test orbits that pass through a pond."""
    psi = example("pond")
    u = x(1, 2, 2, 1, 1, 2)
    assert not orbit_test(psi, u, x(2, 1, 1)).related

    w = x(1, 1, 1, 1, 2, 1, 1, 2)
    answer = orbit_test(psi, u, w)
    assert answer.related
    assert answer.shift == -3
    assert apply_power(psi, u, -3) == w

    u = x(1, 1, 1, 1, 1, 1, 1, 1, 2)
    answer = orbit_test(psi, u, x(1, 2, 1, 2, 1, 2, 2))
    assert answer.shift == 7
    assert not orbit_test(psi, u, x(1, 1, 1, 1, 2, 1)).related
