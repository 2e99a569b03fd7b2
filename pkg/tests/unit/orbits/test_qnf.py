"""Test quasi-normal forms, leaf types, characteristics and ponds."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from thompson.algebra import ABasis, simple_expansion
from thompson.automorphism import apply_power
from thompson.orbits import (
    Characteristic,
    LeafType,
    Pond,
    find_ponds,
    initial_basis,
    is_periodic,
    is_regular_infinite,
    is_semi_normal,
    multiplier_set,
    order_of,
    quasi_normal_basis,
    semi_normal_basis,
)
from thompson.orbits.forms import typed_basis


def test_snf0_quasi_normal_basis(example, x):
    """Test the two characteristic leaves of snf0."""
    psi = example("snf0")
    qnf = quasi_normal_basis(psi)
    assert qnf.basis.leaves == (x(1), x(2))
    assert qnf.types == {x(1): LeafType.CHARACTERISTIC, x(2): LeafType.CHARACTERISTIC}
    assert qnf.characteristics[x(1)] == Characteristic(-1, (1,))
    assert qnf.characteristics[x(2)] == Characteristic(1, (2,))
    assert qnf.is_regular_infinite
    assert qnf.ponds == ()


def test_semi_normal_form_is_preserved(example):
    """Test that the quasi-normal basis is semi-normal and no larger than the semi-normal one."""
    for name in ("snf0", "orbiteg", "lio1", "pond", "cycle23"):
        psi = example(name)
        qnf = quasi_normal_basis(psi)
        assert is_semi_normal(psi, qnf.basis)
        assert len(qnf.basis) <= len(semi_normal_basis(psi))


def test_initial_basis_lies_in_domain_or_range(example):
    """Test that every leaf of the initial basis is below Y or Z."""
    psi = example("pond")
    basis = initial_basis(psi)
    range_basis = ABasis.of(psi.sig, psi.range_leaves)
    assert all(psi.domain.generates(leaf) or range_basis.generates(leaf) for leaf in basis)


def test_orbiteg_mixes_periodic_and_characteristic_leaves(example, x):
    """Test leaf types of an automorphism with both kinds of leaf."""
    qnf = quasi_normal_basis(example("orbiteg"))
    assert qnf.basis.leaves == (x(1, 1), x(1, 2), x(2, 1), x(2, 2))
    assert qnf.characteristics == {x(1, 1): Characteristic(-1, (1,)), x(1, 2): Characteristic(1, (2,))}
    assert qnf.leaves_of_type(LeafType.PERIODIC) == [x(2, 1), x(2, 2)]
    assert qnf.periods == {x(2, 1): 2, x(2, 2): 2}
    assert not qnf.is_periodic
    assert not qnf.is_regular_infinite


def test_transient_leaf_has_witness(example, x):
    """Test a type C leaf and the witness leading to a type B leaf."""
    psi = example("lio1")
    qnf = quasi_normal_basis(psi)
    assert qnf.basis.leaves == (x(1), x(2, 1), x(2, 2))
    assert qnf.types[x(2, 1)] is LeafType.TRANSIENT
    witness = qnf.witnesses[x(2, 1)]
    assert qnf.types[witness.leaf] is LeafType.CHARACTERISTIC
    assert apply_power(psi, x(2, 1), witness.power) == x(*witness.leaf.path, *witness.path)


def test_multiplier_sets(example):
    """Test the characteristics of semi-infinite components."""
    assert multiplier_set(example("snf0")) == {Characteristic(1, (2,)), Characteristic(-1, (1,))}
    assert multiplier_set(example("lio1")) == {Characteristic(1, (1, 1)), Characteristic(-1, (1, 1))}
    assert multiplier_set(example("pc_example1")) == {Characteristic(-2, (1,)), Characteristic(1, (2,))}
    assert multiplier_set(example("pc1_phi")) == {Characteristic(1, (2, 2, 2)), Characteristic(-1, (1, 1, 1))}


def test_pond_is_found(example, x):
    """Test the single pond of the pond example."""
    qnf = quasi_normal_basis(example("pond"))
    assert qnf.ponds == (Pond(x(1, 1, 2), 2, x(1, 2, 2)),)
    assert str(qnf.ponds[0]) == "pond l=x1 a1 a1 a2 k=2 r=x1 a1 a2 a2"


def test_order_of(example):
    """Test orders of periodic and infinite automorphisms."""
    assert order_of(example("snf2")) == 4
    assert order_of(example("periodic_phi")) == 2
    assert order_of(example("cycle23")) == 6
    assert order_of(example("snf0")) is None
    assert order_of(example("orbiteg")) is None


def test_periodic_and_regular_infinite(example):
    """Test the two pure classes and an automorphism in neither."""
    assert is_periodic(example("periodic_psi"))
    assert not is_regular_infinite(example("periodic_psi"))
    assert is_regular_infinite(example("snf0"))
    assert not is_periodic(example("snf0"))
    assert not is_periodic(example("sub2full"))
    assert not is_regular_infinite(example("sub2full"))


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(data=st.data())
def test_pond_survives_semi_normal_expansions(example, x, data):
    """Test that expanding the quasi-normal basis while staying semi-normal never hides the pond orbit."""
    psi = example("pond")
    basis = quasi_normal_basis(psi).basis
    for _ in range(data.draw(st.integers(min_value=1, max_value=3))):
        candidates = [leaf for leaf in basis.leaves if is_semi_normal(psi, simple_expansion(basis, leaf))]
        if not candidates:
            break
        basis = simple_expansion(basis, data.draw(st.sampled_from(candidates)))

    ponds = find_ponds(psi, typed_basis(psi, basis))
    earlier = {apply_power(psi, x(1, 1, 2), -j) for j in range(16)}
    assert any(pond.terminal in earlier and pond.width >= 2 for pond in ponds)
