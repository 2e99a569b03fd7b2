"""Test A-bases, expansions and the basis test."""

import pytest

from thompson.algebra import (
    ABasis,
    Contraction,
    SimpleWord,
    contractible_parents,
    evaluate,
    expand_leftmost,
    expansion_of_size,
    is_a_basis,
    is_basis,
    is_expansion,
    make_signature,
    minimal_common_expansion,
    simple_contraction,
    simple_expansion,
    standard_basis,
)
from thompson.algebra.paths import paths_of_length, primitive_root, strip_prefix_powers
from thompson.exceptions import NotABasisError


def test_abasis_sorts_and_validates(sig, x):
    """Test that leaves are stored in forest order."""
    basis = ABasis.of(sig, [x(2), x(1, 2), x(1, 1)])
    assert basis.leaves == (x(1, 1), x(1, 2), x(2))
    assert str(basis) == "{x1 a1 a1, x1 a1 a2, x1 a2}"

    with pytest.raises(NotABasisError):
        ABasis.of(sig, [x(1)])
    with pytest.raises(NotABasisError):
        ABasis.of(sig, [x(1), x(1, 1), x(2)])


def test_abasis_with_two_generators():
    """Test a forest with two roots."""
    sig = make_signature(2, 2)
    leaves = [SimpleWord(1), SimpleWord(2, (1,)), SimpleWord(2, (2,))]
    assert ABasis.of(sig, leaves).leaves == tuple(leaves)
    assert not is_a_basis(sig, [SimpleWord(1)])
    assert standard_basis(sig).leaves == (SimpleWord(1), SimpleWord(2))


def test_split_and_depth_into(sig, x):
    """Test membership of X<A> and the depth below a word that reaches it."""
    basis = ABasis.of(sig, [x(1, 1), x(1, 2), x(2)])
    assert basis.split(x(1, 2, 1, 1)) == (x(1, 2), (1, 1))
    assert basis.split(x(1)) is None
    assert basis.split(Contraction((x(2), x(1, 1)))) is None
    assert basis.depth_into(x(1)) == 1
    assert basis.depth_into(x()) == 2
    assert basis.internal_nodes() == {x(), x(1)}


def test_simple_expansion_and_contraction(sig, x):
    """Test that expanding then contracting a leaf returns the basis."""
    basis = standard_basis(sig)
    expanded = simple_expansion(basis, x())
    assert expanded.leaves == (x(1), x(2))
    assert contractible_parents(expanded) == [x()]
    assert simple_contraction(expanded, x()) == basis

    with pytest.raises(NotABasisError):
        simple_expansion(expanded, x())
    with pytest.raises(NotABasisError):
        simple_contraction(expanded, x(1))


def test_expansion_of_size(sig, x):
    """Test leftmost expansions of a requested size."""
    assert expansion_of_size(sig, 3).leaves == (x(1, 1), x(1, 2), x(2))
    assert expand_leftmost(standard_basis(sig), 2) == expansion_of_size(sig, 3)
    with pytest.raises(NotABasisError):
        expansion_of_size(sig, 0)
    with pytest.raises(NotABasisError):
        expansion_of_size(make_signature(3, 1), 2)


def test_minimal_common_expansion(sig, x):
    """Test the union of two forests."""
    left = ABasis.of(sig, [x(1, 1), x(1, 2), x(2)])
    right = ABasis.of(sig, [x(1), x(2, 1), x(2, 2)])
    common = minimal_common_expansion([left, right])
    assert common.leaves == (x(1, 1), x(1, 2), x(2, 1), x(2, 2))
    assert is_expansion(common, left)
    assert is_expansion(common, right)
    assert not is_expansion(left, right)


def test_is_basis_flattens_contractions(sig, x):
    """Test general free bases containing lambda."""
    assert is_basis(sig, [Contraction((x(2), x(1)))])
    assert is_basis(sig, [Contraction((x(2, 2), x(1))), x(2, 1)])
    assert not is_basis(sig, [Contraction((x(2), x(1))), x(1, 1)])
    assert not is_basis(sig, [x(1), x(2, 1)])


def test_evaluate_extends_a_basis_map(sig, x):
    """Test the homomorphism determined by images of an A-basis."""
    images = {x(1): x(2), x(2): x(1)}
    assert evaluate(sig, images, x(1, 2)) == x(2, 2)
    assert evaluate(sig, images, x()) == Contraction((x(2), x(1)))
    with pytest.raises(NotABasisError):
        evaluate(sig, {x(1, 1): x(1)}, x(2))


def test_path_helpers():
    """Test primitive roots and prefix stripping."""
    assert primitive_root((1, 2, 1, 2)) == ((1, 2), 2)
    assert primitive_root((1, 1, 2)) == ((1, 1, 2), 1)
    with pytest.raises(ValueError):
        primitive_root(())
    assert strip_prefix_powers((1, 1, 1, 2), (1,)) == (3, (2,))
    assert paths_of_length(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
