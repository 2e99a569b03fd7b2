"""Test reading and writing automorphism files and tree pairs."""

import pytest

from thompson.algebra import SimpleWord, make_signature
from thompson.automorphism import (
    dump_automorphism,
    dumps_automorphism,
    example_names,
    forest_leaves,
    from_tree_pair,
    load_automorphism,
    load_example,
    loads_automorphism,
)
from thompson.exceptions import NotABasisError, WordSyntaxError

SNF0_TEXT = """\
# comment lines are skipped
thompson v1
n 2
r 1

map x1 a1 a1 -> x1 a1
map x1 a1 a2 -> x1 a2 a1
map x1 a2 -> x1 a2 a2
"""


def test_loads_automorphism(x):
    """Test parsing a well-formed file."""
    psi = loads_automorphism(SNF0_TEXT)
    assert psi.sig == make_signature(2, 1)
    assert psi.pairs() == [(x(1, 1), x(1)), (x(1, 2), x(2, 1)), (x(2), x(2, 2))]


def test_dumps_is_canonical():
    """Test the written form of the canonical symbol."""
    psi = loads_automorphism(SNF0_TEXT)
    assert dumps_automorphism(psi) == (
        "thompson v1\nn 2\nr 1\nmap x1 a1 a1 -> x1 a1\nmap x1 a1 a2 -> x1 a2 a1\nmap x1 a2 -> x1 a2 a2\n"
    )
    assert dumps_automorphism(psi, comment="snf0").startswith("# snf0\nthompson v1\n")


def test_loads_accepts_maps_on_any_basis():
    """Test that maps with lambda on the left are canonicalised."""
    text = "thompson v1\nn 2\nr 1\nmap x1 a2 x1 a1 L -> x1\n"
    assert loads_automorphism(text) == load_example("periodic_phi")


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("n 2\nr 1\nmap x1 -> x1\n", 1),
        ("thompson v1\nn two\nr 1\nmap x1 -> x1\n", 2),
        ("thompson v1\nn 2\nr 1\nmap x1 a3 -> x1\n", 4),
        ("thompson v1\nn 2\nr 1\nmap x1 a1 x1 a2 -> x1\n", 4),
        ("thompson v1\nn 2\nr 1\nmapping x1 -> x1\n", 4),
    ],
)
def test_loads_reports_line_numbers(text, line):
    """Test that syntax errors carry the offending line."""
    with pytest.raises(WordSyntaxError) as exc_info:
        loads_automorphism(text)
    assert exc_info.value.line == line


def test_loads_rejects_missing_maps_and_bad_signature():
    """Test files without maps or with n < 2."""
    with pytest.raises(WordSyntaxError):
        loads_automorphism("thompson v1\nn 2\nr 1\n")
    with pytest.raises(WordSyntaxError):
        loads_automorphism("thompson v1\nn 1\nr 1\nmap x1 -> x1\n")


def test_loads_rejects_non_bases():
    """Test that both sides of the maps must be bases."""
    with pytest.raises(NotABasisError):
        loads_automorphism("thompson v1\nn 2\nr 1\nmap x1 a1 -> x1 a1\n")


def test_dump_and_load_file(tmp_path):
    """Test writing to disk and reading back."""
    psi = load_example("pond")
    path = tmp_path / "pond.thm"
    dump_automorphism(psi, path, comment="copy")
    assert load_automorphism(path) == psi
    assert path.read_text(encoding="utf-8").startswith("# copy\n")


def test_bundled_examples():
    """Test that every bundled example loads."""
    names = example_names()
    assert {"snf0", "snf2", "pond", "lio1", "pc1_phi", "sub2full"} <= set(names)
    for name in names:
        assert load_example(name).sig.n == 2
    with pytest.raises(FileNotFoundError):
        load_example("no_such_example")


def test_from_tree_pair(sig):
    """Test building snf0 from its tree pair diagram."""
    assert from_tree_pair(sig, [[1, 2], 3], [1, [2, 3]]) == load_example("snf0")


def test_forest_leaves():
    """Test numbering of the leaves of a forest."""
    sig = make_signature(2, 2)
    assert forest_leaves(sig, [1, [2, 3]]) == {1: SimpleWord(1), 2: SimpleWord(2, (1,)), 3: SimpleWord(2, (2,))}
    with pytest.raises(NotABasisError):
        forest_leaves(sig, [1, [2, 3, 4]])
    with pytest.raises(NotABasisError):
        forest_leaves(sig, [1, [1, 2]])


def test_from_tree_pair_needs_matching_numbers(sig):
    """Test that both forests must use the same leaf numbers."""
    with pytest.raises(NotABasisError):
        from_tree_pair(sig, [1, 2], [1, 3])
