"""Test the disjoint-set forest."""

from thompson.utils.union_find import UnionFind


def test_singletons():
    """Test that every item starts in its own class."""
    forest = UnionFind("abc")
    assert forest.classes() == [{"a"}, {"b"}, {"c"}]
    assert forest.find("b") == "b"


def test_union_merges_classes():
    """Test merging and idempotent unions."""
    forest = UnionFind(range(6))
    forest.union(0, 1)
    forest.union(2, 3)
    forest.union(1, 3)
    forest.union(3, 0)
    assert forest.find(0) == forest.find(2)
    assert forest.find(4) != forest.find(0)
    assert sorted(map(sorted, forest.classes())) == [[0, 1, 2, 3], [4], [5]]


def test_classes_follow_first_appearance():
    """Test the order of the returned partition."""
    forest = UnionFind(["x", "y", "z"])
    forest.union("z", "y")
    assert forest.classes() == [{"x"}, {"y", "z"}]
