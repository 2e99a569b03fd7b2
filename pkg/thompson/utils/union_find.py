"""Disjoint-set forest with union by rank and path compression."""

from collections.abc import Hashable, Iterable
from typing import Generic, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    def __init__(self, items: Iterable[T]):
        self.parent: dict[T, T] = {item: item for item in items}
        self.rank: dict[T, int] = {item: 0 for item in self.parent}

    def find(self, item: T) -> T:
        root = self.parent[item]
        if self.parent[root] != root:
            root = self.parent[item] = self.find(root)
        return root

    def union(self, first: T, second: T) -> None:
        first, second = self.find(first), self.find(second)
        if first == second:
            return
        if self.rank[first] < self.rank[second]:
            first, second = second, first
        elif self.rank[first] == self.rank[second]:
            self.rank[first] += 1
        self.parent[second] = first

    def classes(self) -> list[set[T]]:
        """The partition, in order of first appearance."""
        groups: dict[T, set[T]] = {}
        for item in self.parent:
            groups.setdefault(self.find(item), set()).add(item)
        return list(groups.values())
