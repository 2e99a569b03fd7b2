"""A-bases: leaf sets of complete r-rooted n-ary forests, and general free bases."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from thompson.algebra.words import Contraction, Signature, SimpleWord, Word
from thompson.exceptions import NotABasisError


def _is_complete_prefix_free(sig: Signature, leaves: Iterable[SimpleWord]) -> bool:
    """Contract sibling n-tuples bottom-up; an A-basis collapses exactly to x_1..x_r."""
    nodes: set[SimpleWord] = set()
    for leaf in leaves:
        if leaf.generator < 1 or leaf.generator > sig.r or leaf in nodes:
            return False
        nodes.add(leaf)

    by_depth: dict[int, set[SimpleWord]] = {}
    for node in nodes:
        by_depth.setdefault(len(node.path), set()).add(node)

    for depth in range(max(by_depth, default=0), 0, -1):
        level = by_depth.get(depth, set())
        parents = {node.parent() for node in level}
        for parent in parents:
            if any(parent.child(i) not in level for i in sig.letters):
                return False
            bucket = by_depth.setdefault(depth - 1, set())
            if parent in bucket:
                return False
            bucket.add(parent)
    return by_depth.get(0, set()) == {SimpleWord(g) for g in range(1, sig.r + 1)}


@dataclass(frozen=True, slots=True)
class ABasis:
    """A sorted, prefix-free, complete set of simple words."""

    sig: Signature
    leaves: tuple[SimpleWord, ...]
    _index: frozenset[SimpleWord] = field(default=frozenset(), compare=False, repr=False)

    @classmethod
    def of(cls, sig: Signature, leaves: Iterable[SimpleWord]) -> ABasis:
        """Validate and sort leaves.

        Raises:
            NotABasisError: If leaves are not an A-basis of sig.
        """
        leaves = tuple(sorted(leaves))
        if not _is_complete_prefix_free(sig, leaves):
            raise NotABasisError(f"not an A-basis of {sig}: {', '.join(str(leaf) for leaf in leaves)}")
        return cls._trusted(sig, leaves)

    @classmethod
    def _trusted(cls, sig: Signature, leaves: Iterable[SimpleWord]) -> ABasis:
        ordered = tuple(sorted(leaves))
        return cls(sig, ordered, frozenset(ordered))

    def __len__(self) -> int:
        return len(self.leaves)

    def __iter__(self) -> Iterator[SimpleWord]:
        return iter(self.leaves)

    def __contains__(self, leaf: object) -> bool:
        return leaf in self._index

    def __str__(self) -> str:
        return "{" + ", ".join(str(leaf) for leaf in self.leaves) + "}"

    def split(self, word: Word) -> tuple[SimpleWord, tuple[int, ...]] | None:
        """Return (leaf, path) with word = leaf·path, or None if word is not in X<A>."""
        if isinstance(word, Contraction):
            return None
        for prefix in word.prefixes():
            if prefix in self._index:
                return prefix, word.path[len(prefix.path) :]
        return None

    def generates(self, word: Word) -> bool:
        """True iff word lies in X<A>."""
        return self.split(word) is not None

    def index(self, leaf: SimpleWord) -> int:
        return self.leaves.index(leaf)

    def internal_nodes(self) -> set[SimpleWord]:
        """Proper prefixes of the leaves (the carets of the forest)."""
        nodes: set[SimpleWord] = set()
        for leaf in self.leaves:
            for k in range(len(leaf.path)):
                nodes.add(SimpleWord(leaf.generator, leaf.path[:k]))
        return nodes

    def depth_into(self, word: Word) -> int:
        """Smallest d such that every descendant of word at depth d lies in X<A>."""
        if isinstance(word, Contraction):
            return 1 + max(self.depth_into(child) for child in word.children)
        if self.generates(word):
            return 0
        return 1 + max(self.depth_into(word.child(i)) for i in self.sig.letters)


def standard_basis(sig: Signature) -> ABasis:
    """The free generators x_1..x_r."""
    return ABasis._trusted(sig, (SimpleWord(g) for g in range(1, sig.r + 1)))


def is_a_basis(sig: Signature, leaves: Iterable[Word]) -> bool:
    leaves = list(leaves)
    if any(isinstance(leaf, Contraction) for leaf in leaves):
        return False
    return _is_complete_prefix_free(sig, leaves)


def simple_expansion(basis: ABasis, leaf: SimpleWord) -> ABasis:
    """Replace leaf by its n children.

    Raises:
        NotABasisError: If leaf is not in basis.
    """
    if leaf not in basis:
        raise NotABasisError(f"{leaf} is not an element of {basis}")
    leaves = [other for other in basis.leaves if other != leaf]
    leaves.extend(leaf.child(i) for i in basis.sig.letters)
    return ABasis._trusted(basis.sig, leaves)


def simple_contraction(basis: ABasis, parent: SimpleWord) -> ABasis:
    """Replace the n children of parent by parent.

    Raises:
        NotABasisError: If some child of parent is not in basis.
    """
    children = [parent.child(i) for i in basis.sig.letters]
    if any(child not in basis for child in children):
        raise NotABasisError(f"the children of {parent} are not all in {basis}")
    leaves = [leaf for leaf in basis.leaves if leaf not in children] + [parent]
    return ABasis._trusted(basis.sig, leaves)


def contractible_parents(basis: ABasis) -> list[SimpleWord]:
    """Parents all of whose children are leaves, in forest order."""
    candidates = {leaf.parent() for leaf in basis.leaves if leaf.path}
    return sorted(p for p in candidates if all(p.child(i) in basis for i in basis.sig.letters))


def expand_leftmost(basis: ABasis, times: int) -> ABasis:
    """Expand the first leaf, `times` times over."""
    for _ in range(times):
        basis = simple_expansion(basis, basis.leaves[0])
    return basis


def expansion_of_size(sig: Signature, size: int) -> ABasis:
    """Leftmost repeated expansion of x_1..x_r with exactly size leaves.

    Raises:
        NotABasisError: If size is not r + k(n-1) for some k >= 0.
    """
    excess = size - sig.r
    if excess < 0 or excess % (sig.n - 1):
        raise NotABasisError(f"no A-basis of {sig} has {size} elements")
    return expand_leftmost(standard_basis(sig), excess // (sig.n - 1))


def is_expansion(larger: ABasis, smaller: ABasis) -> bool:
    """True iff larger<A> is contained in smaller<A>."""
    return all(smaller.generates(leaf) for leaf in larger.leaves)


def minimal_common_expansion(bases: Iterable[ABasis]) -> ABasis:
    """Unique minimal Z with Z<A> equal to the intersection of the Y_i<A>.

    The forest of Z is the union of the forests of the inputs.
    """
    bases = list(bases)
    sig = bases[0].sig
    internal: set[SimpleWord] = set()
    for basis in bases:
        internal |= basis.internal_nodes()
    nodes = {SimpleWord(g) for g in range(1, sig.r + 1)}
    nodes |= {node.child(i) for node in internal for i in sig.letters}
    return ABasis._trusted(sig, nodes - internal)


def flatten_basis(words: Iterable[Word]) -> list[SimpleWord]:
    """Replace every contraction by its children until only simple words remain."""
    pending = list(words)
    flat: list[SimpleWord] = []
    while pending:
        word = pending.pop()
        if isinstance(word, Contraction):
            pending.extend(word.children)
        else:
            flat.append(word)
    return flat


def is_basis(sig: Signature, words: Iterable[Word]) -> bool:
    """True iff words freely generate V_{n,r}.

    A contraction w = w_1...w_n L may be replaced by w_1..w_n without changing
    either the generated subalgebra or freeness, so the test reduces to the
    A-basis test on the fully flattened set.
    """
    return _is_complete_prefix_free(sig, flatten_basis(words))
