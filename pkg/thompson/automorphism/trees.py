"""Tree pair diagrams in numbered-leaf nested-list notation.

A tree is either a leaf number or a list of exactly n subtrees, for example
``[[1, [2, 3]], 4]`` for n = 2.  A forest is a list of r trees; when r = 1 the
single tree may be given on its own.
"""

from collections.abc import Sequence

from thompson.algebra.words import Signature, SimpleWord
from thompson.automorphism.symbol import Automorphism, from_map
from thompson.exceptions import NotABasisError

Tree = int | Sequence["Tree"]


def _as_forest(sig: Signature, tree: Tree) -> Sequence[Tree]:
    if sig.r == 1 and not (isinstance(tree, Sequence) and len(tree) == 1):
        return [tree]
    if not isinstance(tree, Sequence) or len(tree) != sig.r:
        raise NotABasisError(f"expected a forest of {sig.r} trees")
    return tree


def forest_leaves(sig: Signature, tree: Tree) -> dict[int, SimpleWord]:
    """Leaf number -> the simple word at that leaf.

    Raises:
        NotABasisError: If a node has the wrong arity or a number repeats.
    """
    labels: dict[int, SimpleWord] = {}
    pending = [(SimpleWord(g), subtree) for g, subtree in enumerate(_as_forest(sig, tree), start=1)]
    while pending:
        node, subtree = pending.pop()
        if isinstance(subtree, int):
            if subtree in labels:
                raise NotABasisError(f"leaf number {subtree} appears twice")
            labels[subtree] = node
            continue
        if len(subtree) != sig.n:
            raise NotABasisError(f"node {node} has {len(subtree)} children, expected {sig.n}")
        pending.extend((node.child(i), child) for i, child in enumerate(subtree, start=1))
    return labels


def from_tree_pair(sig: Signature, domain_tree: Tree, range_tree: Tree) -> Automorphism:
    """Automorphism sending the domain leaf numbered k to the range leaf numbered k."""
    domain = forest_leaves(sig, domain_tree)
    range_ = forest_leaves(sig, range_tree)
    if domain.keys() != range_.keys():
        raise NotABasisError("the two forests are numbered differently")
    return from_map(sig, [(domain[label], range_[label]) for label in sorted(domain)])
