"""Splitting psi into its periodic and regular infinite parts, and moving parts between ranks."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from thompson.algebra.bases import ABasis, expansion_of_size, standard_basis
from thompson.algebra.homomorphism import evaluate
from thompson.algebra.words import Signature, SimpleWord, Word
from thompson.automorphism.symbol import Automorphism, apply, from_map
from thompson.orbits.qnf import quasi_normal_basis
from thompson.orbits.types import LeafType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """psi = psi_P * psi_RI over the free factors generated by X_P and X_RI.

    The j-th leaf of each part is the fresh generator x_j of that part's algebra.
    """

    periodic_leaves: tuple[SimpleWord, ...]
    infinite_leaves: tuple[SimpleWord, ...]
    periodic: Automorphism | None
    infinite: Automorphism | None


def restrict(psi: Automorphism, leaves: Sequence[SimpleWord]) -> Automorphism:
    """psi on the invariant subalgebra generated by leaves, as an element of G_{n,|leaves|}."""
    sig = Signature(n=psi.sig.n, r=len(leaves))
    relabel = {leaf: SimpleWord(j) for j, leaf in enumerate(leaves, start=1)}
    pairs = [(SimpleWord(j), evaluate(psi.sig, relabel, apply(psi, leaf))) for j, leaf in enumerate(leaves, start=1)]
    return from_map(sig, pairs)


def decompose(psi: Automorphism) -> Decomposition:
    """Partition X_psi by leaf type and restrict psi to each part."""
    qnf = quasi_normal_basis(psi)
    periodic_leaves = tuple(qnf.leaves_of_type(LeafType.PERIODIC))
    infinite_leaves = tuple(leaf for leaf in qnf.basis.leaves if qnf.types[leaf] is not LeafType.PERIODIC)
    logger.debug(f"decomposition sizes: periodic={len(periodic_leaves)} infinite={len(infinite_leaves)}")
    return Decomposition(
        periodic_leaves=periodic_leaves,
        infinite_leaves=infinite_leaves,
        periodic=restrict(psi, periodic_leaves) if periodic_leaves else None,
        infinite=restrict(psi, infinite_leaves) if infinite_leaves else None,
    )


def standard_rank(n: int, a: int) -> int:
    """The s in 1..n-1 with s = a mod (n-1)."""
    return (a - 1) % (n - 1) + 1


def rebase_to_standard_rank(theta: Automorphism) -> tuple[Automorphism, ABasis]:
    """Conjugate copy of theta on V_{n,s}, s = standard_rank(n, r), with its dictionary.

    The dictionary E is the leftmost expansion of V_{n,s} with r leaves; x_i
    corresponds to E_i.
    """
    n, a = theta.sig.n, theta.sig.r
    s = standard_rank(n, a)
    if s == a:
        return theta, standard_basis(theta.sig)
    target = Signature(n=n, r=s)
    dictionary = expansion_of_size(target, a)
    images: dict[SimpleWord, Word] = {SimpleWord(i): leaf for i, leaf in enumerate(dictionary.leaves, start=1)}
    pairs = [
        (leaf, evaluate(theta.sig, images, apply(theta, SimpleWord(j))))
        for j, leaf in enumerate(dictionary.leaves, start=1)
    ]
    return from_map(target, pairs), dictionary


def lift_conjugator(
    rho: Automorphism,
    source: ABasis,
    target: ABasis,
    source_leaves: Sequence[SimpleWord],
    target_leaves: Sequence[SimpleWord],
) -> list[tuple[SimpleWord, Word]]:
    """Pull a conjugator between rebased parts back to the leaves of the original bases.

    The i-th source leaf goes to the image of source.leaves[i] under rho,
    rewritten with target.leaves[j] replaced by target_leaves[j].
    """
    relabel: dict[SimpleWord, Word] = dict(zip(target.leaves, target_leaves, strict=True))
    return [
        (leaf, evaluate(rho.sig, relabel, apply(rho, rebased)))
        for leaf, rebased in zip(source_leaves, source.leaves, strict=True)
    ]
