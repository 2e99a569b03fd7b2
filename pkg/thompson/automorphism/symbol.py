"""Elements of G_{n,r} as canonical symbols.

An automorphism is stored on its minimal domain: the smallest expansion Y of
x_1..x_r whose images are all simple words.  Maps are right actions, so
compose(psi, phi) sends w to (w psi) phi.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence

from thompson.algebra.bases import ABasis, is_basis, simple_expansion, standard_basis
from thompson.algebra.homomorphism import evaluate
from thompson.algebra.words import Contraction, Signature, SimpleWord, Word, contract, descend, format_word
from thompson.exceptions import NotABasisError, SignatureError

logger = logging.getLogger(__name__)


class Automorphism:
    """An automorphism of V_{n,r} held as its canonical symbol (Y, Z, y -> z)."""

    __slots__ = ("sig", "domain", "images", "_mapping", "_inverse", "_hash")

    def __init__(self, sig: Signature, domain: ABasis, images: Sequence[Word]):
        if len(domain) != len(images):
            raise NotABasisError("domain and range have different sizes")
        self.sig = sig
        self.domain = domain
        self.images: tuple[Word, ...] = tuple(images)
        self._mapping: dict[SimpleWord, Word] = dict(zip(domain.leaves, self.images, strict=True))
        self._inverse: Automorphism | None = None
        self._hash: int | None = None

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.sig == other.sig and self.domain == other.domain and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.sig, self.domain.leaves, self.images))
        return self._hash

    def __repr__(self) -> str:
        return f"Automorphism({self.sig}, {len(self.domain)} leaves)"

    def __str__(self) -> str:
        return "\n".join(f"{format_word(y)} -> {format_word(z)}" for y, z in self.pairs())

    def pairs(self) -> list[tuple[SimpleWord, Word]]:
        return list(zip(self.domain.leaves, self.images, strict=True))

    @property
    def mapping(self) -> Mapping[SimpleWord, Word]:
        return self._mapping

    @property
    def range_leaves(self) -> tuple[SimpleWord, ...]:
        """The range basis Z, which is simple on a canonical symbol, in forest order."""
        return tuple(sorted(z for z in self.images if isinstance(z, SimpleWord)))

    # -- group operations ---------------------------------------------------

    def __call__(self, word: Word) -> Word:
        return apply(self, word)

    @property
    def inverse(self) -> Automorphism:
        if self._inverse is None:
            inverse = _canonical(self.sig, {z: y for y, z in self.pairs()})  # type: ignore[misc]
            inverse._inverse = self
            self._inverse = inverse
        return self._inverse

    def is_identity(self) -> bool:
        return self.domain == standard_basis(self.sig) and all(y == z for y, z in self.pairs())


def _canonical(sig: Signature, mapping: Mapping[SimpleWord, Word]) -> Automorphism:
    """Canonical symbol of a map defined on an A-basis."""
    table = dict(mapping)

    pending = [y for y, z in table.items() if isinstance(z, Contraction)]
    while pending:
        y = pending.pop()
        z = table.pop(y)
        assert isinstance(z, Contraction)
        for letter, child in enumerate(z.children, start=1):
            table[y.child(letter)] = child
            if isinstance(child, Contraction):
                pending.append(y.child(letter))

    changed = True
    while changed:
        changed = False
        parents = sorted({y.parent() for y in table if y.path}, key=lambda p: -len(p.path))
        for parent in parents:
            children = [parent.child(i) for i in sig.letters]
            if not all(child in table for child in children):
                continue
            merged = contract([table[child] for child in children])
            if isinstance(merged, SimpleWord):
                for child in children:
                    del table[child]
                table[parent] = merged
                changed = True

    domain = ABasis._trusted(sig, table)
    return Automorphism(sig, domain, [table[y] for y in domain.leaves])


def from_map(sig: Signature, pairs: Iterable[tuple[Word, Word]]) -> Automorphism:
    """Build the canonical automorphism sending each left word to the right one.

    Raises:
        NotABasisError: If either side is not a basis or the sides differ in size.
    """
    pairs = list(pairs)
    domain = [y for y, _ in pairs]
    range_ = [z for _, z in pairs]
    if not is_basis(sig, domain):
        raise NotABasisError("domain words do not form a basis")
    if not is_basis(sig, range_):
        raise NotABasisError("range words do not form a basis")

    table: dict[SimpleWord, Word] = {}
    pending = list(pairs)
    while pending:
        y, z = pending.pop()
        if isinstance(y, Contraction):
            pending.extend((child, descend(z, (letter,))) for letter, child in enumerate(y.children, start=1))
        else:
            table[y] = z
    return _canonical(sig, table)


def identity(sig: Signature) -> Automorphism:
    basis = standard_basis(sig)
    return Automorphism(sig, basis, basis.leaves)


def _check_same_signature(*autos: Automorphism) -> None:
    signatures = {psi.sig for psi in autos}
    if len(signatures) > 1:
        raise SignatureError(f"automorphisms over different algebras: {', '.join(map(str, signatures))}")


def apply(psi: Automorphism, word: Word) -> Word:
    """Standard form of the image w psi."""
    return evaluate(psi.sig, psi.mapping, word)


def compose(psi: Automorphism, phi: Automorphism) -> Automorphism:
    """psi followed by phi."""
    _check_same_signature(psi, phi)
    return _canonical(psi.sig, {y: apply(phi, z) for y, z in psi.pairs()})


def invert(psi: Automorphism) -> Automorphism:
    return psi.inverse


def power(psi: Automorphism, k: int) -> Automorphism:
    """psi^k by iterated composition; negative k goes through the inverse."""
    base = psi if k >= 0 else psi.inverse
    result = identity(psi.sig)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


def conjugate_by(psi: Automorphism, rho: Automorphism) -> Automorphism:
    """rho^-1 psi rho."""
    return compose(compose(rho.inverse, psi), rho)


def apply_power(psi: Automorphism, word: Word, k: int) -> Word:
    """w psi^k without building the symbol of psi^k."""
    step = psi if k >= 0 else psi.inverse
    for _ in range(abs(k)):
        word = apply(step, word)
    return word


def minimal_expansion_for(autos: Iterable[Automorphism], basis: ABasis) -> ABasis:
    """Minimal expansion Y of basis with Y psi inside basis<A> for every psi."""
    autos = list(autos)
    _check_same_signature(*autos)
    expansion = basis
    changed = True
    while changed:
        changed = False
        for leaf in expansion.leaves:
            if any(not basis.generates(apply(psi, leaf)) for psi in autos):
                expansion = simple_expansion(expansion, leaf)
                changed = True
                break
    return expansion


def free_product(sig: Signature, parts: Iterable[Mapping[SimpleWord, Word]]) -> Automorphism:
    """Automorphism assembled from maps on disjoint pieces of one A-basis.

    Raises:
        NotABasisError: If the pieces do not make up an A-basis or the images are not a basis.
    """
    table: dict[SimpleWord, Word] = {}
    for part in parts:
        overlap = table.keys() & part.keys()
        if overlap:
            raise NotABasisError(f"pieces overlap at {', '.join(map(str, sorted(overlap)))}")
        table.update(part)
    return from_map(sig, table.items())
