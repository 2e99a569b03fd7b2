"""Component classification and the same-component test inside X<A>."""

from dataclasses import dataclass

from thompson.algebra.paths import strip_prefix_powers
from thompson.algebra.words import SimpleWord
from thompson.automorphism.symbol import Automorphism
from thompson.exceptions import NotABasisError
from thompson.models import OrbitAnswer
from thompson.orbits.forms import QnfData
from thompson.orbits.scanning import ScanState, scan_component, scan_direction
from thompson.orbits.types import ComponentType, LeafType


@dataclass(frozen=True, slots=True)
class Normalized:
    """u = base psi^offset, with base below a type B leaf and not below leaf Gamma (or u itself for type A)."""

    base: SimpleWord
    offset: int
    leaf: SimpleWord
    kind: LeafType


def normalize(psi: Automorphism, qnf: QnfData, word: SimpleWord) -> Normalized:
    """Move word along its X-component to a canonical element.

    Type C prefixes are replaced through their witness; powers of the
    characteristic multiplier are then stripped off the path.

    Raises:
        NotABasisError: If word is not in X<A>.
    """
    split = qnf.basis.split(word)
    if split is None:
        raise NotABasisError(f"{word} is not below {qnf.basis}")
    leaf, path = split
    kind = qnf.types[leaf]
    if kind is LeafType.PERIODIC:
        return Normalized(word, 0, leaf, kind)

    offset = 0
    if kind is LeafType.TRANSIENT:
        witness = qnf.witnesses[leaf]
        leaf, path, offset = witness.leaf, witness.path + path, -witness.power

    characteristic = qnf.characteristics[leaf]
    count, rest = strip_prefix_powers(path, characteristic.multiplier)
    offset += count * characteristic.power
    return Normalized(SimpleWord(leaf.generator, leaf.path + rest), offset, leaf, LeafType.CHARACTERISTIC)


def component_type(psi: Automorphism, qnf: QnfData, word: SimpleWord) -> ComponentType:
    """Type of the X-component of word, for word in X<A>."""
    normal = normalize(psi, qnf, word)
    if normal.kind is LeafType.PERIODIC:
        return ComponentType.COMPLETE_FINITE
    if qnf.characteristics[normal.leaf].power > 0:
        backward = scan_direction(psi.inverse, qnf.basis, normal.base)
        if backward.state is ScanState.LEAVES:
            return ComponentType.RIGHT_SEMI_INFINITE
        return ComponentType.COMPLETE_INFINITE
    forward = scan_direction(psi, qnf.basis, normal.base)
    if forward.state is ScanState.LEAVES:
        return ComponentType.LEFT_SEMI_INFINITE
    return ComponentType.COMPLETE_INFINITE


def component_test(psi: Automorphism, qnf: QnfData, u: SimpleWord, v: SimpleWord) -> OrbitAnswer:
    """Decide whether v = u psi^m with u and v in one X-component, and find m.

    Raises:
        NotABasisError: If u or v is not in X<A>.
    """
    if u == v:
        return OrbitAnswer.at(0)
    normal_u = normalize(psi, qnf, u)
    normal_v = normalize(psi, qnf, v)
    if (normal_u.kind is LeafType.PERIODIC) != (normal_v.kind is LeafType.PERIODIC):
        return OrbitAnswer.unrelated()

    if normal_u.kind is LeafType.PERIODIC:
        shift = scan_component(psi, qnf.basis, u).find(v)
        return OrbitAnswer.unrelated() if shift is None else OrbitAnswer.at(shift)

    # u = bu psi^ou and v = bv psi^ov
    shift = scan_component(psi, qnf.basis, normal_u.base).find(normal_v.base)
    if shift is not None:
        return OrbitAnswer.at(shift + normal_v.offset - normal_u.offset)
    shift = scan_component(psi, qnf.basis, normal_v.base).find(normal_u.base)
    if shift is not None:
        return OrbitAnswer.at(normal_v.offset - shift - normal_u.offset)
    return OrbitAnswer.unrelated()
