"""Extending a map on an A-basis to an Omega-homomorphism."""

from collections.abc import Mapping

from thompson.algebra.words import Contraction, Signature, SimpleWord, Word, contract, descend
from thompson.exceptions import NotABasisError


def evaluate(sig: Signature, images: Mapping[SimpleWord, Word], word: Word) -> Word:
    """Image of word under the homomorphism sending each key of images to its value.

    The keys must be an A-basis of the subalgebra containing word: every simple
    word met is either below a key (yΔ maps to (image of y)Δ) or a proper prefix
    of keys (expanded as wα_1 ... wα_n λ).

    Raises:
        NotABasisError: If word reaches a simple word that is neither.
    """
    if isinstance(word, Contraction):
        return contract([evaluate(sig, images, child) for child in word.children])

    for prefix in word.prefixes():
        image = images.get(prefix)
        if image is not None:
            return descend(image, word.path[len(prefix.path) :])

    if not _is_proper_prefix_of_keys(images, word):
        raise NotABasisError(f"{word} is not generated by the given basis")
    return contract([evaluate(sig, images, word.child(i)) for i in sig.letters])


def _is_proper_prefix_of_keys(images: Mapping[SimpleWord, Word], word: SimpleWord) -> bool:
    depth = len(word.path)
    return any(
        key.generator == word.generator and len(key.path) > depth and key.path[:depth] == word.path for key in images
    )
