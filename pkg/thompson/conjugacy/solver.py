"""The complete conjugacy test for G_{n,r}."""

import logging
from collections.abc import Callable, Sequence

from thompson.algebra.words import SimpleWord, Word
from thompson.automorphism.symbol import Automorphism, conjugate_by, free_product
from thompson.exceptions import SignatureError
from thompson.models import ConjugacyCertificate
from thompson.utils.logging_utils import log_decision, log_operation

from .decomposition import decompose, lift_conjugator, rebase_to_standard_rank
from .periodic import conjugate_periodic
from .regular_infinite import conjugate_regular_infinite

logger = logging.getLogger(__name__)

PartSolver = Callable[[Automorphism, Automorphism], ConjugacyCertificate]


def _solve_part(
    solver: PartSolver,
    psi_part: Automorphism,
    phi_part: Automorphism,
    psi_leaves: Sequence[SimpleWord],
    phi_leaves: Sequence[SimpleWord],
) -> tuple[ConjugacyCertificate, list[tuple[SimpleWord, Word]]]:
    """Rebase both parts to the same rank, solve there and lift the conjugator back."""
    psi_hat, psi_dictionary = rebase_to_standard_rank(psi_part)
    phi_hat, phi_dictionary = rebase_to_standard_rank(phi_part)
    certificate = solver(psi_hat, phi_hat)
    if not certificate.conjugate:
        return certificate, []
    pairs = lift_conjugator(certificate.conjugator, psi_dictionary, phi_dictionary, psi_leaves, phi_leaves)
    return certificate, pairs


@log_operation("conjugate")
def conjugate(psi: Automorphism, phi: Automorphism) -> ConjugacyCertificate:
    """Decide whether rho^-1 psi rho = phi for some rho, and find one.

    Raises:
        SignatureError: If the inputs act on different algebras.
        SearchLimitExceeded: If a scan or the conjugator search runs out of steps.
    """
    if psi.sig != phi.sig:
        raise SignatureError(f"cannot compare {psi.sig} with {phi.sig}")
    n = psi.sig.n
    left, right = decompose(psi), decompose(phi)

    for psi_leaves, phi_leaves in (
        (left.periodic_leaves, right.periodic_leaves),
        (left.infinite_leaves, right.infinite_leaves),
    ):
        if bool(psi_leaves) != bool(phi_leaves) or (len(psi_leaves) - len(phi_leaves)) % (n - 1):
            log_decision(logger, "conjugate", "not-conjugate", gate="congruence")
            return ConjugacyCertificate.refuted("congruence")

    pieces: list[dict[SimpleWord, Word]] = []
    if left.periodic is not None and right.periodic is not None:
        certificate, pairs = _solve_part(
            conjugate_periodic, left.periodic, right.periodic, left.periodic_leaves, right.periodic_leaves
        )
        if not certificate.conjugate:
            return certificate
        pieces.append(dict(pairs))
    if left.infinite is not None and right.infinite is not None:
        certificate, pairs = _solve_part(
            conjugate_regular_infinite, left.infinite, right.infinite, left.infinite_leaves, right.infinite_leaves
        )
        if not certificate.conjugate:
            return certificate
        pieces.append(dict(pairs))

    rho = free_product(psi.sig, pieces)
    if conjugate_by(psi, rho) != phi:
        raise AssertionError("stitched conjugator does not conjugate psi to phi")
    log_decision(logger, "conjugate", "conjugate", parts=len(pieces))
    return ConjugacyCertificate.witnessed(rho)
