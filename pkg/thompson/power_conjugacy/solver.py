"""Power conjugacy: every (a, b) with psi^a conjugate to phi^b, up to the generating families."""

import itertools
import logging
import math
from collections.abc import Callable, Iterator, Sequence

from thompson.algebra.words import SimpleWord, Word
from thompson.automorphism.symbol import Automorphism, conjugate_by, free_product, power
from thompson.config import search_limits
from thompson.conjugacy.decomposition import decompose, lift_conjugator, rebase_to_standard_rank
from thompson.conjugacy.periodic import conjugate_periodic
from thompson.conjugacy.regular_infinite import conjugate_regular_infinite
from thompson.exceptions import NotPeriodicError, NotRegularInfiniteError, SearchLimitExceeded, SignatureError
from thompson.models import PowerPair, PowerPairSet
from thompson.orbits.qnf import order_of, quasi_normal_basis
from thompson.utils.logging_utils import log_decision, log_operation, log_search_progress

from .bounds import bounds
from .multipliers import power_multiplier_set

logger = logging.getLogger(__name__)

SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))

LiftedPair = tuple[int, int, dict[SimpleWord, Word]]


def sweep(a_hat: int, b_hat: int) -> Iterator[tuple[int, int]]:
    """Signed pairs with 1 <= |a| <= a_hat, 1 <= |b| <= b_hat by (|a|+|b|, |a|, sign pattern)."""
    magnitudes = sorted(itertools.product(range(1, a_hat + 1), range(1, b_hat + 1)), key=lambda ab: (sum(ab), ab[0]))
    for a, b in magnitudes:
        for sign_a, sign_b in SIGNS:
            yield sign_a * a, sign_b * b


def _check_signatures(psi: Automorphism, phi: Automorphism) -> None:
    if psi.sig != phi.sig:
        raise SignatureError(f"cannot compare {psi.sig} with {phi.sig}")


@log_operation("power_conjugate_regular_infinite")
def power_conjugate_regular_infinite(psi: Automorphism, phi: Automorphism) -> PowerPairSet:
    """All (a, b, rho) inside the bounds with rho^-1 psi^a rho = phi^b.

    Raises:
        NotRegularInfiniteError: If either input has periodic points.
        SearchLimitExceeded: If the sweep is longer than the step cap.
    """
    _check_signatures(psi, phi)
    qnf_psi, qnf_phi = quasi_normal_basis(psi), quasi_normal_basis(phi)
    if not (qnf_psi.is_regular_infinite and qnf_phi.is_regular_infinite):
        raise NotRegularInfiniteError("power conjugacy of regular infinite parts needs regular infinite inputs")

    a_hat, b_hat = bounds(qnf_psi.multipliers, qnf_phi.multipliers)
    limit = search_limits().max_steps
    pairs: list[PowerPair] = []
    for steps, (a, b) in enumerate(sweep(a_hat, b_hat), start=1):
        if steps > limit:
            raise SearchLimitExceeded("power sweep too long", procedure="power-conjugate", steps=limit)
        log_search_progress(logger, "power-conjugate", steps, limit)
        if power_multiplier_set(qnf_psi.multipliers, a) != power_multiplier_set(qnf_phi.multipliers, b):
            continue
        certificate = conjugate_regular_infinite(power(psi, a), power(phi, b))
        if certificate.conjugate:
            pairs.append(PowerPair(a=a, b=b, conjugator=certificate.conjugator))

    log_decision(logger, "power_conjugate_regular_infinite", "pairs", count=len(pairs), a_hat=a_hat, b_hat=b_hat)
    return PowerPairSet(pairs=pairs, bounds=(a_hat, b_hat))


@log_operation("power_conjugate_periodic")
def power_conjugate_periodic(psi: Automorphism, phi: Automorphism) -> PowerPairSet:
    """All (c, d, rho) with 1 <= c <= order(psi), 1 <= d <= order(phi) and rho^-1 psi^c rho = phi^d.

    Raises:
        NotPeriodicError: If either input has infinite order.
    """
    _check_signatures(psi, phi)
    k, m = order_of(psi), order_of(phi)
    if k is None or m is None:
        raise NotPeriodicError("power conjugacy of periodic parts needs periodic inputs")

    pairs: list[PowerPair] = []
    for c, d in itertools.product(range(1, k + 1), range(1, m + 1)):
        certificate = conjugate_periodic(power(psi, c), power(phi, d))
        if certificate.conjugate:
            pairs.append(PowerPair(a=c, b=d, conjugator=certificate.conjugator))
    log_decision(logger, "power_conjugate_periodic", "pairs", count=len(pairs), orders=(k, m))
    return PowerPairSet(pairs=pairs, periodic_orders=(k, m))


def _rebased_pairs(
    solve: Callable[[Automorphism, Automorphism], PowerPairSet],
    psi_part: Automorphism,
    phi_part: Automorphism,
    psi_leaves: Sequence[SimpleWord],
    phi_leaves: Sequence[SimpleWord],
) -> tuple[PowerPairSet, list[LiftedPair]]:
    """Solve a part on its standard rank and lift each conjugator back to the leaves of X_psi."""
    psi_hat, psi_dictionary = rebase_to_standard_rank(psi_part)
    phi_hat, phi_dictionary = rebase_to_standard_rank(phi_part)
    solved = solve(psi_hat, phi_hat)
    lifted = [
        (pair.a, pair.b, dict(lift_conjugator(pair.conjugator, psi_dictionary, phi_dictionary, psi_leaves, phi_leaves)))
        for pair in solved.pairs
    ]
    return solved, lifted


@log_operation("power_conjugate")
def power_conjugate(psi: Automorphism, phi: Automorphism) -> PowerPairSet:
    """Solve psi^a ~ phi^b in general.

    Purely periodic and purely regular infinite inputs go straight to the
    corresponding sub-solver.  Otherwise each regular infinite pair (alpha, beta)
    is combined with each periodic pair (c, d) through every g in 1..lcm(k, m)
    with alpha g = c mod k and beta g = d mod m.

    Raises:
        SignatureError: If the inputs act on different algebras.
        SearchLimitExceeded: If a scan or search runs out of steps.
    """
    _check_signatures(psi, phi)
    n = psi.sig.n
    left, right = decompose(psi), decompose(phi)

    for psi_leaves, phi_leaves in (
        (left.periodic_leaves, right.periodic_leaves),
        (left.infinite_leaves, right.infinite_leaves),
    ):
        if bool(psi_leaves) != bool(phi_leaves) or (len(psi_leaves) - len(phi_leaves)) % (n - 1):
            log_decision(logger, "power_conjugate", "none", gate="congruence")
            return PowerPairSet()

    if left.infinite is None:
        return power_conjugate_periodic(psi, phi)
    if left.periodic is None:
        return power_conjugate_regular_infinite(psi, phi)

    assert right.periodic is not None and right.infinite is not None
    infinite, infinite_pairs = _rebased_pairs(
        power_conjugate_regular_infinite, left.infinite, right.infinite, left.infinite_leaves, right.infinite_leaves
    )
    if not infinite_pairs:
        log_decision(logger, "power_conjugate", "none", gate="regular infinite part")
        return PowerPairSet(bounds=infinite.bounds)
    periodic, periodic_pairs = _rebased_pairs(
        power_conjugate_periodic, left.periodic, right.periodic, left.periodic_leaves, right.periodic_leaves
    )
    k, m = periodic.periodic_orders

    pairs: list[PowerPair] = []
    for (alpha, beta, rho_infinite), (c, d, rho_periodic) in itertools.product(infinite_pairs, periodic_pairs):
        for g in range(1, math.lcm(k, m) + 1):
            if (alpha * g - c) % k or (beta * g - d) % m:
                continue
            rho = free_product(psi.sig, [rho_periodic, rho_infinite])
            if conjugate_by(power(psi, alpha * g), rho) != power(phi, beta * g):
                raise AssertionError(f"combined conjugator fails for a={alpha * g}, b={beta * g}")
            pairs.append(PowerPair(a=alpha * g, b=beta * g, g=g, conjugator=rho))

    log_decision(logger, "power_conjugate", "pairs", count=len(pairs), orders=(k, m))
    return PowerPairSet(pairs=pairs, periodic_orders=(k, m), bounds=infinite.bounds)
