"""
Exhaustive oracles over full-time matchings: enumeration, stable sets and dominating matchings.
"""

from itertools import product
from math import prod
from typing import Iterator, List, Optional

from ..config.solver_configs import EnumerationLimits
from ..errors import ResourceBoundError
from ..market import FirmAssignment, Market, Ordering, Situation, firm_compare, worker_compare_ext
from ..schedule import FullTimeMatching, WorstSituationProfile, is_stable_matching


def _worker_options(m: Market, worker) -> list:
    return [None, *m.contracts_of_worker(worker)]


def enumerate_matchings(m: Market, limits: Optional[EnumerationLimits] = None) -> Iterator[FullTimeMatching]:
    """
    Every matching, as the product over workers of (no contract, own contracts in declaration order).

    Raises:
        ResourceBoundError: If the product exceeds limits.max_matchings
    """
    limits = limits or EnumerationLimits()
    options = [_worker_options(m, w) for w in m.workers]
    size = prod(len(o) for o in options)
    if size > limits.max_matchings:
        raise ResourceBoundError(f"{size} matchings to enumerate, bound is {limits.max_matchings}")
    for choice in product(*options):
        yield FullTimeMatching(frozenset(c for c in choice if c is not None))


def enumeration_key(m: Market, matching: FullTimeMatching) -> tuple:
    """Position of a matching in enumerate_matchings order."""
    return tuple(_worker_options(m, w).index(matching.contract_of(w)) for w in m.workers)


def brute_force_stable_set(m: Market, limits: Optional[EnumerationLimits] = None) -> List[FullTimeMatching]:
    """All stable matchings, in enumeration order."""
    return [matching for matching in enumerate_matchings(m, limits) if is_stable_matching(m, matching, limits)]


def iter_dominating_matchings(
    m: Market, profile: WorstSituationProfile, limits: Optional[EnumerationLimits] = None
) -> Iterator[FullTimeMatching]:
    """
    Yield every matching dominating the profile.

    A dominating matching gives each firm a listed assignment no worse than its
    worst one, or nothing when that worst one is empty, so the search runs over
    firms' listed assignments and skips worker clashes.

    Raises:
        ResourceBoundError: If the candidate product exceeds limits.max_matchings
    """
    limits = limits or EnumerationLimits()
    options = []
    for firm in m.firms:
        floor = profile.firms[firm]
        choices = [
            y for y in m.firm_prefs.get(firm, ())
            if firm_compare(m, firm, y, floor) is not Ordering.LESS
            and all(
                worker_compare_ext(m, w, Situation(w, y), profile.workers[w]) is not Ordering.LESS
                for w in y.workers
            )
        ]
        if floor.is_empty:
            choices.append(FirmAssignment.empty(firm))
        options.append(choices)
    size = prod(len(c) for c in options)
    if size > limits.max_matchings:
        raise ResourceBoundError(f"{size} candidate matchings, bound is {limits.max_matchings}")
    needed = frozenset(w for w in m.workers if not profile.workers[w].is_empty)

    def extend(i: int, used: frozenset, chosen: list) -> Iterator[FullTimeMatching]:
        if i == len(options):
            if needed <= used:
                yield FullTimeMatching.from_assignments(chosen)
            return
        for assignment in options[i]:
            if assignment.workers & used:
                continue
            yield from extend(i + 1, used | assignment.workers, chosen + [assignment])

    yield from extend(0, frozenset(), [])


def find_dominating_matching(
    m: Market, profile: WorstSituationProfile, limits: Optional[EnumerationLimits] = None
) -> Optional[FullTimeMatching]:
    """First dominating matching in enumerate_matchings order, or None."""
    return min(
        iter_dominating_matchings(m, profile, limits),
        key=lambda matching: enumeration_key(m, matching),
        default=None,
    )


def has_dominating_matching(
    m: Market, profile: WorstSituationProfile, limits: Optional[EnumerationLimits] = None
) -> bool:
    return next(iter_dominating_matchings(m, profile, limits), None) is not None
