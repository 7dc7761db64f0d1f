"""
Command-line values that refer to a parsed market: matchings and schedule shares.
"""

import re
from fractions import Fraction

from ...errors import MarketFileError
from ...market import FirmAssignment, Market
from ...schedule import FullTimeMatching, PiScheduleMatching
from .parser import parse_assignment_labels, parse_fraction

SHARE = re.compile(r"^(\{[^{}]*\})=(\S+)$")


def _contracts(m: Market, labels):
    for label in labels:
        if not m.has_contract(label):
            raise MarketFileError(f"unknown contract {label}")
    return [m.contract(label) for label in labels]


def parse_matching(m: Market, text: str) -> FullTimeMatching:
    """
    Read "{z1,z2}", "z1,z2" or "empty".

    Raises:
        MarketFileError: If a contract is unknown
        InvalidMatchingError: If a worker gets two contracts
    """
    body = text.strip()
    if body in ("empty", "{}", ""):
        return FullTimeMatching()
    if body.startswith("{"):
        labels = parse_assignment_labels(body)
    else:
        labels = [label.strip() for label in body.split(",") if label.strip()]
    return FullTimeMatching(frozenset(_contracts(m, labels)))


def parse_shares(m: Market, text: str) -> PiScheduleMatching:
    """
    Read shares written as "{x5c}=1/2 {z1,z2}=1" (spaces or semicolons between entries).

    Raises:
        MarketFileError: On syntax errors or unknown contracts
        UnknownAssignmentError: If an assignment is not acceptable
    """
    shares = {}
    for token in re.split(r"[\s;]+", text.strip()):
        if not token:
            continue
        match = SHARE.match(token)
        if not match:
            raise MarketFileError(f"expected {{a,b}}=share, got {token!r}")
        contracts = _contracts(m, parse_assignment_labels(match.group(1)))
        firms = {c.firm for c in contracts}
        if len(firms) != 1:
            raise MarketFileError(f"{match.group(1)} mixes contracts of several firms")
        assignment = FirmAssignment(firms.pop(), frozenset(contracts))
        shares[assignment] = shares.get(assignment, Fraction(0)) + parse_fraction(match.group(2))
    return PiScheduleMatching.for_market(m, shares)
