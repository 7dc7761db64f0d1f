"""
Reader for the line-oriented market file format.

    # comment
    firms: f1 f2
    workers: w1 w2
    contract x f1 w1
    pref firm f1: {x,y} > {x} > empty
    pref worker w1: x > z > empty
    capacity: f1=5 f2=3 w1=2 w2=3
    intensity {x,y}: f1=4 w1=2 w2=2
    leaders: l1 l2
    follows: o1=l1 o2=l2

Intensity lines list the agents of the assignment; every other agent gets zero.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ...errors import MarketFileError, MarketValidationError
from ...market import FirmAssignment, Market, enumerate_acceptable_assignments, validate_market
from ...schedule import PiScheme, unit_scheme
from ...teams import LeaderFollowerStructure, structure_violations

ASSIGNMENT = re.compile(r"^\{([^{}]*)\}$")
PREF = re.compile(r"^pref\s+(firm|worker)\s+(\S+)\s*:(.*)$")
INTENSITY = re.compile(r"^intensity\s+(\{[^{}]*\})\s*:(.*)$")
SECTION = re.compile(r"^(firms|workers|capacity|leaders|follows)\s*:(.*)$")
EMPTY = "empty"


def parse_fraction(text: str, line: Optional[int] = None) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise MarketFileError(f"not an exact number: {text!r}", line) from None


def parse_assignment_labels(text: str, line: Optional[int] = None) -> List[str]:
    """Contract labels of "{a,b}"; raises MarketFileError for anything else."""
    match = ASSIGNMENT.match(text.strip())
    if not match:
        raise MarketFileError(f"expected an assignment like {{a,b}}, got {text.strip()!r}", line)
    labels = [label.strip() for label in match.group(1).split(",") if label.strip()]
    if not labels:
        raise MarketFileError("empty assignment in braces; write 'empty' instead", line)
    return labels


def _pairs(text: str, line: int) -> List[Tuple[str, str]]:
    pairs = []
    for token in text.split():
        if token.count("=") != 1:
            raise MarketFileError(f"expected name=value, got {token!r}", line)
        name, value = token.split("=")
        pairs.append((name, value))
    return pairs


def _ranked(text: str, line: int) -> List[str]:
    items = [item.strip() for item in text.split(">")]
    if items == [""]:
        return []
    if EMPTY in items:
        cut = items.index(EMPTY)
        if cut != len(items) - 1:
            raise MarketFileError("nothing may be ranked below 'empty'", line)
        items = items[:cut]
    if any(not item for item in items):
        raise MarketFileError("empty entry in preference list", line)
    return items


@dataclass
class MarketFileParser:
    """Collects the sections of one market file and resolves them into model objects."""
    text: str
    firms: Optional[List[str]] = None
    workers: Optional[List[str]] = None
    contracts: List[Tuple[str, str, str, int]] = field(default_factory=list)
    firm_prefs: Dict[str, Tuple[List[List[str]], int]] = field(default_factory=dict)
    worker_prefs: Dict[str, Tuple[List[str], int]] = field(default_factory=dict)
    capacity: List[Tuple[str, str, int]] = field(default_factory=list)
    intensity: List[Tuple[List[str], List[Tuple[str, str]], int]] = field(default_factory=list)
    leaders: Optional[Tuple[List[str], int]] = None
    follows: List[Tuple[str, str, int]] = field(default_factory=list)
    lines_seen: Dict[str, int] = field(default_factory=dict)
    last_line: int = 0

    def parse(self) -> Tuple[Market, PiScheme, Optional[LeaderFollowerStructure]]:
        for number, raw in enumerate(self.text.splitlines(), start=1):
            self.last_line = number
            content = raw.split("#", 1)[0].strip()
            if content:
                self._read_line(content, number)
        market = self._market()
        scheme = self._scheme(market)
        structure = self._structure(market)
        return market, scheme, structure

    def _once(self, section: str, line: int) -> None:
        if section in self.lines_seen:
            raise MarketFileError(f"section '{section}' repeats line {self.lines_seen[section]}", line)
        self.lines_seen[section] = line

    def _read_line(self, content: str, line: int) -> None:
        pref = PREF.match(content)
        if pref:
            side, agent, body = pref.groups()
            self._once(f"pref {side} {agent}", line)
            if side == "firm":
                ranked = [parse_assignment_labels(item, line) for item in _ranked(body, line)]
                self.firm_prefs[agent] = (ranked, line)
            else:
                self.worker_prefs[agent] = (_ranked(body, line), line)
            return
        intensity = INTENSITY.match(content)
        if intensity:
            labels = parse_assignment_labels(intensity.group(1), line)
            self.intensity.append((labels, _pairs(intensity.group(2), line), line))
            return
        if content.startswith("contract ") or content == "contract":
            parts = content.split()
            if len(parts) != 4:
                raise MarketFileError("expected: contract <label> <firm> <worker>", line)
            self.contracts.append((parts[1], parts[2], parts[3], line))
            return
        section = SECTION.match(content)
        if not section:
            raise MarketFileError(f"unrecognized line: {content!r}", line)
        name, body = section.groups()
        self._once(name, line)
        if name == "firms":
            self.firms = body.split()
        elif name == "workers":
            self.workers = body.split()
        elif name == "capacity":
            self.capacity = [(agent, value, line) for agent, value in _pairs(body, line)]
        elif name == "leaders":
            self.leaders = (body.split(), line)
        else:
            self.follows = [(follower, leader, line) for follower, leader in _pairs(body, line)]

    def _market(self) -> Market:
        if self.firms is None:
            raise MarketFileError("missing 'firms:' line")
        if self.workers is None:
            raise MarketFileError("missing 'workers:' line")
        firms, workers = set(self.firms), set(self.workers)
        owners: Dict[str, str] = {}
        for label, firm, worker, line in self.contracts:
            if firm not in firms:
                raise MarketFileError(f"contract {label} names unknown firm {firm}", line)
            if worker not in workers:
                raise MarketFileError(f"contract {label} names unknown worker {worker}", line)
            owners.setdefault(label, firm)
        for firm, (ranked, line) in self.firm_prefs.items():
            if firm not in firms:
                raise MarketFileError(f"preference list for unknown firm {firm}", line)
            for labels in ranked:
                for label in labels:
                    if label not in owners:
                        raise MarketFileError(f"unknown contract {label}", line)
                    if owners[label] != firm:
                        raise MarketFileError(f"contract {label} belongs to {owners[label]}, not {firm}", line)
        for worker, (ranked, line) in self.worker_prefs.items():
            if worker not in workers:
                raise MarketFileError(f"preference list for unknown worker {worker}", line)
            for label in ranked:
                if label not in owners:
                    raise MarketFileError(f"unknown contract {label}", line)

        market = Market.from_labels(
            firms=self.firms,
            workers=self.workers,
            contracts=[(label, firm, worker) for label, firm, worker, _ in self.contracts],
            firm_prefs={firm: ranked for firm, (ranked, _) in self.firm_prefs.items()},
            worker_prefs={worker: ranked for worker, (ranked, _) in self.worker_prefs.items()},
        )
        violations = validate_market(market)
        if violations:
            raise MarketValidationError(violations)
        return market

    def _scheme(self, m: Market) -> PiScheme:
        if not self.capacity and not self.intensity:
            return unit_scheme(m)
        capacity = {}
        for agent, value, line in self.capacity:
            if not m.has_agent(agent):
                raise MarketFileError(f"capacity for unknown agent {agent}", line)
            capacity[m.agent(agent)] = parse_fraction(value, line)

        acceptable = set(enumerate_acceptable_assignments(m))
        intensity = {}
        for labels, pairs, line in self.intensity:
            missing = [label for label in labels if not m.has_contract(label)]
            if missing:
                raise MarketFileError(f"unknown contract {missing[0]}", line)
            contracts = frozenset(m.contract(label) for label in labels)
            owners = {c.firm for c in contracts}
            if len(owners) != 1:
                raise MarketFileError("intensity assignment mixes contracts of several firms", line)
            assignment = FirmAssignment(owners.pop(), contracts)
            if assignment not in acceptable:
                raise MarketFileError(
                    f"intensity for unacceptable assignment {assignment.label} of {assignment.firm}", line
                )
            if assignment in intensity:
                raise MarketFileError(f"second intensity line for {assignment.label}", line)
            vector = {agent: Fraction(0) for agent in m.agents}
            named = set()
            for agent, value in pairs:
                if not m.has_agent(agent):
                    raise MarketFileError(f"intensity names unknown agent {agent}", line)
                vector[m.agent(agent)] = parse_fraction(value, line)
                named.add(m.agent(agent))
            absent = [a.label for a in m.agents if a in assignment.agents and a not in named]
            if absent:
                raise MarketFileError(f"intensity of {assignment.label} has no entry for {', '.join(absent)}", line)
            intensity[assignment] = vector
        uncovered = [a.label for a in m.agents if a not in capacity]
        if uncovered:
            raise MarketFileError(f"no capacity for {', '.join(uncovered)}", self.last_line)
        missing = [y for y in enumerate_acceptable_assignments(m) if y not in intensity]
        if missing:
            raise MarketFileError(f"no intensity line for {missing[0].label} of {missing[0].firm}", self.last_line)
        return PiScheme.checked(m, capacity, intensity)

    def _structure(self, m: Market) -> Optional[LeaderFollowerStructure]:
        if self.leaders is None and not self.follows:
            return None
        leaders, line = self.leaders if self.leaders is not None else ([], self.follows[0][2])
        for follower, leader, follows_line in self.follows:
            for label in (follower, leader):
                if not m.has_agent(label) or m.agent(label).is_firm:
                    raise MarketFileError(f"unknown worker {label} in follows", follows_line)
        for label in leaders:
            if not m.has_agent(label) or m.agent(label).is_firm:
                raise MarketFileError(f"unknown worker {label} in leaders", line)
        structure = LeaderFollowerStructure.from_labels(
            m, leaders, {follower: leader for follower, leader, _ in self.follows}
        )
        violations = structure_violations(m, structure)
        if violations:
            raise MarketValidationError(violations)
        return structure


def parse_market(text: str) -> Tuple[Market, PiScheme, Optional[LeaderFollowerStructure]]:
    """
    Parse a market file.

    Returns:
        (market, scheme, leader-follower structure); the unit scheme when the
        file has no capacity or intensity lines, no structure when it has no
        leaders or follows lines

    Raises:
        MarketFileError: Syntax errors and unresolved names, with line numbers
        MarketValidationError: If the market or its structure is invalid
        SchemeValidationError: If the scheme is invalid
    """
    return MarketFileParser(text).parse()


def load_market_file(path: str) -> Tuple[Market, PiScheme, Optional[LeaderFollowerStructure]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise MarketFileError(f"cannot read {path}: {e.strerror}") from e
    return parse_market(text)
