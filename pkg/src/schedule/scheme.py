from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Mapping, Tuple

from ..errors import SchemeValidationError, UnknownAssignmentError
from ..market import AgentId, FirmAssignment, Market, enumerate_acceptable_assignments


@dataclass(frozen=True)
class PiScheme:
    """Capacities per agent and intensity vectors per acceptable assignment."""
    capacity: Mapping[AgentId, Fraction]
    intensity: Mapping[FirmAssignment, Mapping[AgentId, Fraction]]

    @classmethod
    def checked(
        cls,
        m: Market,
        capacity: Mapping[AgentId, Fraction],
        intensity: Mapping[FirmAssignment, Mapping[AgentId, Fraction]],
    ) -> "PiScheme":
        """Build a scheme and raise SchemeValidationError unless it is valid for m."""
        scheme = cls(
            capacity={agent: Fraction(value) for agent, value in capacity.items()},
            intensity={
                assignment: {agent: Fraction(value) for agent, value in vector.items()}
                for assignment, vector in intensity.items()
            },
        )
        violations = validate_scheme(m, scheme)
        if violations:
            raise SchemeValidationError(violations)
        return scheme

    def coefficient(self, assignment: FirmAssignment, agent: AgentId) -> Fraction:
        return self.intensity[assignment].get(agent, Fraction(0))


def unit_scheme(m: Market) -> PiScheme:
    """Unit capacities and indicator intensities: plain schedule matchings."""
    return PiScheme(
        capacity={agent: Fraction(1) for agent in m.agents},
        intensity={
            assignment: {agent: Fraction(int(agent in assignment.agents)) for agent in m.agents}
            for assignment in enumerate_acceptable_assignments(m)
        },
    )


def validate_scheme(m: Market, s: PiScheme) -> List[str]:
    """Scheme invariants as data: dense positive capacities, intensities positive exactly on N(Y)."""
    violations = []
    agents = set(m.agents)
    for agent in m.agents:
        if agent not in s.capacity:
            violations.append(f"no capacity for agent {agent}")
        elif s.capacity[agent] <= 0:
            violations.append(f"capacity of {agent} is {s.capacity[agent]}, must be positive")
    for agent in s.capacity:
        if agent not in agents:
            violations.append(f"capacity for unknown agent {agent}")

    acceptable = enumerate_acceptable_assignments(m)
    for assignment in acceptable:
        vector = s.intensity.get(assignment)
        if vector is None:
            violations.append(f"no intensity for assignment {assignment} of {assignment.firm}")
            continue
        members = assignment.agents
        for agent in m.agents:
            if agent not in vector:
                violations.append(f"intensity of {assignment} has no entry for {agent}")
            elif agent in members and vector[agent] <= 0:
                violations.append(f"intensity of {assignment} must be positive for {agent}")
            elif agent not in members and vector[agent] != 0:
                violations.append(f"intensity of {assignment} must be zero for {agent}")
        for agent in vector:
            if agent not in agents:
                violations.append(f"intensity of {assignment} names unknown agent {agent}")
    known = set(acceptable)
    for assignment in s.intensity:
        if assignment not in known:
            violations.append(f"intensity for unacceptable assignment {assignment} of {assignment.firm}")
    return violations


@dataclass(frozen=True)
class PiScheduleMatching:
    """Nonnegative time shares over acceptable assignments, in the market's column order."""
    shares: Mapping[FirmAssignment, Fraction]

    @classmethod
    def for_market(cls, m: Market, shares: Mapping[FirmAssignment, Fraction]) -> "PiScheduleMatching":
        """
        Order shares by the acceptable-assignment enumeration, filling zeros.

        Raises:
            UnknownAssignmentError: If a share names an assignment that is not acceptable
        """
        columns = enumerate_acceptable_assignments(m)
        known = set(columns)
        for assignment in shares:
            if assignment not in known:
                raise UnknownAssignmentError(f"share for unknown assignment {assignment} of {assignment.firm}")
        return cls({y: Fraction(shares.get(y, 0)) for y in columns})

    @classmethod
    def from_vector(cls, m: Market, values: Iterable) -> "PiScheduleMatching":
        columns = enumerate_acceptable_assignments(m)
        values = [Fraction(v) for v in values]
        if len(values) != len(columns):
            raise UnknownAssignmentError(f"expected {len(columns)} shares, got {len(values)}")
        return cls(dict(zip(columns, values)))

    def share(self, assignment: FirmAssignment) -> Fraction:
        return self.shares.get(assignment, Fraction(0))

    @property
    def support(self) -> FrozenSet[FirmAssignment]:
        return frozenset(y for y, value in self.shares.items() if value > 0)

    @property
    def vector(self) -> Tuple[Fraction, ...]:
        return tuple(self.shares.values())

    @property
    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.shares.values())


def load(t: PiScheduleMatching, s: PiScheme, agent: AgentId) -> Fraction:
    """Capacity used by agent: sum of share times intensity."""
    return sum((value * s.coefficient(y, agent) for y, value in t.shares.items() if value), Fraction(0))


def is_feasible(t: PiScheduleMatching, s: PiScheme) -> bool:
    """
    Check every agent's capacity constraint exactly.

    Raises:
        UnknownAssignmentError: If t has a share for an assignment the scheme does not know
    """
    for assignment in t.shares:
        if assignment not in s.intensity:
            raise UnknownAssignmentError(f"share for unknown assignment {assignment} of {assignment.firm}")
    if any(value < 0 for value in t.shares.values()):
        return False
    return all(load(t, s, agent) <= capacity for agent, capacity in s.capacity.items())


def full_matched_agents(m: Market, s: PiScheme, t: PiScheduleMatching) -> FrozenSet[AgentId]:
    """Agents whose capacity constraint holds with equality."""
    return frozenset(agent for agent in m.agents if load(t, s, agent) == s.capacity[agent])
