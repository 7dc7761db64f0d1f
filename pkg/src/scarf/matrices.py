from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..market import (
    AgentId,
    FirmAssignment,
    Market,
    Situation,
    enumerate_acceptable_assignments,
    worker_situations,
)
from ..schedule import PiScheme

CANONICAL = "canonical"
REVERSED = "reversed"


@dataclass(frozen=True)
class ColumnId:
    """A column of the Scarf matrices: one per agent, then one per acceptable assignment."""
    position: int
    agent: Optional[AgentId] = None
    assignment: Optional[FirmAssignment] = None

    @property
    def is_agent(self) -> bool:
        return self.agent is not None

    @property
    def label(self) -> str:
        return self.agent.label if self.agent is not None else self.assignment.label

    def __str__(self) -> str:
        return self.label


def market_columns(m: Market) -> Tuple[ColumnId, ...]:
    agents = [ColumnId(pos, agent=agent) for pos, agent in enumerate(m.agents)]
    offset = len(agents)
    assignments = [
        ColumnId(offset + pos, assignment=assignment)
        for pos, assignment in enumerate(enumerate_acceptable_assignments(m))
    ]
    return tuple(agents + assignments)


@dataclass(frozen=True)
class MatrixA:
    rows: Tuple[AgentId, ...]
    columns: Tuple[ColumnId, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]
    rhs: Tuple[Fraction, ...]

    def column_vector(self, column: ColumnId) -> Tuple[Fraction, ...]:
        return tuple(row[column.position] for row in self.entries)


@dataclass(frozen=True)
class MatrixC:
    rows: Tuple[AgentId, ...]
    columns: Tuple[ColumnId, ...]
    entries: Tuple[Tuple[int, ...], ...]

    def value(self, row: int, column: ColumnId) -> int:
        return self.entries[row][column.position]

    def row_index(self, agent: AgentId) -> int:
        return self.rows.index(agent)


def build_matrix_a(m: Market, s: PiScheme) -> MatrixA:
    """Agent columns are unit vectors, assignment columns the intensity vectors, rhs the capacities."""
    columns = market_columns(m)
    entries = []
    for agent in m.agents:
        row = []
        for column in columns:
            if column.is_agent:
                row.append(Fraction(int(column.agent == agent)))
            else:
                row.append(s.coefficient(column.assignment, agent))
        entries.append(tuple(row))
    return MatrixA(
        rows=m.agents,
        columns=columns,
        entries=tuple(entries),
        rhs=tuple(s.capacity[agent] for agent in m.agents),
    )


def _rank_entry(m: Market, agent: AgentId, assignment: FirmAssignment, ladders: dict) -> Optional[int]:
    if agent.is_firm:
        if assignment.firm != agent:
            return None
        prefs = m.firm_prefs[agent]
        return len(prefs) - prefs.index(assignment)
    if agent not in assignment.workers:
        return None
    return ladders[agent].index(Situation(agent, assignment))


def build_matrix_c(m: Market, l_order: str = CANONICAL) -> MatrixC:
    """
    Integer utility matrix.

    Diagonal entries are 0; an agent's entries on assignments containing it are
    its ascending ranks (firms by list position, workers by the
    externality-augmented order with Empty at 0); all remaining entries are
    distinct values above every rank, agent columns above assignment columns.
    With the canonical order these large values decrease with column position,
    with the reversed order they increase.

    Args:
        m: A valid market
        l_order: "canonical" or "reversed"

    Returns:
        The matrix, columns in the same order as build_matrix_a
    """
    if l_order not in (CANONICAL, REVERSED):
        raise ValueError(f"Unknown l_order: {l_order}")
    columns = market_columns(m)
    n = len(m.agents)
    assignment_columns = [c for c in columns if not c.is_agent]
    k = len(assignment_columns)
    ladders = {w: worker_situations(m, w) for w in m.workers}

    ranks = {}
    for agent in m.agents:
        for column in assignment_columns:
            ranks[agent, column] = _rank_entry(m, agent, column.assignment, ladders)
    base = 1 + max((r for r in ranks.values() if r is not None), default=0)

    def large(column: ColumnId) -> int:
        if column.is_agent:
            step = n - column.position - 1 if l_order == CANONICAL else column.position
            return base + k + step
        p = column.position - n
        step = k - p - 1 if l_order == CANONICAL else p
        return base + step

    entries = []
    for agent in m.agents:
        row = []
        for column in columns:
            if column.is_agent:
                row.append(0 if column.agent == agent else large(column))
            else:
                rank = ranks[agent, column]
                row.append(rank if rank is not None else large(column))
        entries.append(tuple(row))
    return MatrixC(rows=m.agents, columns=columns, entries=tuple(entries))


def column_labels(columns: Sequence[ColumnId]) -> Tuple[str, ...]:
    return tuple(c.label for c in sorted(columns, key=lambda c: c.position))
