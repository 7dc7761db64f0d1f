"""
Feasible and ordinal bases and the two pivot operations of the Scarf loop.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple

from ..errors import InternalInconsistencyError, NoOrdinalStartError, PivotError
from .matrices import ColumnId, MatrixA, MatrixC
from .tableau import ExactTableau


@dataclass(frozen=True)
class FeasibleBasis:
    """
    A basis of matrix A with its exact tableau.

    The tableau holds B^-1 [A | rhs]; since the first n columns of A are the
    identity, its first n columns are B^-1 itself, which is what the
    lexicographic ratio test reads.
    """
    columns_by_row: Tuple[ColumnId, ...]
    tableau: ExactTableau

    @property
    def columns(self) -> FrozenSet[ColumnId]:
        return frozenset(self.columns_by_row)

    @property
    def basic_solution(self) -> Dict[ColumnId, Fraction]:
        return dict(zip(self.columns_by_row, self.tableau.rhs))

    def solution_vector(self, matrix_a: MatrixA) -> Tuple[Fraction, ...]:
        values = self.basic_solution
        return tuple(values.get(column, Fraction(0)) for column in matrix_a.columns)

    def lex_row(self, row: int, n: int) -> Tuple[Fraction, ...]:
        return (self.tableau.rhs[row], *self.tableau.rows[row][:n])

    def verify(self, matrix_a: MatrixA) -> None:
        """Check A.b = rhs and lexicographic positivity of every perturbed basic value."""
        b = self.solution_vector(matrix_a)
        for i, row in enumerate(matrix_a.entries):
            if sum((a * x for a, x in zip(row, b) if x), Fraction(0)) != matrix_a.rhs[i]:
                raise InternalInconsistencyError(f"basic solution violates row {matrix_a.rows[i]}")
        n = len(matrix_a.rows)
        for r in range(n):
            first = next((x for x in self.lex_row(r, n) if x != 0), Fraction(0))
            if first <= 0:
                raise InternalInconsistencyError(
                    f"basic column {self.columns_by_row[r]} is not lexicographically positive"
                )


@dataclass(frozen=True)
class OrdinalBasis:
    """n columns of C with the minimizing column and value of every row."""
    columns: Tuple[ColumnId, ...]
    row_minima: Tuple[Tuple[ColumnId, int], ...]

    @classmethod
    def from_columns(cls, matrix_c: MatrixC, columns) -> "OrdinalBasis":
        ordered = tuple(sorted(columns, key=lambda c: c.position))
        minima = []
        for i in range(len(matrix_c.rows)):
            best = min(ordered, key=lambda c: matrix_c.value(i, c))
            minima.append((best, matrix_c.value(i, best)))
        return cls(ordered, tuple(minima))

    @property
    def column_set(self) -> FrozenSet[ColumnId]:
        return frozenset(self.columns)

    def minimizer_row(self, column: ColumnId) -> int:
        return next(i for i, (c, _) in enumerate(self.row_minima) if c == column)

    def verify(self, matrix_c: MatrixC) -> None:
        """Each column minimizes exactly one row and no column of C beats all row minima."""
        for column in self.columns:
            count = sum(1 for c, _ in self.row_minima if c == column)
            if count != 1:
                raise InternalInconsistencyError(f"column {column} holds {count} row minimizers")
        for column in matrix_c.columns:
            if not any(u >= matrix_c.value(i, column) for i, (_, u) in enumerate(self.row_minima)):
                raise InternalInconsistencyError(f"column {column} dominates the row minima")


def _start_row(matrix_a: MatrixA, initial_row: Optional[str]) -> int:
    labels = [agent.label for agent in matrix_a.rows]
    assignment_columns = [c for c in matrix_a.columns if not c.is_agent]

    def admits_start(i: int) -> bool:
        return any(matrix_a.entries[i][c.position] == 0 for c in assignment_columns)

    preferred = 0
    if initial_row is not None:
        if initial_row not in labels:
            raise ValueError(f"Unknown initial row agent: {initial_row}")
        preferred = labels.index(initial_row)
    if admits_start(preferred):
        return preferred
    for i in range(len(labels)):
        if admits_start(i):
            return i
    raise NoOrdinalStartError("every acceptable assignment involves every agent")


def initial_bases(
    matrix_a: MatrixA, matrix_c: MatrixC, initial_row: Optional[str] = None
) -> Tuple[FeasibleBasis, OrdinalBasis, ColumnId]:
    """
    Step 0: the agent columns as feasible basis, and an ordinal basis of the
    other agents' columns plus the assignment column that is largest in the
    start row.

    Args:
        matrix_a: Constraint matrix
        matrix_c: Utility matrix with the same column order
        initial_row: Label of the start row agent, first firm when None

    Returns:
        (feasible basis, ordinal basis, the ordinal basis column outside the feasible basis)

    Raises:
        PivotError: If there are no assignment columns
        NoOrdinalStartError: If no agent row has an assignment column outside its coalition
    """
    n = len(matrix_a.rows)
    agent_columns = matrix_a.columns[:n]
    assignment_columns = matrix_a.columns[n:]
    if not assignment_columns:
        raise PivotError("no acceptable assignments")
    row = _start_row(matrix_a, initial_row)

    tableau = ExactTableau(matrix_a.entries, matrix_a.rhs, range(n))
    feasible = FeasibleBasis(tuple(agent_columns), tableau)

    entering = max(assignment_columns, key=lambda c: matrix_c.value(row, c))
    others = [c for c in agent_columns if c.position != row]
    ordinal = OrdinalBasis.from_columns(matrix_c, others + [entering])
    ordinal.verify(matrix_c)
    return feasible, ordinal, entering


def cardinal_pivot(
    matrix_a: MatrixA, basis: FeasibleBasis, col_in: ColumnId
) -> Tuple[FeasibleBasis, ColumnId]:
    """
    Bring col_in into the feasible basis.

    The leaving row minimizes (rhs_r, B^-1 row r) / d_r lexicographically over
    rows with positive entry d_r in the entering column, which is the ratio
    test under the perturbation rhs + (e, e^2, ..., e^n).

    Raises:
        PivotError: If col_in is already basic or has no positive entry
        InternalInconsistencyError: If the lexicographic minimum is not unique
    """
    if col_in in basis.columns:
        raise PivotError(f"column {col_in} is already in the feasible basis")
    n = len(matrix_a.rows)
    direction = basis.tableau.column(col_in.position)
    keyed = [
        (tuple(x / d for x in basis.lex_row(r, n)), r)
        for r, d in enumerate(direction)
        if d > 0
    ]
    if not keyed:
        raise PivotError(f"column {col_in} has no positive entry against the current basis")
    keyed.sort()
    if len(keyed) > 1 and keyed[0][0] == keyed[1][0]:
        raise InternalInconsistencyError(f"ratio test tie when bringing in {col_in}")
    row = keyed[0][1]

    tableau = basis.tableau.copy()
    tableau.pivot(row, col_in.position)
    columns = list(basis.columns_by_row)
    col_out = columns[row]
    columns[row] = col_in
    return FeasibleBasis(tuple(columns), tableau), col_out


def ordinal_pivot(
    matrix_c: MatrixC, basis: OrdinalBasis, col_out: ColumnId
) -> Tuple[OrdinalBasis, ColumnId]:
    """
    Remove col_out from the ordinal basis and bring in the replacement column.

    After removal exactly one remaining column minimizes two rows; i* is the
    row it minimized before. Among columns strictly above the new row minimum
    in every row other than i*, the one largest in row i* enters.

    Raises:
        PivotError: If col_out is not in the basis, the remainder is all agent
            columns, or no column qualifies
    """
    if col_out not in basis.column_set:
        raise PivotError(f"column {col_out} is not in the ordinal basis")
    remaining = [c for c in basis.columns if c != col_out]
    if all(c.is_agent for c in remaining):
        raise PivotError("remaining ordinal basis columns are all agent columns")

    freed_row = basis.minimizer_row(col_out)
    doubled = min(remaining, key=lambda c: matrix_c.value(freed_row, c))
    i_star = basis.minimizer_row(doubled)
    minima = [min(matrix_c.value(i, c) for c in remaining) for i in range(len(matrix_c.rows))]

    members = frozenset(remaining)
    candidates = [
        k for k in matrix_c.columns
        if k not in members and all(
            matrix_c.value(i, k) > minima[i] for i in range(len(matrix_c.rows)) if i != i_star
        )
    ]
    if not candidates:
        raise PivotError(f"no column can replace {col_out} in the ordinal basis")
    col_in = max(candidates, key=lambda k: matrix_c.value(i_star, k))
    result = OrdinalBasis.from_columns(matrix_c, remaining + [col_in])
    result.verify(matrix_c)
    return result, col_in
