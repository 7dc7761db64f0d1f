"""
Exact pivoting kernel.

A tableau stores B^-1 [M | rhs] for a basis B of the constraint matrix M,
one row per constraint, in Fractions. Cardinal pivots of the Scarf loop and
the two-phase simplex used by the concavity checks both run on it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import InternalInconsistencyError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class ExactTableau:
    def __init__(
        self,
        rows: Sequence[Sequence[Fraction]],
        rhs: Sequence[Fraction],
        basis: Sequence[int],
        width: Optional[int] = None,
    ):
        self.rows: List[List[Fraction]] = [[Fraction(x) for x in row] for row in rows]
        self.rhs: List[Fraction] = [Fraction(x) for x in rhs]
        self.basis: List[int] = list(basis)
        self.width = len(self.rows[0]) if self.rows else (width or 0)

    def copy(self) -> "ExactTableau":
        return ExactTableau(self.rows, self.rhs, self.basis, self.width)

    def column(self, col: int) -> List[Fraction]:
        return [row[col] for row in self.rows]

    def pivot(self, row: int, col: int) -> None:
        """Make column col the unit vector of row row by Gauss-Jordan elimination."""
        pivot_row = self.rows[row]
        p = pivot_row[col]
        if p == 0:
            raise InternalInconsistencyError(f"pivot on zero entry at row {row}, column {col}")
        if p != 1:
            self.rows[row] = pivot_row = [x / p for x in pivot_row]
            self.rhs[row] /= p
        for r, current in enumerate(self.rows):
            if r == row:
                continue
            factor = current[col]
            if factor:
                self.rows[r] = [a - factor * b for a, b in zip(current, pivot_row)]
                self.rhs[r] -= factor * self.rhs[row]
        self.basis[row] = col

    def drop_row(self, row: int) -> None:
        del self.rows[row]
        del self.rhs[row]
        del self.basis[row]

    def truncate(self, width: int) -> None:
        self.rows = [row[:width] for row in self.rows]
        self.width = width


@dataclass
class LinearProgramResult:
    status: str
    value: Optional[Fraction] = None
    solution: List[Fraction] = field(default_factory=list)

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def _reduced_cost(tableau: ExactTableau, objective: Sequence[Fraction], col: int) -> Fraction:
    return objective[col] - sum(
        (objective[b] * row[col] for b, row in zip(tableau.basis, tableau.rows) if objective[b]),
        Fraction(0),
    )


def _run_simplex(tableau: ExactTableau, objective: Sequence[Fraction]) -> str:
    """Maximize with Bland's rule from the tableau's current feasible basis."""
    while True:
        in_basis = set(tableau.basis)
        entering = next(
            (j for j in range(tableau.width) if j not in in_basis and _reduced_cost(tableau, objective, j) > 0),
            None,
        )
        if entering is None:
            return OPTIMAL
        best = None
        for r, row in enumerate(tableau.rows):
            if row[entering] > 0:
                ratio = tableau.rhs[r] / row[entering]
                if best is None or (ratio, tableau.basis[r]) < best[0]:
                    best = ((ratio, tableau.basis[r]), r)
        if best is None:
            return UNBOUNDED
        tableau.pivot(best[1], entering)


def _unit_columns(rows: List[List[Fraction]]) -> List[Optional[int]]:
    """For each row, a column that is the unit vector of that row, if any."""
    found: List[Optional[int]] = [None] * len(rows)
    used = set()
    for j in range(len(rows[0]) if rows else 0):
        hits = [r for r, row in enumerate(rows) if row[j] != 0]
        if len(hits) == 1 and rows[hits[0]][j] == 1 and found[hits[0]] is None and j not in used:
            found[hits[0]] = j
            used.add(j)
    return found


def maximize(
    objective: Sequence[Fraction],
    constraints: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> LinearProgramResult:
    """
    Maximize objective . x subject to constraints . x = rhs and x >= 0, exactly.

    Two-phase simplex with Bland's rule. Rows whose rhs is negative are negated;
    rows already carrying a unit column start with it as basic variable, the others
    get an artificial one for phase one.

    Args:
        objective: One coefficient per variable
        constraints: Equality rows, one coefficient per variable
        rhs: Right-hand side per row

    Returns:
        LinearProgramResult with status optimal, infeasible or unbounded
    """
    width = len(objective)
    rows = [[Fraction(x) for x in row] for row in constraints]
    values = [Fraction(x) for x in rhs]
    for r, value in enumerate(values):
        if value < 0:
            rows[r] = [-x for x in rows[r]]
            values[r] = -value

    units = _unit_columns(rows)
    artificial = [r for r, unit in enumerate(units) if unit is None]
    basis = []
    for r, row in enumerate(rows):
        row.extend(Fraction(int(r == a)) for a in artificial)
    for r, unit in enumerate(units):
        basis.append(unit if unit is not None else width + artificial.index(r))
    tableau = ExactTableau(rows, values, basis, width + len(artificial))

    if artificial:
        phase_one = [Fraction(0)] * width + [Fraction(-1)] * len(artificial)
        _run_simplex(tableau, phase_one)
        if any(tableau.rhs[r] != 0 for r, b in enumerate(tableau.basis) if b >= width):
            return LinearProgramResult(INFEASIBLE)
        r = 0
        while r < len(tableau.rows):
            if tableau.basis[r] >= width:
                replacement = next((j for j in range(width) if tableau.rows[r][j] != 0), None)
                if replacement is None:
                    tableau.drop_row(r)
                    continue
                tableau.pivot(r, replacement)
            r += 1
        tableau.truncate(width)

    goal = [Fraction(x) for x in objective]
    if _run_simplex(tableau, goal) == UNBOUNDED:
        return LinearProgramResult(UNBOUNDED)
    solution = [Fraction(0)] * width
    for r, b in enumerate(tableau.basis):
        solution[b] = tableau.rhs[r]
    value = sum((c * x for c, x in zip(goal, solution)), Fraction(0))
    return LinearProgramResult(OPTIMAL, value, solution)
