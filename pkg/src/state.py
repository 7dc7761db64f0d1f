from typing import FrozenSet, List, Optional, Set, Tuple

from typing_extensions import TypedDict

from .scarf.bases import FeasibleBasis, OrdinalBasis
from .scarf.matrices import ColumnId, MatrixA, MatrixC
from .scarf.trace import ScarfStep

BasisPair = Tuple[FrozenSet[ColumnId], FrozenSet[ColumnId]]


class ScarfGraphState(TypedDict):
    matrix_a: MatrixA
    matrix_c: MatrixC
    initial_row: Optional[str]
    feasible_basis: Optional[FeasibleBasis]
    ordinal_basis: Optional[OrdinalBasis]
    initial_feasible: Tuple[ColumnId, ...]
    initial_ordinal: Tuple[ColumnId, ...]
    entering: Optional[ColumnId]
    leaving: Optional[ColumnId]
    steps: List[ScarfStep]
    visited: Set[BasisPair]
