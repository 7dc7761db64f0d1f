from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .matrices import ColumnId, column_labels


@dataclass(frozen=True)
class ScarfStep:
    index: int
    cardinal_in: ColumnId
    cardinal_out: ColumnId
    feasible_basis: Tuple[ColumnId, ...]
    ordinal_basis: Tuple[ColumnId, ...]
    ordinal_out: Optional[ColumnId] = None
    ordinal_in: Optional[ColumnId] = None

    def format(self) -> str:
        parts = [f"step {self.index}", f"pivotA in={self.cardinal_in} out={self.cardinal_out}"]
        if self.ordinal_out is not None:
            parts.append(f"pivotC out={self.ordinal_out} in={self.ordinal_in}")
        parts.append("A=[" + " ".join(column_labels(self.feasible_basis)) + "]")
        parts.append("C=[" + " ".join(column_labels(self.ordinal_basis)) + "]")
        return " ".join(parts)


@dataclass
class ScarfTrace:
    """Every pivot of one Scarf run, starting from the Step 0 bases."""
    initial_feasible: Tuple[ColumnId, ...] = ()
    initial_ordinal: Tuple[ColumnId, ...] = ()
    steps: List[ScarfStep] = field(default_factory=list)
    columns: Tuple[ColumnId, ...] = ()
    solution: Tuple[Fraction, ...] = ()

    @property
    def final_feasible(self) -> Tuple[ColumnId, ...]:
        return self.steps[-1].feasible_basis if self.steps else self.initial_feasible

    def lines(self) -> List[str]:
        if not self.initial_feasible:
            return []
        header = (
            "step 0 A=[" + " ".join(column_labels(self.initial_feasible)) + "] "
            "C=[" + " ".join(column_labels(self.initial_ordinal)) + "]"
        )
        return [header] + [step.format() for step in self.steps]


def format_trace(trace: ScarfTrace) -> str:
    return "\n".join(trace.lines())
