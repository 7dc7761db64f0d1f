from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable

from ..errors import InvalidMatchingError
from ..market import AgentId, Contract, FirmAssignment, Situation


@dataclass(frozen=True)
class FullTimeMatching:
    """A set of contracts giving every worker at most one contract."""
    contracts: FrozenSet[Contract] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "contracts", frozenset(self.contracts))
        counts = Counter(c.worker for c in self.contracts)
        doubled = sorted(w.label for w, count in counts.items() if count > 1)
        if doubled:
            raise InvalidMatchingError(f"workers with more than one contract: {', '.join(doubled)}")

    @classmethod
    def from_assignments(cls, assignments: Iterable[FirmAssignment]) -> "FullTimeMatching":
        return cls(frozenset(c for assignment in assignments for c in assignment.contracts))

    def assignment(self, firm: AgentId) -> FirmAssignment:
        """M_f, possibly empty."""
        return FirmAssignment(firm, frozenset(c for c in self.contracts if c.firm == firm))

    def contract_of(self, worker: AgentId):
        for contract in self.contracts:
            if contract.worker == worker:
                return contract
        return None

    def situation(self, worker: AgentId) -> Situation:
        """M(w): the worker's employer assignment, or the empty situation."""
        contract = self.contract_of(worker)
        if contract is None:
            return Situation(worker)
        return Situation(worker, self.assignment(contract.firm))

    @property
    def labels(self):
        return tuple(sorted(c.label for c in self.contracts))

    @property
    def label(self) -> str:
        return "{" + ",".join(self.labels) + "}" if self.contracts else "empty"

    def __str__(self) -> str:
        return self.label
