from dataclasses import dataclass, field
from enum import Enum, IntEnum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from ..errors import MarketValidationError


class Role(str, Enum):
    FIRM = "firm"
    WORKER = "worker"


class Ordering(IntEnum):
    """Result of a three-way preference comparison."""
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, left, right) -> "Ordering":
        if left > right:
            return cls.GREATER
        if left < right:
            return cls.LESS
        return cls.EQUAL


@dataclass(frozen=True, order=True)
class AgentId:
    role: Role
    index: int
    label: str

    @property
    def is_firm(self) -> bool:
        return self.role is Role.FIRM

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Contract:
    label: str
    firm: AgentId
    worker: AgentId

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class FirmAssignment:
    """A set of one firm's contracts. The empty set stands for the empty assignment."""
    firm: AgentId
    contracts: FrozenSet[Contract] = field(default_factory=frozenset)

    @classmethod
    def empty(cls, firm: AgentId) -> "FirmAssignment":
        return cls(firm, frozenset())

    @property
    def is_empty(self) -> bool:
        return not self.contracts

    @property
    def workers(self) -> FrozenSet[AgentId]:
        return frozenset(c.worker for c in self.contracts)

    @property
    def agents(self) -> FrozenSet[AgentId]:
        """N(Y): the firm together with the workers of the assignment."""
        if self.is_empty:
            return frozenset()
        return self.workers | {self.firm}

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(sorted(c.label for c in self.contracts))

    @property
    def label(self) -> str:
        return "{" + ",".join(self.labels) + "}" if self.contracts else "empty"

    def contract_of(self, worker: AgentId) -> Optional[Contract]:
        for contract in self.contracts:
            if contract.worker == worker:
                return contract
        return None

    def violations(self) -> list[str]:
        problems = []
        for contract in sorted(self.contracts, key=lambda c: c.label):
            if contract.firm != self.firm:
                problems.append(
                    f"assignment {self.label} of {self.firm} holds contract {contract.label} of {contract.firm}"
                )
        workers = [c.worker for c in self.contracts]
        for worker in sorted(set(workers)):
            if workers.count(worker) > 1:
                problems.append(
                    f"assignment {self.label} of {self.firm} holds {workers.count(worker)} contracts of worker {worker}"
                )
        return problems

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Situation:
    """A worker's place in a firm assignment, or the empty situation when assignment is None."""
    worker: AgentId
    assignment: Optional[FirmAssignment] = None

    def __post_init__(self):
        if self.assignment is not None and self.assignment.is_empty:
            object.__setattr__(self, "assignment", None)

    @property
    def is_empty(self) -> bool:
        return self.assignment is None

    @property
    def own_contract(self) -> Optional[Contract]:
        if self.assignment is None:
            return None
        return self.assignment.contract_of(self.worker)

    @property
    def label(self) -> str:
        if self.assignment is None:
            return "empty"
        return f"{self.assignment.label}@{self.assignment.firm}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Market:
    """
    A many-to-one matching market with contracts.

    Firm preferences are explicit lists of acceptable assignments (best first);
    worker preferences rank the worker's own contracts (best first). Use
    validate_market to check the invariants.
    """
    firms: Tuple[AgentId, ...]
    workers: Tuple[AgentId, ...]
    contracts: Tuple[Contract, ...]
    firm_prefs: Mapping[AgentId, Tuple[FirmAssignment, ...]]
    worker_prefs: Mapping[AgentId, Tuple[Contract, ...]]

    @classmethod
    def from_labels(
        cls,
        firms: Sequence[str],
        workers: Sequence[str],
        contracts: Iterable[Tuple[str, str, str]],
        firm_prefs: Mapping[str, Sequence[Sequence[str]]],
        worker_prefs: Mapping[str, Sequence[str]],
    ) -> "Market":
        """
        Build a market from plain labels.

        Args:
            firms: Firm labels in declaration order
            workers: Worker labels in declaration order
            contracts: (label, firm label, worker label) triples
            firm_prefs: Per firm label, acceptable assignments best first, each a list of contract labels
            worker_prefs: Per worker label, contract labels best first

        Returns:
            The market (not yet validated)

        Raises:
            MarketValidationError: If a label refers to an undeclared agent or contract
        """
        firm_ids = {label: AgentId(Role.FIRM, i, label) for i, label in enumerate(firms)}
        worker_ids = {label: AgentId(Role.WORKER, i, label) for i, label in enumerate(workers)}
        problems = []
        built: Dict[str, Contract] = {}
        ordered = []
        for label, firm, worker in contracts:
            if firm not in firm_ids:
                problems.append(f"contract {label} names unknown firm {firm}")
                continue
            if worker not in worker_ids:
                problems.append(f"contract {label} names unknown worker {worker}")
                continue
            contract = Contract(label, firm_ids[firm], worker_ids[worker])
            built.setdefault(label, contract)
            ordered.append(contract)

        def lookup(label: str) -> Optional[Contract]:
            if label not in built:
                problems.append(f"unknown contract {label}")
                return None
            return built[label]

        f_prefs = {}
        for firm_label in firms:
            firm = firm_ids[firm_label]
            assignments = []
            for labels in firm_prefs.get(firm_label, ()):
                members = [lookup(label) for label in labels]
                assignments.append(FirmAssignment(firm, frozenset(c for c in members if c)))
            f_prefs[firm] = tuple(assignments)
        for firm_label in firm_prefs:
            if firm_label not in firm_ids:
                problems.append(f"preference list for unknown firm {firm_label}")

        w_prefs = {}
        for worker_label in workers:
            ranked = [lookup(label) for label in worker_prefs.get(worker_label, ())]
            w_prefs[worker_ids[worker_label]] = tuple(c for c in ranked if c)
        for worker_label in worker_prefs:
            if worker_label not in worker_ids:
                problems.append(f"preference list for unknown worker {worker_label}")

        if problems:
            raise MarketValidationError(problems)
        return cls(
            firms=tuple(firm_ids.values()),
            workers=tuple(worker_ids.values()),
            contracts=tuple(ordered),
            firm_prefs=f_prefs,
            worker_prefs=w_prefs,
        )

    @cached_property
    def agents(self) -> Tuple[AgentId, ...]:
        """N in column order: firms first, then workers."""
        return self.firms + self.workers

    @cached_property
    def _agents_by_label(self) -> Dict[str, AgentId]:
        return {agent.label: agent for agent in self.agents}

    @cached_property
    def _contracts_by_label(self) -> Dict[str, Contract]:
        return {contract.label: contract for contract in self.contracts}

    def agent(self, label: str) -> AgentId:
        return self._agents_by_label[label]

    def has_agent(self, label: str) -> bool:
        return label in self._agents_by_label

    def contract(self, label: str) -> Contract:
        return self._contracts_by_label[label]

    def has_contract(self, label: str) -> bool:
        return label in self._contracts_by_label

    def contracts_of_firm(self, firm: AgentId) -> Tuple[Contract, ...]:
        return tuple(c for c in self.contracts if c.firm == firm)

    def contracts_of_worker(self, worker: AgentId) -> Tuple[Contract, ...]:
        return tuple(c for c in self.contracts if c.worker == worker)

    @cached_property
    def firm_positions(self) -> Dict[AgentId, Dict[FirmAssignment, int]]:
        """Per firm, 0-based list position of each acceptable assignment (0 is best)."""
        return {
            firm: {assignment: pos for pos, assignment in reversed(list(enumerate(prefs)))}
            for firm, prefs in self.firm_prefs.items()
        }

    @cached_property
    def contract_ranks(self) -> Dict[Contract, int]:
        """Ascending rank of each contract under its worker's preference (worst is 1)."""
        ranks = {}
        for worker, prefs in self.worker_prefs.items():
            for pos, contract in enumerate(prefs):
                ranks.setdefault(contract, len(prefs) - pos)
        return ranks
