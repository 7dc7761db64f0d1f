from collections import Counter
from typing import List

from .types import Market, Role


def validate_market(m: Market) -> List[str]:
    """
    Check the market invariants.

    Returns:
        Human readable violations, each naming the offending object; empty iff the market is valid
    """
    violations: List[str] = []
    if len(m.firms) < 2:
        violations.append("single-firm market" if m.firms else "market without firms")
    if len(m.workers) < 2:
        violations.append("single-worker market" if m.workers else "market without workers")

    labels = Counter(agent.label for agent in m.agents)
    for label, count in labels.items():
        if count > 1:
            violations.append(f"agent label {label} declared {count} times")
    for role, agents in ((Role.FIRM, m.firms), (Role.WORKER, m.workers)):
        for expected, agent in enumerate(agents):
            if agent.role is not role:
                violations.append(f"agent {agent} listed as {role.value} but has role {agent.role.value}")
            if agent.index != expected:
                violations.append(f"agent {agent} has index {agent.index}, expected {expected}")

    contract_labels = Counter(c.label for c in m.contracts)
    for label, count in contract_labels.items():
        if count > 1:
            violations.append(f"contract label {label} declared {count} times")
    firms, workers = set(m.firms), set(m.workers)
    for contract in m.contracts:
        if contract.firm not in firms:
            violations.append(f"contract {contract} names unknown firm {contract.firm}")
        if contract.worker not in workers:
            violations.append(f"contract {contract} names unknown worker {contract.worker}")

    known = set(m.contracts)
    for firm in m.firms:
        prefs = m.firm_prefs.get(firm, ())
        seen = set()
        for assignment in prefs:
            if assignment.firm != firm:
                violations.append(f"firm {firm} lists assignment {assignment} of {assignment.firm}")
            if assignment.is_empty:
                violations.append(f"firm {firm} lists the empty assignment")
            violations.extend(assignment.violations())
            for contract in sorted(assignment.contracts - known, key=lambda c: c.label):
                violations.append(f"assignment {assignment} of {firm} holds undeclared contract {contract}")
            if assignment in seen:
                violations.append(f"firm {firm} lists assignment {assignment} twice")
            seen.add(assignment)
    for firm in m.firm_prefs:
        if firm not in firms:
            violations.append(f"preference list for unknown firm {firm}")

    for worker in m.workers:
        ranked = Counter(m.worker_prefs.get(worker, ()))
        for contract in m.contracts_of_worker(worker):
            if ranked[contract] == 0:
                violations.append(f"worker {worker} does not rank contract {contract}")
            elif ranked[contract] > 1:
                violations.append(f"worker {worker} ranks contract {contract} {ranked[contract]} times")
        for contract in ranked:
            if contract.worker != worker or contract not in known:
                violations.append(f"worker {worker} ranks foreign contract {contract}")
    for worker in m.worker_prefs:
        if worker not in workers:
            violations.append(f"preference list for unknown worker {worker}")
    return violations
