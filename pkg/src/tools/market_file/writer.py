from typing import List, Optional

from ...market import Market, enumerate_acceptable_assignments
from ...schedule import PiScheme
from ...teams import LeaderFollowerStructure


def _assignment(labels) -> str:
    return "{" + ",".join(labels) + "}"


def serialize_market(
    m: Market, scheme: Optional[PiScheme] = None, lf: Optional[LeaderFollowerStructure] = None
) -> str:
    """Write a market (and optionally its scheme and team structure) in the market file format."""
    lines: List[str] = [
        "firms: " + " ".join(f.label for f in m.firms),
        "workers: " + " ".join(w.label for w in m.workers),
    ]
    lines += [f"contract {c.label} {c.firm.label} {c.worker.label}" for c in m.contracts]
    for firm in m.firms:
        ranked = [_assignment(sorted(c.label for c in y.contracts)) for y in m.firm_prefs.get(firm, ())]
        lines.append(f"pref firm {firm.label}: " + " > ".join(ranked + ["empty"]))
    for worker in m.workers:
        ranked = [c.label for c in m.worker_prefs.get(worker, ())]
        lines.append(f"pref worker {worker.label}: " + " > ".join(ranked + ["empty"]))

    if scheme is not None:
        lines.append("capacity: " + " ".join(f"{a.label}={scheme.capacity[a]}" for a in m.agents))
        for y in enumerate_acceptable_assignments(m):
            entries = " ".join(f"{a.label}={scheme.coefficient(y, a)}" for a in m.agents if a in y.agents)
            lines.append(f"intensity {_assignment(sorted(c.label for c in y.contracts))}: {entries}")

    if lf is not None:
        lines.append("leaders: " + " ".join(l.label for l in sorted(lf.leaders)))
        if lf.followers:
            lines.append(
                "follows: " + " ".join(f"{o.label}={lf.follows[o].label}" for o in sorted(lf.followers))
            )
    return "\n".join(lines) + "\n"
