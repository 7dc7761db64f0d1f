from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field


def fraction_text(value: Fraction) -> str:
    """Exact p/q text; integers print without a denominator."""
    return str(Fraction(value))


# **Shared entries**
class ShareEntry(BaseModel):
    firm: str = Field(..., description="Firm owning the assignment.")
    assignment: str = Field(..., description="Assignment label, e.g. {z1,z2}.")
    share: str = Field(..., description="Exact time share as p/q.")


class ProfileEntry(BaseModel):
    agent: str = Field(..., description="Agent label.")
    worst: str = Field(..., description="Worst situation or assignment of the agent, 'empty' when not full matched.")


# **Scarf solve output**
class SolveReport(BaseModel):
    schedule: List[ShareEntry] = Field(
        default_factory=list,
        description="Positive shares of the stable pi-schedule matching found by Scarf's algorithm."
    )
    full_matched: List[str] = Field(default_factory=list, description="Agents whose capacity is used up.")
    profile: List[ProfileEntry] = Field(default_factory=list, description="Worst situation of every agent.")
    pivots: int = Field(0, description="Number of cardinal pivots in the trace.")
    fallback: bool = Field(
        False,
        description="True when no Scarf start existed and the exhaustive oracle supplied the matching."
    )
    matching: Optional[str] = Field(None, description="Dominating full-time matching, if one exists.")
    stable: Optional[bool] = Field(None, description="Re-verified stability of the matching.")


# **Pivot trace output**
class TraceReport(BaseModel):
    lines: List[str] = Field(default_factory=list, description="Step 0 header and one line per step.")
    columns: List[str] = Field(default_factory=list, description="Column labels in matrix order.")
    solution: List[str] = Field(default_factory=list, description="Final basic solution b over all columns.")
    schedule: List[ShareEntry] = Field(default_factory=list, description="Positive shares read off b.")


# **Schedule check output**
class ScheduleReport(BaseModel):
    schedule: List[ShareEntry] = Field(default_factory=list, description="Positive shares of the checked schedule.")
    feasible: bool = Field(..., description="Every capacity constraint holds.")
    stable: Optional[bool] = Field(None, description="No assignment blocks the schedule; unset when infeasible.")
    full_matched: List[str] = Field(default_factory=list)
    profile: List[ProfileEntry] = Field(default_factory=list)
    block: Optional[str] = Field(None, description="First blocking firm and assignment.")


# **Matching stability output**
class StabilityReport(BaseModel):
    matching: str = Field(..., description="The checked matching.")
    stable: bool = Field(..., description="No firm assignment blocks the matching.")
    block: Optional[str] = Field(None, description="First blocking firm and assignment, when unstable.")


class StableSetReport(BaseModel):
    matchings: List[str] = Field(default_factory=list, description="Every stable matching in enumeration order.")
    enumerated: int = Field(0, description="Number of matchings examined.")


# **Concavity output**
class ConcavityReport(BaseModel):
    scheme: str = Field(..., description="'unit' or 'file'.")
    concave: bool = Field(..., description="Every schedule matching has a dominating matching.")
    support: List[str] = Field(default_factory=list, description="Counterexample support, firm:assignment.")
    tight: List[str] = Field(default_factory=list, description="Counterexample full-matched agents.")
    witness: List[ShareEntry] = Field(default_factory=list, description="Shares realizing the counterexample.")


# **Team market output**
class TeamReport(BaseModel):
    matching: str = Field(..., description="Matching produced by deferred acceptance or rounding.")
    stable: bool = Field(..., description="Re-verified stability of the matching.")
    dominates: Optional[bool] = Field(None, description="For rounding: the matching dominates the input schedule.")
