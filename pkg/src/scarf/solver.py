from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from langgraph.errors import GraphRecursionError

from ..config.solver_configs import ScarfOptions
from ..errors import InternalInconsistencyError
from ..graph import ScarfWorkflow
from ..market import Market
from ..schedule import PiScheduleMatching, PiScheme, find_block_pi_schedule, is_feasible
from .matrices import MatrixC, build_matrix_a, build_matrix_c
from .trace import ScarfTrace


@lru_cache(maxsize=2)
def _workflow(verbose: bool) -> ScarfWorkflow:
    return ScarfWorkflow(verbose)


def scarf_solve(
    m: Market,
    s: PiScheme,
    options: Optional[ScarfOptions] = None,
    matrix_c: Optional[MatrixC] = None,
) -> Tuple[PiScheduleMatching, ScarfTrace]:
    """
    Run Scarf's algorithm and return a stable pi-schedule matching with its pivot trace.

    Args:
        m: A valid market
        s: A valid scheme for m
        options: Start row, L-ordering, graph recursion limit and verbosity
        matrix_c: Utility matrix to use instead of the one built from options.l_order

    Returns:
        (schedule matching read off the assignment columns of the final basic solution, trace)

    Raises:
        PivotError: If a pivot cannot be carried out
        InternalInconsistencyError: If a runtime invariant fails, the loop does not end
            within the recursion limit, or the output is blocked
    """
    options = options or ScarfOptions()
    matrix_a = build_matrix_a(m, s)
    n = len(m.agents)
    if len(matrix_a.columns) == n:
        empty = PiScheduleMatching.for_market(m, {})
        return empty, ScarfTrace(columns=matrix_a.columns, solution=tuple(matrix_a.rhs))

    matrix_c = matrix_c or build_matrix_c(m, options.l_order)
    initial_state = {
        "matrix_a": matrix_a,
        "matrix_c": matrix_c,
        "initial_row": options.initial_row,
        "feasible_basis": None,
        "ordinal_basis": None,
        "initial_feasible": (),
        "initial_ordinal": (),
        "entering": None,
        "leaving": None,
        "steps": [],
        "visited": set(),
    }
    try:
        final = _workflow(options.verbose).app.invoke(
            initial_state, {"recursion_limit": options.recursion_limit}
        )
    except GraphRecursionError as e:
        raise InternalInconsistencyError(f"Scarf loop exceeded {options.recursion_limit} graph steps") from e

    solution = final["feasible_basis"].solution_vector(matrix_a)
    trace = ScarfTrace(
        initial_feasible=final["initial_feasible"],
        initial_ordinal=final["initial_ordinal"],
        steps=list(final["steps"]),
        columns=matrix_a.columns,
        solution=solution,
    )
    t = PiScheduleMatching.from_vector(m, [Fraction(x) for x in solution[n:]])
    if not is_feasible(t, s):
        raise InternalInconsistencyError("Scarf output violates a capacity constraint")
    block = find_block_pi_schedule(m, s, t)
    if block is not None:
        raise InternalInconsistencyError(f"Scarf output is blocked by {block.label}")
    return t, trace
