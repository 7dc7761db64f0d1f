import sys

from colorama import Fore, Style

from .errors import InternalInconsistencyError
from .scarf.bases import cardinal_pivot, initial_bases, ordinal_pivot
from .scarf.matrices import column_labels
from .scarf.trace import ScarfStep
from .state import ScarfGraphState


class ScarfNodes:
    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def _say(self, color: str, message: str):
        if self.verbose:
            print(color + message + Style.RESET_ALL, file=sys.stderr)

    def initialize(self, state: ScarfGraphState) -> dict:
        """Builds the Step 0 feasible and ordinal bases."""
        feasible, ordinal, entering = initial_bases(
            state["matrix_a"], state["matrix_c"], state["initial_row"]
        )
        self._say(Fore.YELLOW, "Initial ordinal basis: " + " ".join(column_labels(ordinal.columns)))
        return {
            "feasible_basis": feasible,
            "ordinal_basis": ordinal,
            "initial_feasible": feasible.columns_by_row,
            "initial_ordinal": ordinal.columns,
            "entering": entering,
            "leaving": None,
            "steps": [],
            "visited": {(feasible.columns, ordinal.column_set)},
        }

    def cardinal_pivot(self, state: ScarfGraphState) -> dict:
        """Brings the waiting ordinal column into the feasible basis."""
        entering = state["entering"]
        feasible, leaving = cardinal_pivot(state["matrix_a"], state["feasible_basis"], entering)
        feasible.verify(state["matrix_a"])
        index = len(state["steps"]) + 1
        self._say(Fore.CYAN, f"Step {index}: cardinal pivot in={entering} out={leaving}")
        step = ScarfStep(
            index=index,
            cardinal_in=entering,
            cardinal_out=leaving,
            feasible_basis=feasible.columns_by_row,
            ordinal_basis=state["ordinal_basis"].columns,
        )
        return {"feasible_basis": feasible, "leaving": leaving, "steps": state["steps"] + [step]}

    def check_cardinal_termination(self, state: ScarfGraphState) -> str:
        """Stops when the feasible basis has caught up with the ordinal basis."""
        if state["feasible_basis"].columns == state["ordinal_basis"].column_set:
            self._say(Fore.GREEN, "Feasible basis equals ordinal basis")
            return "terminate"
        return "continue"

    def ordinal_pivot(self, state: ScarfGraphState) -> dict:
        """Removes the column that just left the feasible basis from the ordinal basis."""
        leaving = state["leaving"]
        ordinal, entering = ordinal_pivot(state["matrix_c"], state["ordinal_basis"], leaving)
        self._say(Fore.CYAN, f"Step {len(state['steps'])}: ordinal pivot out={leaving} in={entering}")

        pair = (state["feasible_basis"].columns, ordinal.column_set)
        if pair in state["visited"]:
            raise InternalInconsistencyError("Scarf loop revisited a pair of bases")
        last = state["steps"][-1]
        step = ScarfStep(
            index=last.index,
            cardinal_in=last.cardinal_in,
            cardinal_out=last.cardinal_out,
            feasible_basis=last.feasible_basis,
            ordinal_basis=ordinal.columns,
            ordinal_out=leaving,
            ordinal_in=entering,
        )
        return {
            "ordinal_basis": ordinal,
            "entering": entering,
            "steps": state["steps"][:-1] + [step],
            "visited": state["visited"] | {pair},
        }

    def check_ordinal_termination(self, state: ScarfGraphState) -> str:
        """Stops when the ordinal basis has caught up with the feasible basis."""
        if state["ordinal_basis"].column_set == state["feasible_basis"].columns:
            self._say(Fore.GREEN, "Ordinal basis equals feasible basis")
            return "terminate"
        return "continue"
