from langgraph.graph import END, StateGraph

from .nodes import ScarfNodes
from .state import ScarfGraphState


class ScarfWorkflow():
    def __init__(self, verbose: bool = False):
        # initiate graph state & nodes
        workflow = StateGraph(ScarfGraphState)
        nodes = ScarfNodes(verbose)

        # define all graph nodes
        workflow.add_node("initialize", nodes.initialize)
        workflow.add_node("cardinal_pivot", nodes.cardinal_pivot)
        workflow.add_node("ordinal_pivot", nodes.ordinal_pivot)

        # step 0 bases, then the first cardinal pivot
        workflow.set_entry_point("initialize")
        workflow.add_edge("initialize", "cardinal_pivot")

        # alternate the two pivots until the bases coincide
        workflow.add_conditional_edges(
            "cardinal_pivot",
            nodes.check_cardinal_termination,
            {
                "continue": "ordinal_pivot",
                "terminate": END
            }
        )
        workflow.add_conditional_edges(
            "ordinal_pivot",
            nodes.check_ordinal_termination,
            {
                "continue": "cardinal_pivot",
                "terminate": END
            }
        )

        # Compile
        self.app = workflow.compile()
