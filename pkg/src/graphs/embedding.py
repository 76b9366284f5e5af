"""Embedding-reduction supervisor graph implementation."""

from langgraph.graph import END, StateGraph

from ..embedding.elimination import EmbeddingReduction
from ..invariant.cofactors import IdealPresentation
from ..nodes.embedding import eliminate, route
from ..states.types import EmbeddingState


def create_embedding_graph():
    """Create and compile the embedding-reduction graph.

    Returns:
        Compiled graph alternating route and eliminate until the ideal lies in m^2
    """
    # Build graph
    graph = StateGraph(EmbeddingState)

    # Add nodes
    graph.add_node("route", route)
    graph.add_node("eliminate", eliminate)

    # Add edges
    graph.add_edge("eliminate", "route")

    # Add conditional edges
    graph.add_conditional_edges(
        "route",
        lambda x: x["next"],
        {
            "eliminate": "eliminate",
            "FINISH": END,
        },
    )

    # Set entry point
    graph.set_entry_point("route")

    return graph.compile()


def reduce_embedding(ideal: IdealPresentation, truncation: int) -> EmbeddingReduction:
    """Eliminate variables until the ideal lies in the square of the maximal ideal.

    Args:
        ideal: generators in d variables
        truncation: degree N every elimination step is exact to

    Returns:
        EmbeddingReduction with the remaining original variable indices
    """
    graph = create_embedding_graph()
    final = graph.invoke(
        {
            "original": ideal,
            "ideal": ideal,
            "truncation": truncation,
            "variables": list(range(ideal.dimension)),
            "steps": [],
        },
        {"recursion_limit": 2 * ideal.dimension + 5},
    )
    return EmbeddingReduction(
        original=ideal,
        reduced=final["ideal"],
        variables=tuple(final["variables"]),
        steps=tuple(final["steps"]),
    )
