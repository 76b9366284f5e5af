"""Quasi-homogenization graph implementation."""

import logging
from typing import Optional

from langgraph.graph import START, StateGraph

from ..invariant.cofactors import IdealPresentation
from ..invariant.extraction import QHResult
from ..nodes.pipeline import cofactors, extract, jordanize, minimize, normalize, verify
from ..polyring.polynomial import PolyMap
from ..states.types import QuasiHomogenizeState
from ..utils.config import PipelineOptions, get_options

logger = logging.getLogger(__name__)


def create_quasi_homogenize_graph():
    """Create and compile the quasi-homogenization graph.

    Returns:
        Compiled graph running normalize -> minimize -> cofactors -> jordanize
        -> extract -> verify
    """
    graph_builder = StateGraph(QuasiHomogenizeState)
    graph_builder = graph_builder.add_sequence(
        [
            ("normalize", normalize),
            ("minimize", minimize),
            ("cofactors", cofactors),
            ("jordanize", jordanize),
            ("extract", extract),
            ("verify", verify),
        ]
    )
    graph_builder.add_edge(START, "normalize")

    return graph_builder.compile()


def quasi_homogenize(
    ideal: IdealPresentation,
    F: PolyMap,
    options: Optional[PipelineOptions] = None,
) -> QHResult:
    """Weighted homogeneous generators of an F-invariant ideal, with certificates.

    Args:
        ideal: generators of the ideal
        F: contracting map with Gaussian-rational spectrum
        options: bounds and switches; defaults to get_options()

    Returns:
        QHResult in the coordinates where F is in normal form
    """
    if options is None:
        options = get_options()
    graph = create_quasi_homogenize_graph()
    final = graph.invoke({"map": F, "ideal": ideal, "options": options, "log": []})
    for entry in final["log"]:
        logger.info(entry)
    return final["result"]
