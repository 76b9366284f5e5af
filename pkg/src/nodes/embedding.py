"""Node functions of the embedding-reduction loop."""

import dataclasses

from ..embedding.checks import check_m2
from ..embedding.elimination import eliminate_variable
from ..states.types import EmbeddingState
from .common import stage


@stage("route")
def route(state: EmbeddingState) -> dict:
    """Decide whether another variable can be eliminated."""
    report = check_m2(state["ideal"])
    return {"next": "FINISH" if report.in_m2 else "eliminate"}


@stage("eliminate")
def eliminate(state: EmbeddingState) -> dict:
    ideal, step = eliminate_variable(state["ideal"], state["truncation"])
    variables = list(state["variables"])
    step = dataclasses.replace(step, original_variable=variables.pop(step.variable))
    return {"ideal": ideal, "variables": variables, "steps": [step]}
