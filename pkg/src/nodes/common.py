"""Common helpers for pipeline nodes."""

import functools
import logging
from typing import Callable

from ..utils.errors import QuasiHomError

logger = logging.getLogger(__name__)


def stage(name: str) -> Callable:
    """Label any QuasiHomError raised inside the node with the stage name."""

    def decorate(node: Callable) -> Callable:
        @functools.wraps(node)
        def run(state: dict) -> dict:
            logger.info("stage %s", name)
            try:
                return node(state)
            except QuasiHomError as err:
                if err.stage is None:
                    err.stage = name
                raise

        run.stage_name = name
        return run

    return decorate


def note(message: str, *args) -> dict:
    """A log entry for the state's append-only log channel."""
    return {"log": [message % args if args else message]}
