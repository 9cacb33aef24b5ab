"""
Eval Tool
=========

Classifies a lasso and computes its k-total reward.
"""

import logging
import time
import mcp.types as types
from typing import Any, Dict, Iterable, List

from ..gamefile import format_value, parse_rational
from ..lasso import Lasso, classify, phi_k
from ..reports import EvalReport
from .arguments import JSON_PROPERTY, K_PROPERTY, k_argument, list_argument, respond

logger = logging.getLogger(__name__)

# Tool definition
eval_tool = types.Tool(
    name="eval",
    description="Classify the lasso x(y) as good or bad and compute its exact k-total reward",
    inputSchema={
        "type": "object",
        "properties": {
            "prefix": {
                "type": "string",
                "description": "Comma-separated rationals of the prefix x (e.g. '1' or '1/2,-3'), may be empty",
                "default": "",
            },
            "cycle": {
                "type": "string",
                "description": "Comma-separated rationals of the repeated cycle y (e.g. '1,0,-1,0')",
            },
            **K_PROPERTY,
            **JSON_PROPERTY,
        },
        "required": ["cycle"],
    },
)


def run_eval(prefix: Iterable, cycle: Iterable, k: int) -> EvalReport:
    started = time.perf_counter()
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    lasso = Lasso.of(prefix, cycle)
    classification = classify(lasso, k)
    value = phi_k(lasso, k)
    logger.info(f"phi^({k}) of {lasso} is {value} ({classification})")
    return EvalReport(
        k=k,
        prefix=[format_value(v) for v in lasso.prefix],
        cycle=[format_value(v) for v in lasso.cycle],
        classification=str(classification),
        value=format_value(value),
        elapsed_seconds=time.perf_counter() - started,
    )


async def handle_eval(arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Handle eval tool calls."""
    try:
        prefix = [parse_rational(t) for t in list_argument(arguments, "prefix")]
        cycle = [parse_rational(t) for t in list_argument(arguments, "cycle")]
        if not cycle:
            return [types.TextContent(type="text", text="Error: a nonempty cycle is required")]

        report = run_eval(prefix, cycle, k_argument(arguments))
        return respond(report, arguments)

    except Exception as e:
        logger.error(f"Error in eval: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]
