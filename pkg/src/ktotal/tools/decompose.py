"""
Decompose Tool
==============

Cuts a finite walk into lassos plus a residual simple path and checks
that the k-th moment sum of the walk equals its lasso expansion.
"""

import logging
import time
import mcp.types as types
from typing import Any, Dict, List, Sequence

from ..game import Game, Walk, verify_decomposition_identity
from ..gamefile import format_value
from ..reports import DecomposeReport, LassoEntry
from .arguments import (
    GAME_PROPERTIES,
    JSON_PROPERTY,
    K_PROPERTY,
    game_argument,
    k_argument,
    list_argument,
    respond,
)

logger = logging.getLogger(__name__)

# Tool definition
decompose_tool = types.Tool(
    name="decompose",
    description="Decompose a walk into lassos and verify the moment-sum expansion",
    inputSchema={
        "type": "object",
        "properties": {
            **GAME_PROPERTIES,
            "walk": {
                "type": "string",
                "description": "Comma-separated vertex ids forming a walk (e.g. 'v0,v5,v6,v7')",
            },
            **K_PROPERTY,
            **JSON_PROPERTY,
        },
        "required": ["walk"],
    },
)


def run_decompose(game: Game, vertices: Sequence[str], k: int) -> DecomposeReport:
    started = time.perf_counter()
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    walk = Walk.from_vertices(game, list(vertices))
    check = verify_decomposition_identity(walk, k)
    decomposition = check.decomposition
    logger.info(f"Walk of length {len(walk)} gives {len(decomposition.lassos)} lassos")
    return DecomposeReport(
        k=k,
        length=decomposition.length,
        lassos=[
            LassoEntry(p=piece.p, q=piece.q, prefix=list(piece.prefix), cycle=list(piece.cycle))
            for piece in decomposition.lassos
        ],
        residual=list(decomposition.residual),
        direct=format_value(check.direct),
        expanded=format_value(check.expanded),
        equal=check.holds,
        elapsed_seconds=time.perf_counter() - started,
    )


async def handle_decompose(arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Handle decompose tool calls."""
    try:
        vertices = list_argument(arguments, "walk")
        if len(vertices) < 2:
            return [types.TextContent(type="text", text="Error: a walk needs at least two vertices")]

        report = run_decompose(game_argument(arguments), vertices, k_argument(arguments))
        return respond(report, arguments)

    except Exception as e:
        logger.error(f"Error in decompose: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]
