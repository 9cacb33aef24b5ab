"""
Split Tool
==========

Emits the split game, which at level k+1 is equivalent to the input game
at level k.
"""

import logging
import time
import mcp.types as types
from typing import Any, Dict, List

from ..game import Game
from ..gamefile import serialize_game
from ..reports import SplitReport
from ..solver import split_game
from .arguments import GAME_PROPERTIES, JSON_PROPERTY, game_argument, respond

logger = logging.getLogger(__name__)

# Tool definition
split_tool = types.Tool(
    name="split",
    description="Subdivide every arc (u, v, r) into u -> w (r) and w -> v (-r)",
    inputSchema={
        "type": "object",
        "properties": {**GAME_PROPERTIES, **JSON_PROPERTY},
    },
)


def run_split(game: Game) -> SplitReport:
    started = time.perf_counter()
    split = split_game(game)
    logger.info(f"Split {game.n} vertices and {len(game.arcs)} arcs into {split.n} vertices")
    return SplitReport(
        vertices=split.n,
        arcs=len(split.arcs),
        game=serialize_game(split),
        elapsed_seconds=time.perf_counter() - started,
    )


async def handle_split(arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Handle split tool calls."""
    try:
        return respond(run_split(game_argument(arguments)), arguments)

    except Exception as e:
        logger.error(f"Error in split: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]
