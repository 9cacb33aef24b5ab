"""
Tool Arguments
==============

Argument decoding shared by the MCP tool handlers.
"""

import logging
import mcp.types as types
from typing import Any, Dict, List

from ..config import Settings
from ..errors import GameFileError
from ..game import Game
from ..gamefile import bundled_game, parse_game
from ..reports import Report

logger = logging.getLogger(__name__)
settings = Settings()

# Input schema fragments reused by the tool definitions
GAME_PROPERTIES = {
    "game": {
        "type": "string",
        "description": "Game file text: 'vertex <id> <MIN|MAX>', 'arc <from> <to> <reward>', optional 'start <id>'",
    },
    "example": {
        "type": "string",
        "description": "Name of a bundled game instead of game text",
        "enum": settings.bundled_examples,
    },
}

K_PROPERTY = {
    "k": {
        "type": "integer",
        "description": "Level of the total reward hierarchy (0 is mean payoff, 1 is total reward)",
        "default": settings.default_k,
        "minimum": 0,
    }
}

JSON_PROPERTY = {
    "json": {
        "type": "boolean",
        "description": "Return the report as JSON instead of text",
        "default": False,
    }
}


def game_argument(arguments: Dict[str, Any]) -> Game:
    """The game given as text, or a bundled example by name."""
    text = arguments.get("game")
    example = arguments.get("example")
    if text:
        return parse_game(text)
    if example:
        if example not in settings.bundled_examples:
            raise GameFileError(
                f"unknown example {example!r}, choose from {', '.join(settings.bundled_examples)}"
            )
        return bundled_game(example)
    raise ValueError("either 'game' or 'example' is required")


def k_argument(arguments: Dict[str, Any]) -> int:
    k = arguments.get("k", settings.default_k)
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    return k


def list_argument(arguments: Dict[str, Any], name: str) -> List[str]:
    """A list given either as a JSON array or as a comma-separated string."""
    value = arguments.get(name, [])
    if isinstance(value, str):
        return [t.strip() for t in value.split(",") if t.strip()]
    return [str(t) for t in value]


def respond(report: Report, arguments: Dict[str, Any]) -> List[types.TextContent]:
    if arguments.get("json", False):
        return [types.TextContent(type="text", text=report.model_dump_json(indent=2))]
    return [types.TextContent(type="text", text=report.render())]
