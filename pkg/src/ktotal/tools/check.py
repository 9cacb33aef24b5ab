"""
Check Tool
==========

Verifies that a strategy pair is a uniform saddle point: no unilateral
deviation helps either player from any starting vertex.
"""

import logging
import time
import mcp.types as types
from fractions import Fraction
from typing import Any, Dict, List

from ..config import Settings
from ..game import Game, StrategyPair, payoff
from ..gamefile import format_value, parse_strategy
from ..reports import CheckReport, SaddleVerdict, ViolationEntry
from ..solver import SaddleReport, check_saddle
from .arguments import GAME_PROPERTIES, JSON_PROPERTY, K_PROPERTY, game_argument, k_argument, respond

logger = logging.getLogger(__name__)
settings = Settings()

# Tool definition
check_tool = types.Tool(
    name="check",
    description="Check a pure stationary strategy pair for profitable unilateral deviations",
    inputSchema={
        "type": "object",
        "properties": {
            **GAME_PROPERTIES,
            "strategy": {
                "type": "string",
                "description": "Strategy file text: one 'choose <vertex> <to-vertex | @arc-index>' line per vertex",
            },
            **K_PROPERTY,
            "budget": {
                "type": "integer",
                "description": "Largest number of strategies to enumerate",
                "default": settings.enumeration_budget,
                "minimum": 1,
            },
            **JSON_PROPERTY,
        },
        "required": ["strategy"],
    },
)


def saddle_verdict(game: Game, report: SaddleReport, scale: int = 1) -> SaddleVerdict:
    """Report form of a saddle check; values are divided by ``scale``."""
    factor = Fraction(1, scale)
    return SaddleVerdict(
        ok=report.ok,
        violations=[
            ViolationEntry(
                vertex=v.vertex,
                side=v.side.value,
                strategy=v.strategy.describe(game),
                value=format_value(v.value.scale(factor)),
                expected=format_value(v.expected.scale(factor)),
            )
            for v in report.violations
        ],
    )


def run_check(
    game: Game, k: int, pair: StrategyPair, budget: int = settings.enumeration_budget
) -> CheckReport:
    started = time.perf_counter()
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    pair.validate(game)
    values = {v: format_value(payoff(game, v, pair, k)) for v in game.ids}
    report = check_saddle(game, k, pair, budget)
    return CheckReport(
        k=k,
        values=values,
        saddle=saddle_verdict(game, report),
        elapsed_seconds=time.perf_counter() - started,
    )


async def handle_check(arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Handle check tool calls."""
    try:
        text = arguments.get("strategy")
        if not text:
            return [types.TextContent(type="text", text="Error: Strategy text is required")]

        game = game_argument(arguments)
        pair = parse_strategy(text, game)
        budget = arguments.get("budget", settings.enumeration_budget)
        report = run_check(game, k_argument(arguments), pair, budget)
        return respond(report, arguments)

    except Exception as e:
        logger.error(f"Error in check: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]
