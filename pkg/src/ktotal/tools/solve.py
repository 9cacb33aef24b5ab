"""
Solve Tool
==========

Solves a BW-game under the k-total payoff, either through the discounted
reduction or by brute-force enumeration of stationary strategies.
"""

import logging
import time
import mcp.types as types
from fractions import Fraction
from typing import Any, Dict, List

from ..config import Settings
from ..errors import NonIntegralRewardsError
from ..game import Game
from ..gamefile import format_value
from ..reports import SolveReport
from ..solver import Method, check_saddle, enumerate_solve, solve_k_total
from .arguments import GAME_PROPERTIES, JSON_PROPERTY, K_PROPERTY, game_argument, k_argument, respond
from .check import saddle_verdict

logger = logging.getLogger(__name__)
settings = Settings()

# Tool definition
solve_tool = types.Tool(
    name="solve",
    description="Compute the k-total value of every vertex and a uniformly optimal strategy pair",
    inputSchema={
        "type": "object",
        "properties": {
            **GAME_PROPERTIES,
            **K_PROPERTY,
            "method": {
                "type": "string",
                "enum": [m.value for m in Method],
                "description": "Discounted reduction, or brute-force minimax over all strategy pairs",
                "default": Method.REDUCTION.value,
            },
            "check": {
                "type": "boolean",
                "description": "Also verify the returned pair against every unilateral deviation",
                "default": False,
            },
            "scale": {
                "type": "boolean",
                "description": "Multiply rational rewards by their common denominator before solving",
                "default": False,
            },
            "budget": {
                "type": "integer",
                "description": "Largest number of strategy pairs to enumerate",
                "default": settings.enumeration_budget,
                "minimum": 1,
            },
            **JSON_PROPERTY,
        },
    },
)


def run_solve(
    game: Game,
    k: int,
    method: Method = Method.REDUCTION,
    check: bool = False,
    scale: bool = False,
    budget: int = settings.enumeration_budget,
) -> SolveReport:
    """Solve ``game``; values are reported in the game's own reward units."""
    started = time.perf_counter()
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    method = Method(method)
    factor = 1
    solved = game
    if not game.is_integral:
        if scale:
            solved, factor = game.scaled()
            logger.warning(f"Rewards scaled by {factor} to make them integral")
        elif method is Method.REDUCTION:
            raise NonIntegralRewardsError(game.denominator)

    if method is Method.REDUCTION:
        solution = solve_k_total(solved, k)
    else:
        solution = enumerate_solve(solved, k, budget)

    unscale = Fraction(1, factor)
    saddle = None
    if check:
        saddle = saddle_verdict(game, check_saddle(solved, k, solution.pair, budget), factor)
    return SolveReport(
        k=k,
        method=method.value,
        values={v: format_value(x.scale(unscale)) for v, x in solution.values.items()},
        strategy=solution.pair.arcs(game),
        beta=None if solution.beta is None else format_value(solution.beta),
        scale=factor,
        minmax_agrees=solution.minmax_agrees,
        saddle=saddle,
        elapsed_seconds=time.perf_counter() - started,
    )


async def handle_solve(arguments: Dict[str, Any]) -> List[types.TextContent]:
    """Handle solve tool calls."""
    try:
        game = game_argument(arguments)
        report = run_solve(
            game,
            k_argument(arguments),
            method=Method(arguments.get("method", Method.REDUCTION.value)),
            check=arguments.get("check", False),
            scale=arguments.get("scale", False),
            budget=arguments.get("budget", settings.enumeration_budget),
        )
        return respond(report, arguments)

    except Exception as e:
        logger.error(f"Error in solve: {str(e)}")
        return [types.TextContent(type="text", text=f"Error: {str(e)}")]
