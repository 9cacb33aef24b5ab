"""
k-Total Game Solver
===================

Solves BW-games under k-total payoffs by strategy improvement on the
discounted game at a discount factor close enough to 1, and checks the
result against a brute-force minimax over all pure stationary
strategies. Also provides saddle-point verification, best responses and
the split embedding of a game into the next level.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from math import prod
from typing import Dict, Iterator, List, Optional, Tuple

from .config import Settings
from .errors import BudgetExceededError, NonIntegralRewardsError, SolverError
from .game import (
    Arc,
    Game,
    Player,
    Strategy,
    StrategyPair,
    Vertex,
    first_arc_pair,
    lasso_from,
    payoff,
)
from .lasso import ExtendedValue, phi_beta, phi_k

logger = logging.getLogger(__name__)

settings = Settings()


class Method(str, Enum):
    REDUCTION = "reduction"
    ENUMERATE = "enumerate"


@dataclass
class Solution:
    """A uniform saddle point and the value of every vertex."""

    pair: StrategyPair
    values: Dict[str, ExtendedValue]
    k: Optional[int]
    method: Method
    beta: Optional[Fraction] = None
    minmax_agrees: Optional[bool] = None


@dataclass(frozen=True)
class Violation:
    vertex: str
    side: Player
    strategy: Strategy
    value: ExtendedValue
    expected: ExtendedValue


@dataclass
class SaddleReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _require_integral(game: Game) -> None:
    if not game.is_integral:
        logger.warning(f"Rejecting rational rewards (common denominator {game.denominator})")
        raise NonIntegralRewardsError(game.denominator)


def epsilon_lower_bound(game: Game, k: int) -> Fraction:
    """A lower bound on eps(k, r); 1 for integer rewards."""
    _require_integral(game)
    return Fraction(1)


def epsilon_search(game: Game, k: int, limit: int = 100_000) -> Optional[Fraction]:
    """Smallest positive |sum c_e r(e)| with |c_e| <= n^(k+1), by exhaustion.

    Returns None when no combination is positive (all rewards zero).
    Refuses games needing more than ``limit`` coefficient vectors.
    """
    rewards = sorted({a.reward for a in game.arcs if a.reward != 0})
    bound = game.n ** (k + 1)
    # Arcs with equal rewards pool their coefficients.
    multiplicity = {r: sum(1 for a in game.arcs if a.reward == r) for r in rewards}
    ranges = [range(-bound * multiplicity[r], bound * multiplicity[r] + 1) for r in rewards]
    required = prod(len(r) for r in ranges)
    if required > limit:
        raise BudgetExceededError(required, limit)
    best: Optional[Fraction] = None
    for coefficients in product(*ranges):
        value = abs(sum(c * r for c, r in zip(coefficients, rewards)))
        if value > 0 and (best is None or value < best):
            best = Fraction(value)
    return best


def discount_threshold(game: Game, k: int) -> Fraction:
    """beta = 1 - 1/(4 n^(k+3) R + 1), strictly inside the certified range."""
    R = game.R
    if R == 0:
        return Fraction(1, 2)
    return 1 - Fraction(1, 4 * game.n ** (k + 3) * R + 1)


def eval_discounted(game: Game, pair: StrategyPair, beta: Fraction) -> Dict[str, Fraction]:
    """Discounted value of the play from every vertex."""
    successors = pair.successor_arcs(game)
    return {v: phi_beta(lasso_from(game, v, successors), beta) for v in game.ids}


def _improve(
    game: Game,
    strategy: Strategy,
    values: Dict[str, Fraction],
    beta: Fraction,
) -> Tuple[Strategy, int]:
    """Switch every owned vertex to its best strictly improving arc."""
    sign = 1 if strategy.side is Player.MAX else -1
    choice = dict(strategy.choice)
    switches = 0
    for v in game.owned(strategy.side):
        def q(i: int) -> Fraction:
            arc = game.arcs[i]
            return (1 - beta) * arc.reward + beta * values[arc.head]

        current = choice[v]
        best, best_value = current, q(current)
        for i in game.out_arcs[v]:
            candidate = q(i)
            if sign * (candidate - best_value) > 0:
                best, best_value = i, candidate
        if best != current:
            logger.debug(f"{strategy.side.value} switches {v}: {game.arcs[current]} => {game.arcs[best]}")
            choice[v] = best
            switches += 1
    return Strategy(strategy.side, choice), switches


def _check_progress(
    old: Dict[str, Fraction], new: Dict[str, Fraction], sign: int, who: str
) -> None:
    if any(sign * (new[v] - old[v]) < 0 for v in old) or all(new[v] == old[v] for v in old):
        raise SolverError(f"{who} improvement step did not strictly improve the values")


def solve_discounted(game: Game, beta: Fraction) -> Solution:
    """Uniform saddle point of the discounted game by strategy improvement.

    MIN is brought to a best response against the current MAX strategy,
    then MAX takes all of its improving switches; this repeats until MAX
    has none left.
    """
    beta = Fraction(beta)
    if not 0 < beta < 1:
        raise SolverError(f"discount factor must lie in (0, 1), got {beta}")
    pair = first_arc_pair(game)
    values = eval_discounted(game, pair, beta)
    rounds = 0
    outer_values: Optional[Dict[str, Fraction]] = None
    while True:
        while True:
            min_strategy, switches = _improve(game, pair.min_strategy, values, beta)
            if not switches:
                break
            pair = pair.replace(min_strategy)
            new_values = eval_discounted(game, pair, beta)
            _check_progress(values, new_values, -1, "MIN")
            values = new_values
        if outer_values is not None:
            _check_progress(outer_values, values, 1, "MAX")
        outer_values = values
        max_strategy, switches = _improve(game, pair.max_strategy, values, beta)
        rounds += 1
        if not switches:
            break
        pair = pair.replace(max_strategy)
        values = eval_discounted(game, pair, beta)
    logger.info(f"Strategy improvement finished after {rounds} rounds (beta={beta})")
    return Solution(
        pair=pair,
        values={v: ExtendedValue.of(x) for v, x in values.items()},
        k=None,
        method=Method.REDUCTION,
        beta=beta,
    )


def solve_k_total(game: Game, k: int) -> Solution:
    """Uniform saddle point for the k-total reward via the discounted game."""
    _require_integral(game)
    if game.R == 0:
        logger.info("All rewards are zero; every pair is optimal")
        pair = first_arc_pair(game)
        beta = None
    else:
        beta = discount_threshold(game, k)
        logger.info(f"Solving k={k} with n={game.n}, R={game.R}, beta=1-1/{1 / (1 - beta)}")
        pair = solve_discounted(game, beta).pair
    values = {v: payoff(game, v, pair, k) for v in game.ids}
    return Solution(pair=pair, values=values, k=k, method=Method.REDUCTION, beta=beta)


def strategy_count(game: Game, side: Player) -> int:
    return prod(len(game.out_arcs[v]) for v in game.owned(side))


def strategies(game: Game, side: Player) -> Iterator[Strategy]:
    """All pure stationary strategies of one side, in lexicographic arc order."""
    owned = game.owned(side)
    for arcs in product(*(game.out_arcs[v] for v in owned)):
        yield Strategy(side, dict(zip(owned, arcs)))


def _check_budget(required: int, budget: Optional[int]) -> None:
    if budget is None:
        budget = settings.enumeration_budget
    if required > budget:
        logger.warning(f"Refusing enumeration of {required} combinations (budget {budget})")
        raise BudgetExceededError(required, budget)


def _all_payoffs(game: Game, pair: StrategyPair, k: int) -> Dict[str, ExtendedValue]:
    successors = pair.successor_arcs(game)
    return {v: phi_k(lasso_from(game, v, successors), k) for v in game.ids}


def enumerate_solve(game: Game, k: int, budget: Optional[int] = None) -> Solution:
    """Brute-force minimax over all pure stationary strategy pairs."""
    n_max = strategy_count(game, Player.MAX)
    n_min = strategy_count(game, Player.MIN)
    _check_budget(n_max * n_min, budget)
    logger.info(f"Enumerating {n_max} x {n_min} strategy pairs for k={k}")
    max_list = list(strategies(game, Player.MAX))
    min_list = list(strategies(game, Player.MIN))
    table = [
        [_all_payoffs(game, StrategyPair(b, w), k) for b in min_list] for w in max_list
    ]
    ids = game.ids
    # Guaranteed value of each MAX strategy, and worst case of each MIN one.
    floors = [{v: min(row[j][v] for j in range(len(min_list))) for v in ids} for row in table]
    ceilings = [
        {v: max(table[i][j][v] for i in range(len(max_list))) for v in ids}
        for j in range(len(min_list))
    ]
    maxmin = {v: max(f[v] for f in floors) for v in ids}
    minmax = {v: min(c[v] for c in ceilings) for v in ids}
    agrees = maxmin == minmax
    if not agrees:
        logger.warning("max-min and min-max differ on the enumerated strategies")
    w_star = next((i for i, f in enumerate(floors) if f == maxmin), None)
    b_star = next((j for j, c in enumerate(ceilings) if c == minmax), None)
    if w_star is None or b_star is None:
        raise SolverError("no uniformly optimal pure stationary strategy among the enumerated ones")
    return Solution(
        pair=StrategyPair(min_list[b_star], max_list[w_star]),
        values=maxmin,
        k=k,
        method=Method.ENUMERATE,
        minmax_agrees=agrees,
    )


def best_response(
    game: Game,
    k: int,
    fixed: Strategy,
    start: Optional[str] = None,
    budget: Optional[int] = None,
) -> Strategy:
    """Opponent's pure stationary strategy that is best from ``start``.

    Ties keep the first strategy in lexicographic arc order.
    """
    start = start or game.default_start()
    side = fixed.side.opponent
    _check_budget(strategy_count(game, side), budget)
    sign = 1 if side is Player.MAX else -1
    best: Optional[Strategy] = None
    best_value: Optional[ExtendedValue] = None
    for candidate in strategies(game, side):
        value = payoff(game, start, StrategyPair.of(fixed, candidate), k)
        if best_value is None or (value > best_value if sign > 0 else value < best_value):
            best, best_value = candidate, value
    logger.info(f"Best {side.value} response from {start} reaches {best_value}")
    return best


def check_saddle(
    game: Game, k: int, pair: StrategyPair, budget: Optional[int] = None
) -> SaddleReport:
    """Check every unilateral deviation from every start vertex."""
    pair.validate(game)
    _check_budget(strategy_count(game, Player.MAX) + strategy_count(game, Player.MIN), budget)
    base = _all_payoffs(game, pair, k)
    report = SaddleReport()
    for side in Player:
        for deviation in strategies(game, side):
            achieved = _all_payoffs(game, pair.replace(deviation), k)
            for v in game.ids:
                gains = achieved[v] > base[v] if side is Player.MAX else achieved[v] < base[v]
                if gains:
                    report.violations.append(
                        Violation(v, side, deviation, achieved[v], base[v])
                    )
    if not report.ok:
        logger.info(f"Saddle check found {len(report.violations)} profitable deviations")
    return report


def split_vertex_id(game: Game, index: int) -> str:
    arc = game.arcs[index]
    name = f"{arc.tail}~{arc.head}~{index}"
    while name in game.index:
        name += "'"
    return name


def split_game(game: Game) -> Game:
    """Subdivide every arc (u, v, r) into u -> w (r) and w -> v (-r).

    The subdivision vertex w belongs to the owner of u. Arc 2i and 2i+1
    of the result come from arc i, so original arc i corresponds to split
    arc 2i.
    """
    vertices = list(game.vertices)
    arcs: List[Arc] = []
    for i, arc in enumerate(game.arcs):
        w = split_vertex_id(game, i)
        vertices.append(Vertex(w, game.owner(arc.tail)))
        arcs.append(Arc(arc.tail, w, arc.reward))
        arcs.append(Arc(w, arc.head, -arc.reward))
    return Game(vertices, arcs, game.start)


def lift_pair(game: Game, split: Game, pair: StrategyPair) -> StrategyPair:
    """The split-game pair that makes the same choices as ``pair``."""
    lifted = []
    for side in Player:
        choice = {v: 2 * i for v, i in pair.side(side).choice.items()}
        for i, arc in enumerate(game.arcs):
            if game.owner(arc.tail) is side:
                choice[split_vertex_id(game, i)] = 2 * i + 1
        lifted.append(Strategy(side, choice))
    return StrategyPair(*lifted)


def project_split_pair(game: Game, pair: StrategyPair) -> StrategyPair:
    """The original-game pair behind a split-game pair."""
    projected = [
        Strategy(side, {v: pair.side(side).choice[v] // 2 for v in game.owned(side)})
        for side in Player
    ]
    return StrategyPair(*projected)
