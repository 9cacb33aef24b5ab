"""
Shared fixtures: the bundled one-player game with five plays, the
five example streams and seeded random sources.
"""

import random

import pytest

from ktotal.game import Strategy, StrategyPair, first_arc_pair
from ktotal.gamefile import bundled_game, serialize_game
from ktotal.lasso import Lasso

# The five example streams a0..a4
EXAMPLE_STREAMS = [
    Lasso.of([], [0]),
    Lasso.of([], [1, 0, -1, 0]),
    Lasso.of([], [-1, 0, 1, 0]),
    Lasso.of([], [1, -1, -1, 1]),
    Lasso.of([], [-1, 1, 1, -1]),
]

# phi^(k) of a0..a4 for k = 0..4
EXAMPLE_TABLE = {
    0: ["0", "0", "0", "0", "0"],
    1: ["0", "1/2", "-1/2", "0", "0"],
    2: ["0", "+inf", "-inf", "1/2", "-1/2"],
    3: ["0", "+inf", "-inf", "+inf", "-inf"],
    4: ["0", "+inf", "-inf", "+inf", "-inf"],
}

# Successor of every vertex other than v0 in the bundled game
FORCED = {
    "v1": "v2",
    "v2": "v3",
    "v3": "v4",
    "v4": "v1",
    "v5": "v6",
    "v6": "v7",
    "v7": "v8",
    "v8": "v5",
    "v9": "v9",
}


@pytest.fixture
def figure_one():
    return bundled_game("figure_one.game")


@pytest.fixture
def figure_one_min():
    return bundled_game("figure_one_min.game")


@pytest.fixture
def choose_v0():
    """Build the strategy pair that leaves v0 towards ``target``."""

    def build(game, target):
        pair = first_arc_pair(game)
        side = game.owner("v0")
        choice = dict(pair.side(side).choice)
        choice["v0"] = game.arc_between("v0", target)
        return pair.replace(Strategy(side, choice))

    return build


@pytest.fixture
def strategy_text():
    """Strategy file text that leaves v0 towards ``target``."""

    def build(target):
        lines = [f"choose v0 {target}"]
        lines += [f"choose {v} {w}" for v, w in FORCED.items()]
        return "\n".join(lines) + "\n"

    return build


@pytest.fixture
def figure_one_file(tmp_path, figure_one):
    path = tmp_path / "figure_one.game"
    path.write_text(serialize_game(figure_one), encoding="utf-8")
    return path


@pytest.fixture
def rng():
    return random.Random(20241019)


@pytest.fixture
def example_streams():
    return EXAMPLE_STREAMS


@pytest.fixture
def example_table():
    return EXAMPLE_TABLE
