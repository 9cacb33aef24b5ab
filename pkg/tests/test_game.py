"""
Tests for games, strategies, plays and walk decomposition.
"""

from fractions import Fraction

import pytest

from ktotal.errors import GameError
from ktotal.game import (
    Arc,
    Game,
    Player,
    Strategy,
    StrategyPair,
    Vertex,
    Walk,
    decompose_walk,
    first_arc_pair,
    payoff,
    play_from,
    verify_decomposition_identity,
)
from ktotal.generators import random_game, random_walk
from ktotal.lasso import MINUS_INFINITY, ExtendedValue, Lasso
from ktotal.sequences import sum_moment


def loop_game(reward=1, owner=Player.MAX):
    return Game([Vertex("a", owner)], [Arc("a", "a", reward)])


class TestGame:
    """Test game construction and its derived views."""

    def test_figure_one_shape(self, figure_one):
        assert figure_one.n == 10
        assert len(figure_one.arcs) == 14
        assert figure_one.start == "v0"
        assert figure_one.R == 1
        assert figure_one.out_arcs["v0"] == (0, 1, 2, 3, 4)
        assert figure_one.graph.number_of_edges() == 14
        assert figure_one.owned(Player.MIN) == []
        assert figure_one.is_integral

    def test_duplicate_vertex(self):
        with pytest.raises(GameError, match="duplicate"):
            Game([Vertex("a", Player.MIN), Vertex("a", Player.MAX)], [Arc("a", "a", 0)])

    def test_unknown_vertex(self):
        with pytest.raises(GameError, match="unknown vertex"):
            Game([Vertex("a", Player.MIN)], [Arc("a", "b", 0)])

    def test_vertex_without_arcs(self):
        with pytest.raises(GameError, match="without outgoing arcs: b"):
            Game([Vertex("a", Player.MIN), Vertex("b", Player.MAX)], [Arc("a", "b", 0)])

    def test_unknown_start(self):
        with pytest.raises(GameError):
            Game([Vertex("a", Player.MIN)], [Arc("a", "a", 0)], start="z")

    def test_scaled(self):
        game = Game(
            [Vertex("a", Player.MIN), Vertex("b", Player.MAX)],
            [Arc("a", "b", Fraction(1, 2)), Arc("b", "a", Fraction(-1, 3))],
        )
        assert not game.is_integral
        scaled, factor = game.scaled()
        assert factor == 6
        assert [a.reward for a in scaled.arcs] == [3, -2]

    def test_with_owner(self, figure_one, figure_one_min):
        assert figure_one.with_owner(Player.MIN).owned(Player.MIN) == figure_one_min.owned(Player.MIN)

    def test_arc_between_prefers_lowest_index(self):
        game = Game([Vertex("a", Player.MAX)], [Arc("a", "a", 2), Arc("a", "a", 5)])
        assert game.arc_between("a", "a") == 0


class TestStrategies:
    """Test strategy validation and the plays they induce."""

    def test_first_arc_pair(self, figure_one):
        pair = first_arc_pair(figure_one)
        pair.validate(figure_one)
        assert pair.max_strategy.choice["v0"] == 0
        assert pair.min_strategy.choice == {}

    def test_missing_vertex(self, figure_one):
        pair = StrategyPair(Strategy(Player.MIN, {}), Strategy(Player.MAX, {"v0": 0}))
        with pytest.raises(GameError, match="misses vertices: v1"):
            pair.validate(figure_one)

    def test_foreign_arc(self, figure_one):
        choice = dict(first_arc_pair(figure_one).max_strategy.choice)
        choice["v1"] = 0
        with pytest.raises(GameError, match="does not leave"):
            Strategy(Player.MAX, choice).validate(figure_one)

    def test_pair_sides(self):
        with pytest.raises(GameError):
            StrategyPair(Strategy(Player.MAX, {}), Strategy(Player.MIN, {}))
        a, b = Strategy(Player.MAX, {}), Strategy(Player.MIN, {})
        assert StrategyPair.of(a, b).min_strategy is b

    def test_plays(self, figure_one, choose_v0):
        assert play_from(figure_one, "v0", choose_v0(figure_one, "v5")) == Lasso.of([1], [0, -1, 0, 1])
        assert play_from(figure_one, "v9", first_arc_pair(figure_one)) == Lasso.of([], [0])
        assert play_from(figure_one, "v0", choose_v0(figure_one, "v1")) == Lasso.of([1], [-1, -1, 1, 1])

    def test_payoffs(self, figure_one, choose_v0):
        assert payoff(figure_one, "v0", choose_v0(figure_one, "v9"), 4) == ExtendedValue.of(0)
        assert payoff(figure_one, "v0", choose_v0(figure_one, "v7"), 2) == MINUS_INFINITY
        assert payoff(figure_one, "v0", choose_v0(figure_one, "v1"), 2) == ExtendedValue.of(Fraction(1, 2))

    def test_play_from_unknown_vertex(self, figure_one):
        with pytest.raises(GameError):
            play_from(figure_one, "nowhere", first_arc_pair(figure_one))

    def test_random_plays_are_short(self, rng):
        """Test that every play is a lasso with p + q <= n and entries within R."""
        for _ in range(300):
            game = random_game(rng, n=rng.randint(1, 7), max_out=3, R=rng.randint(0, 4))
            sides = [
                Strategy(side, {v: rng.choice(game.out_arcs[v]) for v in game.owned(side)})
                for side in Player
            ]
            pair = StrategyPair.of(*sides)
            for v in game.ids:
                L = play_from(game, v, pair)
                assert L.p + L.q <= game.n
                assert all(abs(r) <= game.R for r in L.prefix + L.cycle)


class TestWalks:
    """Test walks and their decomposition into lassos."""

    def test_walk_must_chain(self):
        with pytest.raises(GameError, match="step 2"):
            Walk("a", [Arc("a", "b", 0), Arc("a", "b", 0)])

    def test_from_vertices_rejects_non_walk(self, figure_one):
        with pytest.raises(GameError, match="no arc"):
            Walk.from_vertices(figure_one, ["v0", "v2"])

    def test_simple_path(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v0", "v1", "v2", "v3"])
        decomposition = decompose_walk(walk)
        assert decomposition.lassos == ()
        assert decomposition.residual == (1, 2, 3)

    def test_single_repeat(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v5", "v6", "v7", "v8", "v5", "v6"])
        decomposition = decompose_walk(walk)
        assert len(decomposition.lassos) == 1
        assert decomposition.lassos[0].cycle == (1, 2, 3, 4)
        assert decomposition.residual == (5,)

    def test_first_repeat_example(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v0", "v5", "v6", "v7", "v8", "v5", "v6"])
        decomposition = decompose_walk(walk)
        (piece,) = decomposition.lassos
        assert (piece.p, piece.q) == (1, 5)
        assert piece.prefix == (1,)
        assert piece.cycle == (2, 3, 4, 5)
        assert decomposition.residual == (1, 6)

    def test_cycle_twice(self, figure_one):
        vertices = ["v5", "v6", "v7", "v8"] * 2 + ["v5"]
        decomposition = decompose_walk(Walk.from_vertices(figure_one, vertices))
        assert [(piece.p, piece.q) for piece in decomposition.lassos] == [(0, 4), (0, 8)]
        assert decomposition.residual == ()

    def test_random_walks_partition(self, rng):
        """Test that the piece cycles and the residual cover each step exactly once."""
        for _ in range(300):
            game = random_game(rng, n=rng.randint(1, 6), max_out=3)
            walk = random_walk(rng, game, rng.randint(1, 60))
            decomposition = decompose_walk(walk)
            covered = [t for piece in decomposition.lassos for t in piece.cycle]
            covered += decomposition.residual
            assert sorted(covered) == list(range(1, len(walk) + 1))
            assert len(decomposition.residual) < game.n


class TestDecompositionIdentity:
    """Test the moment sum of a walk against its lasso expansion."""

    def test_simple_path(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v0", "v3", "v4", "v1"])
        for k in range(4):
            check = verify_decomposition_identity(walk, k)
            assert check.holds
            assert check.direct == sum_moment(walk.rewards, k)

    def test_long_walk(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v0"] + ["v1", "v2", "v3", "v4"] * 3)
        assert len(walk) == 12
        assert verify_decomposition_identity(walk, 2).holds

    def test_single_arc(self):
        walk = Walk("a", [Arc("a", "a", 5)])
        check = verify_decomposition_identity(walk, 0)
        assert check.direct == check.expanded == 5

    def test_custom_rewards(self, figure_one):
        walk = Walk.from_vertices(figure_one, ["v0", "v5", "v6", "v7", "v8", "v5", "v6"])
        assert verify_decomposition_identity(walk, 3, rewards=[3, -1, 4, 1, -5, 9]).holds
        with pytest.raises(GameError):
            verify_decomposition_identity(walk, 1, rewards=[1, 2])

    @pytest.mark.slow
    def test_random_walks(self, rng):
        for _ in range(1000):
            game = random_game(rng, n=rng.randint(1, 8), max_out=3, R=3)
            walk = random_walk(rng, game, rng.randint(1, 200))
            assert verify_decomposition_identity(walk, rng.randint(0, 3)).holds
