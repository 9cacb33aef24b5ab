"""
Random Instances
================

Seeded generators of games, lassos and walks for property checks. Every
generator takes a ``random.Random`` so that runs are reproducible.
"""

import random
from fractions import Fraction
from typing import List, Optional

from .game import Arc, Game, Player, Vertex, Walk
from .lasso import Lasso, truncate


def _reward(rng: random.Random, R: int) -> Fraction:
    return Fraction(rng.randint(-R, R))


def random_game(
    rng: random.Random,
    n: int = 4,
    max_out: int = 2,
    R: int = 2,
    owners: Optional[Player] = None,
) -> Game:
    """n vertices ``v0..``, out-degrees 1..max_out, integer rewards in [-R, R].

    Self-loops and parallel arcs are allowed. ``owners`` fixes every
    vertex to one player; otherwise owners are drawn at random.
    """
    vertices = [
        Vertex(f"v{i}", owners or rng.choice([Player.MIN, Player.MAX])) for i in range(n)
    ]
    arcs: List[Arc] = []
    for v in vertices:
        for _ in range(rng.randint(1, max_out)):
            head = rng.choice(vertices).id
            arcs.append(Arc(v.id, head, _reward(rng, R)))
    return Game(vertices, arcs, vertices[0].id)


def random_lasso(rng: random.Random, max_p: int = 4, max_q: int = 4, R: int = 3) -> Lasso:
    p = rng.randint(0, max_p)
    q = rng.randint(1, max_q)
    return Lasso(
        tuple(_reward(rng, R) for _ in range(p)),
        tuple(_reward(rng, R) for _ in range(q)),
    )


def difference_lasso(L: Lasso) -> Lasso:
    """The lasso D with M(D) = L: d_1 = a_1, d_i = a_i - a_(i-1)."""
    a = truncate(L, L.p + L.q + 1)
    d = (a[0],) + tuple(b - c for c, b in zip(a, a[1:]))
    return Lasso(d[: L.p + 1], d[L.p + 1 :])


def random_good_lasso(rng: random.Random, k: int, max_p: int = 3, max_q: int = 4, R: int = 3) -> Lasso:
    """A lasso good at level k: the k-fold difference of a random lasso."""
    L = random_lasso(rng, max_p, max_q, R)
    for _ in range(k):
        L = difference_lasso(L)
    return L


def random_walk(rng: random.Random, game: Game, length: int, start: Optional[str] = None) -> Walk:
    """A walk of ``length`` uniformly chosen outgoing arcs."""
    at = start or game.default_start()
    steps: List[Arc] = []
    for _ in range(length):
        arc = game.arcs[rng.choice(game.out_arcs[at])]
        steps.append(arc)
        at = arc.head
    return Walk(start or game.default_start(), steps)
