"""
BW-Games
========

Game graphs with MIN/MAX vertex ownership and arc rewards, pure
stationary strategies, the plays they induce, and the decomposition of
finite walks into lassos plus a simple path.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import GameError
from .lasso import ExtendedValue, Lasso, phi_k
from .sequences import FiniteSeq, binom_ext, sum_moment

logger = logging.getLogger(__name__)


class Player(str, Enum):
    MIN = "MIN"
    MAX = "MAX"

    @property
    def opponent(self) -> "Player":
        return Player.MAX if self is Player.MIN else Player.MIN


@dataclass(frozen=True)
class Vertex:
    id: str
    owner: Player


@dataclass(frozen=True)
class Arc:
    tail: str
    head: str
    reward: Fraction

    def __str__(self) -> str:
        return f"{self.tail} -> {self.head} ({self.reward})"


@dataclass(frozen=True, eq=False)
class Game:
    """A finite digraph whose vertices belong to MIN or MAX.

    Arcs keep their file order; that order is the tie-breaking order
    everywhere strategies are enumerated or improved. Parallel arcs are
    allowed.
    """

    vertices: Tuple[Vertex, ...]
    arcs: Tuple[Arc, ...]
    start: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self,
            "arcs",
            tuple(Arc(a.tail, a.head, Fraction(a.reward)) for a in self.arcs),
        )
        seen = set()
        for v in self.vertices:
            if v.id in seen:
                raise GameError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
        for a in self.arcs:
            for end in (a.tail, a.head):
                if end not in seen:
                    raise GameError(f"arc {a} uses unknown vertex {end!r}")
        if self.start is not None and self.start not in seen:
            raise GameError(f"start vertex {self.start!r} is not in the game")
        stuck = [v for v, d in self.graph.out_degree() if d == 0]
        if stuck:
            raise GameError(f"vertices without outgoing arcs: {', '.join(stuck)}")

    @cached_property
    def graph(self) -> nx.MultiDiGraph:
        """The game as a networkx multigraph; arc keys are arc indices."""
        g = nx.MultiDiGraph()
        for v in self.vertices:
            g.add_node(v.id, owner=v.owner)
        for i, a in enumerate(self.arcs):
            g.add_edge(a.tail, a.head, key=i, reward=a.reward)
        return g

    @cached_property
    def index(self) -> Dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_arcs(self) -> Dict[str, Tuple[int, ...]]:
        """Outgoing arc indices of every vertex, in file order."""
        out: Dict[str, List[int]] = {v.id: [] for v in self.vertices}
        for i, a in enumerate(self.arcs):
            out[a.tail].append(i)
        return {v: tuple(arcs) for v, arcs in out.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def R(self) -> Fraction:
        return max((abs(a.reward) for a in self.arcs), default=Fraction(0))

    @property
    def ids(self) -> List[str]:
        return [v.id for v in self.vertices]

    def owner(self, vertex: str) -> Player:
        return self.vertices[self.index[vertex]].owner

    def owned(self, side: Player) -> List[str]:
        return [v.id for v in self.vertices if v.owner is side]

    @property
    def is_integral(self) -> bool:
        return all(a.reward.denominator == 1 for a in self.arcs)

    @property
    def denominator(self) -> int:
        """Least common denominator of all rewards."""
        return lcm(*(a.reward.denominator for a in self.arcs)) if self.arcs else 1

    def scaled(self) -> Tuple["Game", int]:
        """The same game with rewards multiplied by their common denominator."""
        factor = self.denominator
        arcs = [Arc(a.tail, a.head, a.reward * factor) for a in self.arcs]
        return Game(self.vertices, arcs, self.start), factor

    def with_owner(self, side: Player) -> "Game":
        """The same graph with every vertex given to one player."""
        return Game([Vertex(v.id, side) for v in self.vertices], self.arcs, self.start)

    def default_start(self) -> str:
        return self.start if self.start is not None else self.vertices[0].id

    def arc_between(self, tail: str, head: str) -> int:
        """Lowest-index arc from tail to head."""
        if tail not in self.index or head not in self.index:
            raise GameError(f"unknown vertex in step {tail} -> {head}")
        keys = self.graph.get_edge_data(tail, head)
        if not keys:
            raise GameError(f"no arc {tail} -> {head}")
        return min(keys)


@dataclass(frozen=True)
class Strategy:
    """One chosen outgoing arc index per vertex owned by ``side``."""

    side: Player
    choice: Dict[str, int] = field(default_factory=dict, hash=False)

    def validate(self, game: Game) -> None:
        owned = game.owned(self.side)
        missing = [v for v in owned if v not in self.choice]
        if missing:
            raise GameError(
                f"{self.side.value} strategy misses vertices: {', '.join(missing)}"
            )
        for v, arc in self.choice.items():
            if v not in game.index or game.owner(v) is not self.side:
                raise GameError(f"{v!r} is not a {self.side.value} vertex")
            if arc not in game.out_arcs[v]:
                raise GameError(f"arc {arc} does not leave {v!r}")

    def describe(self, game: Game) -> List[str]:
        return [str(game.arcs[self.choice[v]]) for v in game.owned(self.side)]


@dataclass(frozen=True)
class StrategyPair:
    min_strategy: Strategy
    max_strategy: Strategy

    def __post_init__(self):
        if self.min_strategy.side is not Player.MIN or self.max_strategy.side is not Player.MAX:
            raise GameError("strategy pair needs one MIN and one MAX strategy")

    @classmethod
    def of(cls, a: Strategy, b: Strategy) -> "StrategyPair":
        """Build a pair from two strategies given in either order."""
        return cls(a, b) if a.side is Player.MIN else cls(b, a)

    def side(self, side: Player) -> Strategy:
        return self.min_strategy if side is Player.MIN else self.max_strategy

    def replace(self, strategy: Strategy) -> "StrategyPair":
        return StrategyPair.of(strategy, self.side(strategy.side.opponent))

    def validate(self, game: Game) -> None:
        self.min_strategy.validate(game)
        self.max_strategy.validate(game)

    def successor_arcs(self, game: Game) -> Dict[str, int]:
        """The arc taken at every vertex under this pair."""
        chosen = {**self.min_strategy.choice, **self.max_strategy.choice}
        return {v: chosen[v] for v in game.ids}

    def arcs(self, game: Game) -> List[str]:
        chosen = self.successor_arcs(game)
        return [str(game.arcs[chosen[v]]) for v in game.ids]


def first_arc_pair(game: Game) -> StrategyPair:
    """Every vertex takes its lowest-index outgoing arc."""
    strategies = {
        side: Strategy(side, {v: game.out_arcs[v][0] for v in game.owned(side)})
        for side in Player
    }
    return StrategyPair(strategies[Player.MIN], strategies[Player.MAX])


def play_arcs(game: Game, v0: str, successors: Dict[str, int]) -> Tuple[List[int], List[int]]:
    """Arc indices of the initial path and of the cycle reached from v0."""
    if v0 not in game.index:
        raise GameError(f"unknown vertex {v0!r}")
    visited: Dict[str, int] = {}
    path: List[int] = []
    v = v0
    while v not in visited:
        visited[v] = len(path)
        arc = successors[v]
        path.append(arc)
        v = game.arcs[arc].head
    return path[: visited[v]], path[visited[v] :]


def play_from(game: Game, v0: str, pair: StrategyPair) -> Lasso:
    """The reward lasso of the play from v0 under a strategy pair."""
    return lasso_from(game, v0, pair.successor_arcs(game))


def lasso_from(game: Game, v0: str, successors: Dict[str, int]) -> Lasso:
    head, loop = play_arcs(game, v0, successors)
    return Lasso(
        tuple(game.arcs[a].reward for a in head),
        tuple(game.arcs[a].reward for a in loop),
    )


def payoff(game: Game, v0: str, pair: StrategyPair, k: int) -> ExtendedValue:
    """The k-total reward of the play from v0."""
    return phi_k(play_from(game, v0, pair), k)


@dataclass(frozen=True)
class Walk:
    """A finite walk: a start vertex and consecutive arcs."""

    start: str
    steps: Tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        at = self.start
        for t, arc in enumerate(self.steps, start=1):
            if arc.tail != at:
                raise GameError(f"step {t} leaves {arc.tail!r} but the walk is at {at!r}")
            at = arc.head

    @classmethod
    def from_vertices(cls, game: Game, vertices: Sequence[str]) -> "Walk":
        """Walk through the given vertices, taking the lowest-index arc at each step."""
        if len(vertices) < 2:
            raise GameError("a walk needs at least two vertices")
        steps = [
            game.arcs[game.arc_between(u, v)] for u, v in zip(vertices, vertices[1:])
        ]
        return cls(vertices[0], steps)

    def __len__(self) -> int:
        return len(self.steps)

    def vertex(self, t: int) -> str:
        """v_t: the start for t = 0, else the head of the t-th arc."""
        return self.start if t == 0 else self.steps[t - 1].head

    @property
    def rewards(self) -> FiniteSeq:
        return tuple(a.reward for a in self.steps)


@dataclass(frozen=True)
class LassoPiece:
    """One extracted lasso: indices of its path P and cycle C, with p and q."""

    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]
    p: int
    q: int


@dataclass(frozen=True)
class WalkDecomposition:
    """Extracted lassos in order and the residual simple path (P_s, Q_s)."""

    length: int
    lassos: Tuple[LassoPiece, ...]
    residual_prefix: Tuple[int, ...]
    residual_tail: Tuple[int, ...]

    @property
    def residual(self) -> Tuple[int, ...]:
        return self.residual_prefix + self.residual_tail


def decompose_walk(walk: Walk) -> WalkDecomposition:
    """Repeatedly cut out the earliest-closing cycle of a finite walk.

    Index t stands for arc e_t (1-based) and its head v_t; index 0 is the
    start vertex.
    """
    T = len(walk)
    if T < 1:
        raise GameError("cannot decompose an empty walk")
    remaining = list(range(1, T + 1))
    pieces: List[LassoPiece] = []
    while True:
        seen: Dict[str, int] = {walk.vertex(0): 0}
        closing = None
        for t in remaining:
            v = walk.vertex(t)
            if v in seen:
                closing = (seen[v], t)
                break
            seen[v] = t
        if closing is None:
            break
        p, q = closing
        twins = [t for t in [0] + remaining if t < q and walk.vertex(t) == walk.vertex(q)]
        if twins != [p]:
            raise GameError(f"vertex {walk.vertex(q)!r} repeats more than once before index {q}")
        pieces.append(
            LassoPiece(
                prefix=tuple(t for t in remaining if t <= p),
                cycle=tuple(t for t in remaining if p < t <= q),
                p=p,
                q=q,
            )
        )
        remaining = [t for t in remaining if not p < t <= q]
    last_q = pieces[-1].q if pieces else 0
    return WalkDecomposition(
        length=T,
        lassos=tuple(pieces),
        residual_prefix=tuple(t for t in remaining if t <= last_q),
        residual_tail=tuple(t for t in remaining if t > last_q),
    )


@dataclass(frozen=True)
class DecompositionCheck:
    decomposition: WalkDecomposition
    direct: Fraction
    expanded: Fraction

    @property
    def holds(self) -> bool:
        return self.direct == self.expanded


def verify_decomposition_identity(
    walk: Walk, k: int, rewards: Optional[Iterable] = None
) -> DecompositionCheck:
    """S(M^k(a_[1,T])) directly and through the lasso expansion of the walk."""
    a = walk.rewards if rewards is None else tuple(Fraction(r) for r in rewards)
    T = len(walk)
    if len(a) != T:
        raise GameError(f"{len(a)} rewards for a walk of {T} arcs")

    def pick(indices: Iterable[int]) -> FiniteSeq:
        return tuple(a[t - 1] for t in indices)

    decomposition = decompose_walk(walk)
    expanded = sum_moment(pick(decomposition.residual), k)
    for piece in decomposition.lassos:
        head = pick(piece.prefix)
        loop = head + pick(piece.cycle)
        for level in range(k + 1):
            weight = binom_ext(T - piece.q - 1 + k - level, k - level)
            expanded += weight * (sum_moment(loop, level) - sum_moment(head, level))
    return DecompositionCheck(decomposition, sum_moment(a, k), expanded)
