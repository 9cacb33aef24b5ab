"""
Game File Format
================

Line-oriented text formats for games and strategies::

    # comment
    vertex <id> <MIN|MAX>
    arc <from> <to> <reward>
    start <id>

    choose <vertex> <to-vertex | @arc-index>

Rewards are integers or reduced fractions ``p/q``. In a strategy file
``@i`` is the 0-based position among the vertex's outgoing arcs, and
any other token is matched against the successors of the vertex. A bare
number that is no successor is also read as a position. Vertex ids may
not start with ``@``.
"""

import logging
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .errors import GameError, GameFileError
from .game import Arc, Game, Player, Strategy, StrategyPair, Vertex
from .lasso import ExtendedValue

logger = logging.getLogger(__name__)

# Prefix of an arc position in a strategy file
INDEX_MARK = "@"


def parse_rational(token: str) -> Fraction:
    """Parse ``p/q``, an integer or a decimal into an exact Fraction."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {token!r}") from e


def format_value(value) -> str:
    """``p/q`` or an integer for rationals, ``+inf``/``-inf`` for infinities."""
    return str(value)


def parse_value(text: str) -> ExtendedValue:
    return ExtendedValue.parse(text)


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
    """Comma-separated rationals; the empty string is the empty list."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(t) for t in text.split(","))


def _tokens(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_game(text: str) -> Game:
    """Parse a game file; out-degrees are checked once all lines are read."""
    vertices: List[Vertex] = []
    seen: Dict[str, int] = {}
    arcs: List[Arc] = []
    start: Optional[str] = None
    for number, words in _tokens(text):
        keyword, args = words[0], words[1:]
        if keyword == "vertex":
            if len(args) != 2:
                raise GameFileError("expected: vertex <id> <MIN|MAX>", number)
            vid, owner = args
            if vid.startswith(INDEX_MARK):
                raise GameFileError(f"vertex id {vid!r} may not start with {INDEX_MARK!r}", number)
            if vid in seen:
                raise GameFileError(f"duplicate vertex {vid!r} (first on line {seen[vid]})", number)
            try:
                side = Player(owner.upper())
            except ValueError:
                raise GameFileError(f"owner must be MIN or MAX, got {owner!r}", number)
            seen[vid] = number
            vertices.append(Vertex(vid, side))
        elif keyword == "arc":
            if len(args) != 3:
                raise GameFileError("expected: arc <from> <to> <reward>", number)
            tail, head, reward = args
            for end in (tail, head):
                if end not in seen:
                    raise GameFileError(f"arc uses undeclared vertex {end!r}", number)
            try:
                arcs.append(Arc(tail, head, parse_rational(reward)))
            except ValueError as e:
                raise GameFileError(str(e), number)
        elif keyword == "start":
            if len(args) != 1:
                raise GameFileError("expected: start <id>", number)
            if start is not None:
                raise GameFileError("start given twice", number)
            start = args[0]
        else:
            raise GameFileError(f"unknown keyword {keyword!r}", number)
    if not vertices:
        raise GameFileError("game file declares no vertices")
    try:
        return Game(vertices, arcs, start)
    except GameError as e:
        raise GameFileError(str(e))


def serialize_game(game: Game) -> str:
    """Canonical text form: vertices, then arcs, then the start line."""
    lines = [f"vertex {v.id} {v.owner.value}" for v in game.vertices]
    lines += [f"arc {a.tail} {a.head} {format_value(a.reward)}" for a in game.arcs]
    if game.start is not None:
        lines.append(f"start {game.start}")
    return "\n".join(lines) + "\n"


def load_game(path: str) -> Game:
    with open(path, "r", encoding="utf-8") as f:
        return parse_game(f.read())


def bundled_game(name: str) -> Game:
    """One of the game files shipped in ``ktotal/data``."""
    text = resources.files("ktotal").joinpath("data", name).read_text(encoding="utf-8")
    return parse_game(text)


def _resolve_choice(game: Game, vertex: str, target: str, number: int) -> int:
    arcs = game.out_arcs[vertex]
    marked = target.startswith(INDEX_MARK)
    if not marked:
        for i in arcs:
            if game.arcs[i].head == target:
                return i
    try:
        position = int(target[len(INDEX_MARK):] if marked else target)
    except ValueError:
        if marked:
            raise GameFileError(f"bad arc index {target!r}", number)
        raise GameFileError(f"{vertex!r} has no arc to {target!r}", number)
    if not 0 <= position < len(arcs):
        raise GameFileError(
            f"{vertex!r} has {len(arcs)} outgoing arcs, index {position} is out of range",
            number,
        )
    return arcs[position]


def parse_strategy(text: str, game: Game) -> StrategyPair:
    """Parse ``choose`` lines into a strategy pair covering every vertex."""
    choice: Dict[str, int] = {}
    for number, words in _tokens(text):
        if words[0] != "choose" or len(words) != 3:
            raise GameFileError("expected: choose <vertex> <to-vertex | @arc-index>", number)
        vertex, target = words[1], words[2]
        if vertex not in game.index:
            raise GameFileError(f"unknown vertex {vertex!r}", number)
        if vertex in choice:
            raise GameFileError(f"vertex {vertex!r} chosen twice", number)
        choice[vertex] = _resolve_choice(game, vertex, target, number)
    missing = [v for v in game.ids if v not in choice]
    if missing:
        raise GameFileError(f"strategy misses vertices: {', '.join(missing)}")
    return StrategyPair(
        *(
            Strategy(side, {v: choice[v] for v in game.owned(side)})
            for side in Player
        )
    )


def serialize_strategy(game: Game, pair: StrategyPair) -> str:
    """``choose`` lines naming the successor, or ``@i`` when a parallel arc comes first."""
    lines = []
    chosen = pair.successor_arcs(game)
    for v in game.ids:
        arc = game.arcs[chosen[v]]
        parallel = [i for i in game.out_arcs[v] if game.arcs[i].head == arc.head]
        if parallel[0] == chosen[v]:
            target = arc.head
        else:
            target = f"{INDEX_MARK}{game.out_arcs[v].index(chosen[v])}"
        lines.append(f"choose {v} {target}")
    return "\n".join(lines) + "\n"
