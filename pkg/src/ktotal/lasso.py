"""
Lasso Sequences
===============

Eventually periodic reward streams x(y): indexing, moments, the good/bad
classification, exact k-total and discounted values, the split
operation and a truncation simulator.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, List, Optional

from .errors import LassoError
from .sequences import (
    FiniteSeq,
    Number,
    as_seq,
    binom_ext,
    moment_M,
    sum_moment,
    sum_moment_concat_delta,
    sum_S,
)

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class ExtendedValue:
    """An exact rational or one of the two infinities.

    ``infinity`` is 0 for finite values, +1 for +inf and -1 for -inf.
    """

    finite: Fraction = Fraction(0)
    infinity: int = 0

    def __post_init__(self):
        if self.infinity not in (-1, 0, 1):
            raise ValueError(f"infinity must be -1, 0 or +1, got {self.infinity}")
        # Infinities always carry a zero finite part.
        finite = Fraction(0) if self.infinity else Fraction(self.finite)
        object.__setattr__(self, "finite", finite)

    @classmethod
    def of(cls, value: Number) -> "ExtendedValue":
        return cls(Fraction(value), 0)

    @classmethod
    def infinite(cls, sign: int) -> "ExtendedValue":
        if sign not in (1, -1):
            raise ValueError(f"infinity sign must be +1 or -1, got {sign}")
        return cls(Fraction(0), sign)

    @classmethod
    def parse(cls, text: str) -> "ExtendedValue":
        """Parse ``p/q``, an integer, ``+inf`` or ``-inf``."""
        token = text.strip()
        if token in ("+inf", "inf"):
            return cls.infinite(1)
        if token == "-inf":
            return cls.infinite(-1)
        try:
            return cls.of(Fraction(token))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not an exact value: {text!r}") from e

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def scale(self, factor: Number) -> "ExtendedValue":
        """Multiply by a positive rational."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("extended values are only scaled by positive factors")
        if self.is_finite:
            return ExtendedValue.of(self.finite * factor)
        return self

    def _key(self):
        return (self.infinity, self.finite)

    def __lt__(self, other: "ExtendedValue") -> bool:
        if not isinstance(other, ExtendedValue):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        if self.infinity > 0:
            return "+inf"
        if self.infinity < 0:
            return "-inf"
        return str(self.finite)


PLUS_INFINITY = ExtendedValue.infinite(1)
MINUS_INFINITY = ExtendedValue.infinite(-1)


@dataclass(frozen=True)
class LassoClass:
    """Good, or Bad at the first level with a nonzero delta."""

    level: Optional[int] = None
    sign: int = 0

    @classmethod
    def good(cls) -> "LassoClass":
        return cls()

    @classmethod
    def bad(cls, level: int, sign: int) -> "LassoClass":
        return cls(level, sign)

    @property
    def is_good(self) -> bool:
        return self.level is None

    def __str__(self) -> str:
        if self.is_good:
            return "good"
        return f"bad(level={self.level}, sign={'+' if self.sign > 0 else '-'})"


@dataclass(frozen=True)
class Lasso:
    """The stream x(y): prefix x once, then cycle y forever."""

    prefix: FiniteSeq = ()
    cycle: FiniteSeq = field(default=(Fraction(0),))

    def __post_init__(self):
        object.__setattr__(self, "prefix", as_seq(self.prefix))
        object.__setattr__(self, "cycle", as_seq(self.cycle))
        if not self.cycle:
            raise LassoError("a lasso needs a nonempty cycle")

    @classmethod
    def of(cls, prefix: Iterable[Number], cycle: Iterable[Number]) -> "Lasso":
        return cls(as_seq(prefix), as_seq(cycle))

    @property
    def p(self) -> int:
        return len(self.prefix)

    @property
    def q(self) -> int:
        return len(self.cycle)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def R(self) -> Fraction:
        """Largest absolute entry."""
        return max(abs(v) for v in self.prefix + self.cycle)

    def __str__(self) -> str:
        x = ",".join(str(v) for v in self.prefix)
        y = ",".join(str(v) for v in self.cycle)
        return f"({x})({y})"


def element_at(L: Lasso, i: int) -> Fraction:
    """The i-th entry of the stream, 1-based."""
    if i < 1:
        raise LassoError(f"lasso positions start at 1, got {i}")
    if i <= L.p:
        return L.prefix[i - 1]
    r = (i - L.p - 1) % L.q + 1
    return L.cycle[r - 1]


def moment_prefix_sum(L: Lasso, i: int) -> Fraction:
    """The i-th entry of M(L) in closed form."""
    if i < 1:
        raise LassoError(f"lasso positions start at 1, got {i}")
    if i <= L.p:
        return sum_S(L.prefix[:i])
    laps, r = divmod(i - L.p - 1, L.q)
    return sum_S(L.prefix) + laps * sum_S(L.cycle) + sum_S(L.cycle[: r + 1])


def moment_lasso(L: Lasso) -> Lasso:
    """M(L) as a lasso; defined only when the cycle sums to zero."""
    total = sum_S(L.cycle)
    if total != 0:
        raise LassoError(f"M of a lasso with cycle sum {total} is not a lasso")
    shift = sum_S(L.prefix)
    return Lasso(moment_M(L.prefix), tuple(shift + v for v in moment_M(L.cycle)))


def moment_lasso_pow(L: Lasso, k: int) -> Lasso:
    """M^k(L) as a lasso, for lassos good through level k-1."""
    for _ in range(k):
        L = moment_lasso(L)
    return L


def deltas(L: Lasso, k: int) -> List[Fraction]:
    """S(M^l(x,y)) - S(M^l(x)) for l = 0..k."""
    return [sum_moment_concat_delta(L.prefix, L.cycle, level) for level in range(k + 1)]


def classify(L: Lasso, k: int) -> LassoClass:
    """Good if the deltas vanish below level k, otherwise Bad at the first nonzero one."""
    for level in range(k):
        delta = sum_moment_concat_delta(L.prefix, L.cycle, level)
        if delta != 0:
            return LassoClass.bad(level, 1 if delta > 0 else -1)
    return LassoClass.good()


def phi_k(L: Lasso, k: int) -> ExtendedValue:
    """The k-total reward of the stream."""
    cls = classify(L, k)
    if not cls.is_good:
        return ExtendedValue.infinite(cls.sign)
    return ExtendedValue.of(sum_moment_concat_delta(L.prefix, L.cycle, k) / L.q)


def phi_k_formula(L: Lasso, k: int) -> Fraction:
    """The k-total reward of a good lasso as an explicit linear form in x and y."""
    if not classify(L, k).is_good:
        raise LassoError(f"closed formula applies to good lassos only, {L} is bad at k={k}")
    p, q = L.p, L.q
    total = Fraction(0)
    for j, x in enumerate(L.prefix, start=1):
        total += x * (binom_ext(q + p - j + k, k) - binom_ext(p - j + k, k))
    for i, y in enumerate(L.cycle, start=1):
        total += binom_ext(k + q - i, k) * y
    return total / q


def _check_beta(beta: Fraction) -> Fraction:
    beta = Fraction(beta)
    if not 0 < beta < 1:
        raise LassoError(f"discount factor must lie in (0, 1), got {beta}")
    return beta


def phi_beta(L: Lasso, beta: Number) -> Fraction:
    """Discounted average (1-b) * sum_j b^(j-1) a_j, summed in closed form."""
    beta = _check_beta(beta)
    head = sum((beta**j * x for j, x in enumerate(L.prefix)), Fraction(0))
    loop = sum((beta**i * y for i, y in enumerate(L.cycle)), Fraction(0))
    return (1 - beta) * (head + beta**L.p / (1 - beta**L.q) * loop)


def phi_k_beta(L: Lasso, k: int, beta: Number) -> Fraction:
    """Discounted k-total reward, phi_beta / (1 - beta)^k."""
    beta = _check_beta(beta)
    return phi_beta(L, beta) / (1 - beta) ** k


def _split(s: FiniteSeq) -> FiniteSeq:
    return tuple(v for x in s for v in (x, -x))


def split_lasso(L: Lasso) -> Lasso:
    """Interleave every entry with its negation, in prefix and cycle."""
    return Lasso(_split(L.prefix), _split(L.cycle))


def unroll(L: Lasso, times: int = 1) -> Lasso:
    """Same stream with the cycle copied into the prefix ``times`` times."""
    return Lasso(L.prefix + L.cycle * times, L.cycle)


def truncate(L: Lasso, T: int) -> FiniteSeq:
    """The first T entries of the stream."""
    if T < 1:
        raise LassoError(f"truncation length must be positive, got {T}")
    return tuple(element_at(L, i) for i in range(1, T + 1))


def simulate_phi_k(L: Lasso, k: int, T: int) -> Fraction:
    """(1/T) * S(M^k(a_[1,T])), the finite-horizon average."""
    return sum_moment(truncate(L, T), k) / T


def truncation_error_bound(L: Lasso, k: int) -> Fraction:
    """C such that |simulate_phi_k(L, k, T) - phi_k(L, k)| <= C / T for T >= p.

    Holds for lassos good at level k; the maximum runs over the residue
    rho of T - p modulo q.
    """
    value = phi_k(L, k)
    if not value.is_finite:
        raise LassoError(f"{L} has no finite {k}-total reward")
    delta = value.finite * L.q
    return max(
        abs(sum_moment(L.prefix + L.cycle[:rho], k))
        + Fraction(L.p + rho, L.q) * abs(delta)
        for rho in range(L.q)
    )
