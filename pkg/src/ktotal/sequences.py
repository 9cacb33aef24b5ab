"""
Finite Sequence Operators
=========================

Exact sum (S), moment (M) and average (A) operators on finite sequences
of rationals, the extended binomial coefficient, and the closed forms for
iterated moments.
"""

import logging
from fractions import Fraction
from itertools import accumulate
from math import comb
from typing import Iterable, Tuple, Union

from .errors import SequenceError

logger = logging.getLogger(__name__)

Rational = Fraction
FiniteSeq = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]


def as_seq(values: Iterable[Number]) -> FiniteSeq:
    """Convert ints, Fractions or rational strings to a FiniteSeq."""
    return tuple(Fraction(v) for v in values)


def ones(n: int) -> FiniteSeq:
    """The all-one sequence of length n."""
    return (Fraction(1),) * n


def binom_ext(a: int, b: int) -> int:
    """Binomial coefficient with the extended conventions.

    C(a, b) is 0 for b < 0, 1 for b = 0 (any a), 0 for 0 <= a < b.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0:
        raise SequenceError(f"binom_ext undefined for negative a={a} with b={b}")
    if a < b:
        return 0
    return comb(a, b)


def seq_add(a: FiniteSeq, b: FiniteSeq) -> FiniteSeq:
    """Elementwise sum of two sequences of equal length."""
    if len(a) != len(b):
        raise SequenceError(f"cannot add sequences of lengths {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def seq_scale(factor: Number, a: FiniteSeq) -> FiniteSeq:
    """Multiply every entry by a scalar."""
    factor = Fraction(factor)
    return tuple(factor * x for x in a)


def sum_S(s: FiniteSeq) -> Fraction:
    """S(s): the sum of the entries; 0 for the empty sequence."""
    return sum(s, Fraction(0))


def moment_M(s: FiniteSeq) -> FiniteSeq:
    """M(s): the prefix-sum sequence."""
    return tuple(accumulate(s))


def moment_pow(s: FiniteSeq, k: int) -> FiniteSeq:
    """M^k(s) by k prefix-sum passes; M^0 is the identity."""
    if k < 0:
        raise SequenceError(f"moment order must be nonnegative, got {k}")
    for _ in range(k):
        s = moment_M(s)
    return tuple(s)


def moment_pow_closed(s: FiniteSeq, k: int) -> FiniteSeq:
    """M^k(s) by the closed form sum_{j<=i} C(k-1+i-j, k-1) s_j."""
    if k == 0:
        return tuple(s)
    return tuple(
        sum(
            (binom_ext(k - 1 + i - j, k - 1) * s[j - 1] for j in range(1, i + 1)),
            Fraction(0),
        )
        for i in range(1, len(s) + 1)
    )


def moment_ones(n: int, k: int) -> FiniteSeq:
    """M^k of the all-one sequence of length n, entry j being C(k-1+j, k)."""
    if n < 1:
        raise SequenceError(f"moment_ones needs n >= 1, got {n}")
    return tuple(Fraction(binom_ext(k - 1 + j, k)) for j in range(1, n + 1))


def sum_moment(s: FiniteSeq, k: int) -> Fraction:
    """S(M^k(s)) = sum_j C(k+n-j, k) s_j."""
    n = len(s)
    return sum(
        (binom_ext(k + n - j, k) * s[j - 1] for j in range(1, n + 1)), Fraction(0)
    )


def average_A(s: FiniteSeq) -> Fraction:
    """A(s): the average of a nonempty finite sequence."""
    if not s:
        raise SequenceError("average of an empty sequence")
    return sum_S(s) / len(s)


def moment_concat(X: FiniteSeq, Y: FiniteSeq, k: int) -> FiniteSeq:
    """M^k of the concatenation (X, Y), built from M^k(X) and M^k(Y).

    The tail is M^k(Y) + sum_{l=1..k} S(M^{k-l}(X)) * M^{l-1}(e_Y).
    """
    head = moment_pow(X, k)
    tail = moment_pow(Y, k)
    if Y:
        for level in range(1, k + 1):
            weight = sum_moment(X, k - level)
            tail = seq_add(tail, seq_scale(weight, moment_ones(len(Y), level - 1)))
    return head + tail


def sum_moment_concat_delta(X: FiniteSeq, Y: FiniteSeq, k: int) -> Fraction:
    """S(M^k(X, Y)) - S(M^k(X)).

    Expanded as S(M^k(Y)) + sum_{l=1..k} S(M^{k-l}(X)) * C(|Y|+l-1, l).
    """
    delta = sum_moment(Y, k)
    for level in range(1, k + 1):
        delta += sum_moment(X, k - level) * binom_ext(len(Y) + level - 1, level)
    return delta
