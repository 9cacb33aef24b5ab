"""
Binomial Identities
===================

Evaluators for the binomial identities and the concatenation expansions
that the moment formulas rest on. Every function returns ``(lhs, rhs)``
computed independently, so callers can check them for equality.
"""

from fractions import Fraction
from typing import Tuple

from .sequences import (
    FiniteSeq,
    binom_ext,
    moment_concat,
    moment_pow,
    moment_ones,
    sum_moment,
    sum_S,
)

Pair = Tuple[Fraction, Fraction]


def hockey_stick(a: int, k: int) -> Tuple[int, int]:
    """sum_{j=0..k} C(a+j, a) against C(a+k+1, k)."""
    lhs = sum(binom_ext(a + j, a) for j in range(k + 1))
    return lhs, binom_ext(a + k + 1, k)


def ones_moment_sum(size: int, level: int) -> Tuple[int, int]:
    """S(M^{l-1}(e_Y)) against C(|Y|+l-1, l), for l >= 1."""
    lhs = int(sum_S(moment_ones(size, level - 1))) if size else 0
    return lhs, binom_ext(size + level - 1, level)


def alternating_difference(N: int, X: int, R: int) -> Tuple[int, int]:
    """sum_u (-1)^u C(N,u) C(X-u,R) against C(X-N, X-R); needs N <= X."""
    lhs = sum((-1) ** u * binom_ext(N, u) * binom_ext(X - u, R) for u in range(N + 1))
    return lhs, binom_ext(X - N, X - R)


def upper_convolution(X: int, Y: int, N: int) -> Tuple[int, int]:
    """sum_u C(X+u,u) C(Y+N-u,N-u) against C(X+Y+N+1, N)."""
    lhs = sum(binom_ext(X + u, u) * binom_ext(Y + N - u, N - u) for u in range(N + 1))
    return lhs, binom_ext(X + Y + N + 1, N)


def ones_convolution(size_y: int, size_z: int, level: int) -> Tuple[int, int]:
    """sum_m C(|Y|+l-1-m, l-m) C(|Z|+m-1, m) against C(|Y|+|Z|+l-1, l)."""
    lhs = sum(
        binom_ext(size_y + level - 1 - m, level - m) * binom_ext(size_z + m - 1, m)
        for m in range(level + 1)
    )
    return lhs, binom_ext(size_y + size_z + level - 1, level)


def split_identity(X: int, k: int) -> Tuple[int, int]:
    """sum_j (-1)^j 2^{k-2j} C(k-j,j) C(X+k-j,k-j) against C(2X+k+1, k)."""
    lhs = sum(
        (-1) ** j * 2 ** (k - 2 * j) * binom_ext(k - j, j) * binom_ext(X + k - j, k - j)
        for j in range(k // 2 + 1)
    )
    return lhs, binom_ext(2 * X + k + 1, k)


def concat_sum_expansion(X: FiniteSeq, Y: FiniteSeq, k: int) -> Pair:
    """S(M^k(X,Y)) directly against its expansion over X and Y separately."""
    rhs = sum_moment(X, k) + sum_moment(Y, k)
    for level in range(1, k + 1):
        rhs += sum_moment(X, k - level) * binom_ext(len(Y) + level - 1, level)
    return sum_S(moment_pow(X + Y, k)), rhs


def concat_moment_expansion(
    X: FiniteSeq, Y: FiniteSeq, Z: FiniteSeq, k: int
) -> Tuple[FiniteSeq, FiniteSeq]:
    """M^k(X,Y,Z) directly against the concat rule with (Y,Z) as one block."""
    return moment_pow(X + Y + Z, k), moment_concat(X, Y + Z, k)


def triple_sum_expansion(X: FiniteSeq, Y: FiniteSeq, Z: FiniteSeq, k: int) -> Pair:
    """S(M^k(X,Y,Z)) directly against the three-block expansion."""
    rhs = sum_moment(X, k) + sum_moment(Y, k) + sum_moment(Z, k)
    for level in range(1, k + 1):
        rhs += sum_moment(X, k - level) * binom_ext(len(Y) + len(Z) + level - 1, level)
        rhs += sum_moment(Y, k - level) * binom_ext(len(Z) + level - 1, level)
    return sum_S(moment_pow(X + Y + Z, k)), rhs


def deletion_expansion(X: FiniteSeq, Y: FiniteSeq, Z: FiniteSeq, k: int) -> Pair:
    """S(M^k(X,Y,Z)) against S(M^k(X,Z)) plus the weighted deltas of (X,Y)."""
    rhs = sum_moment(X + Z, k)
    for level in range(k + 1):
        delta = sum_moment(X + Y, level) - sum_moment(X, level)
        rhs += binom_ext(len(Z) + k - 1 - level, k - level) * delta
    return sum_S(moment_pow(X + Y + Z, k)), rhs
