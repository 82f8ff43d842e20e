"""Division-free brute-force Pfaffian and determinant.

These are the ground truth every fast path is checked against, so they use
only ring operations and stay valid when the quadratic ring has zero divisors.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, ResourceError
from .scalar import QuadScalar
from .structmat import DenseMatrix, is_skew_symmetric

PFAFFIAN_ORDER_CAP = 16
LEIBNIZ_ORDER_CAP = 10
DET_ORDER_CAP = 14
CAP_ENV = "PFAFFKIT_ORACLE_CAP"


def oracle_cap(default: int = PFAFFIAN_ORDER_CAP) -> int:
    """Effective order cap; ``PFAFFKIT_ORACLE_CAP`` may lower it, never raise it."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    return max(0, min(value, default))


def perfect_matchings(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of ``0..n-1``, lowest unmatched index paired first."""

    def rec(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not free:
            yield ()
            return
        i, rest = free[0], free[1:]
        for pos, j in enumerate(rest):
            for tail in rec(rest[:pos] + rest[pos + 1 :]):
                yield ((i, j),) + tail

    if n % 2:
        return iter(())
    return rec(tuple(range(n)))


def matching_sign(matching: tuple[tuple[int, int], ...]) -> int:
    """Sign of the permutation ``(i1 j1 i2 j2 ...)``: ``(-1)`` to the number of crossings.

    Pairs ``(i, j)`` and ``(k, l)`` with ``i < j``, ``k < l`` cross when exactly
    one endpoint of the second lies strictly between the endpoints of the first.
    """
    crossings = 0
    for (i, j), (k, l) in itertools.combinations(matching, 2):
        if i < k < j < l or k < i < l < j:
            crossings += 1
    return -1 if crossings % 2 else 1


def _check_pfaffian_input(M: DenseMatrix) -> None:
    n = M.order
    if n % 2:
        raise DomainError(f"Pfaffian needs even order, got {n}")
    cap = oracle_cap()
    if n > cap:
        raise ResourceError(f"Pfaffian oracle capped at order {cap}, got {n}")
    if not is_skew_symmetric(M):
        raise DomainError("Pfaffian needs a skew-symmetric matrix")


def pfaffian_oracle(M: DenseMatrix) -> QuadScalar:
    """Signed sum over perfect matchings of ``prod M(i_t, j_t)``.

    Matchings whose partial product is already zero are pruned; this drops only
    zero terms, so the sum is unchanged.
    """
    _check_pfaffian_input(M)
    rows = M.rows
    one = QuadScalar(1, 0, M.alpha)
    total = QuadScalar(0, 0, M.alpha)

    # Same term order as perfect_matchings().
    def rec(free: tuple[int, ...], pairs: tuple[tuple[int, int], ...], prod: QuadScalar) -> None:
        nonlocal total
        if not free:
            total = total + prod * matching_sign(pairs)
            return
        i, rest = free[0], free[1:]
        for pos, j in enumerate(rest):
            x = rows[i][j]
            if not x:
                continue
            rec(rest[:pos] + rest[pos + 1 :], pairs + ((i, j),), prod * x)

    rec(tuple(range(M.order)), (), one)
    return total


def pfaffian_by_matchings(M: DenseMatrix) -> QuadScalar:
    """Unpruned matching sum, for cross-checking :func:`pfaffian_oracle`."""
    _check_pfaffian_input(M)
    rows = M.rows
    total = QuadScalar(0, 0, M.alpha)
    for matching in perfect_matchings(M.order):
        term = QuadScalar(matching_sign(matching), 0, M.alpha)
        for i, j in matching:
            term = term * rows[i][j]
        total = total + term
    return total


def permutation_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(M: DenseMatrix) -> QuadScalar:
    """Sum over all permutations; order at most 10."""
    n = M.order
    cap = min(LEIBNIZ_ORDER_CAP, oracle_cap())
    if n > cap:
        raise ResourceError(f"Leibniz determinant capped at order {cap}, got {n}")
    rows = M.rows
    total = QuadScalar(0, 0, M.alpha)
    for perm in itertools.permutations(range(n)):
        term = QuadScalar(permutation_sign(perm), 0, M.alpha)
        for i, j in enumerate(perm):
            x = rows[i][j]
            if not x:
                break
            term = term * x
        else:
            total = total + term
    return total


def det_oracle(M: DenseMatrix) -> QuadScalar:
    """Exact determinant by Laplace expansion along rows, memoised on column sets.

    Division-free and ``O(n 2^n)``; order at most 14.
    """
    n = M.order
    cap = min(DET_ORDER_CAP, oracle_cap())
    if n > cap:
        raise ResourceError(f"determinant oracle capped at order {cap}, got {n}")
    rows = M.rows
    zero = QuadScalar(0, 0, M.alpha)
    one = QuadScalar(1, 0, M.alpha)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> QuadScalar:
        # Determinant of rows row..n-1 restricted to the columns set in ``cols``.
        if row == n:
            return one
        acc = zero
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            x = rows[row][j]
            if x:
                sub = minor(row + 1, cols & ~(1 << j))
                if sub:
                    acc = acc + x * sub if sign > 0 else acc - x * sub
            sign = -sign
        return acc

    return minor(0, (1 << n) - 1)


def cayley_check(M: DenseMatrix) -> bool:
    """``det(M) == Pf(M)**2`` for a skew-symmetric matrix of even order."""
    pf = pfaffian_oracle(M)
    return det_oracle(M) == pf * pf
