"""Dense exact matrices and the structured families built from (alpha, b).

Public indexing is 1-based: ``M[i, j]`` with ``1 <= i, j <= M.order``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DomainError, RingMismatchError, StructuralError
from .scalar import Params, QuadScalar, RationalLike, as_rational


class DenseMatrix:
    """Square, immutable matrix of :class:`QuadScalar` sharing one alpha.

    Order 0 is allowed (it arises as the empty leading block for ``k = 1``)
    and has determinant 1.
    """

    __slots__ = ("_rows", "_alpha")

    def __init__(self, rows: Iterable[Iterable[object]], alpha: RationalLike = -1):
        alpha = as_rational(alpha)
        lifted: dict[object, QuadScalar] = {}  # plain values are mostly repeated zeros
        built = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, QuadScalar):
                    if x.alpha != alpha:
                        raise RingMismatchError(
                            f"entry alpha {x.alpha} differs from matrix alpha {alpha}"
                        )
                    r.append(x)
                else:
                    q = lifted.get(x)
                    if q is None:
                        q = lifted[x] = QuadScalar(as_rational(x), 0, alpha)
                    r.append(q)
            built.append(tuple(r))
        n = len(built)
        if any(len(r) != n for r in built):
            raise DomainError("matrix must be square")
        self._rows: tuple[tuple[QuadScalar, ...], ...] = tuple(built)
        self._alpha = alpha

    @classmethod
    def from_function(
        cls, n: int, fn: Callable[[int, int], object], alpha: RationalLike
    ) -> DenseMatrix:
        """Build an order-``n`` matrix from ``fn(i, j)`` with 1-based indices."""
        return cls(
            ([fn(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)), alpha
        )

    @classmethod
    def zeros(cls, n: int, alpha: RationalLike = -1) -> DenseMatrix:
        return cls.from_function(n, lambda i, j: 0, alpha)

    @classmethod
    def identity(cls, n: int, alpha: RationalLike = -1) -> DenseMatrix:
        return cls.from_function(n, lambda i, j: 1 if i == j else 0, alpha)

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def alpha(self) -> Fraction:
        return self._alpha

    @property
    def rows(self) -> tuple[tuple[QuadScalar, ...], ...]:
        """0-based row tuples, for internal fast loops."""
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> QuadScalar:
        i, j = ij
        n = self.order
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"index ({i}, {j}) out of range for order {n}")
        return self._rows[i - 1][j - 1]

    def _check(self, other: DenseMatrix) -> None:
        if other.order != self.order:
            raise DomainError(f"order mismatch: {self.order} vs {other.order}")
        if other.alpha != self.alpha:
            raise RingMismatchError(f"alpha mismatch: {self.alpha} vs {other.alpha}")

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        self._check(other)
        return DenseMatrix(
            ([x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            self._alpha,
        )

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        self._check(other)
        return DenseMatrix(
            ([x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            self._alpha,
        )

    def __neg__(self) -> DenseMatrix:
        return DenseMatrix(([-x for x in r] for r in self._rows), self._alpha)

    def scale(self, c: object) -> DenseMatrix:
        return DenseMatrix(([x * c for x in r] for r in self._rows), self._alpha)

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        self._check(other)
        n = self.order
        cols = list(zip(*other._rows)) if n else []
        zero = QuadScalar(0, 0, self._alpha)
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return DenseMatrix(out, self._alpha)

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(zip(*self._rows), self._alpha) if self.order else self

    @property
    def T(self) -> DenseMatrix:
        return self.transpose()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.order == other.order
            and self.alpha == other.alpha
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._alpha, self._rows))

    def is_rational(self) -> bool:
        return all(x.is_rational for r in self._rows for x in r)

    def submatrix(self, indices: Sequence[int]) -> DenseMatrix:
        """Principal submatrix on the given 1-based indices, in that order."""
        return DenseMatrix(
            ([self._rows[i - 1][j - 1] for j in indices] for i in indices), self._alpha
        )

    def to_text(self) -> str:
        cells = [[str(x) for x in r] for r in self._rows]
        if not cells:
            return "[]"
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        return f"DenseMatrix(order={self.order}, alpha={self.alpha})"

    def __str__(self) -> str:
        return self.to_text()


def block(
    top_left: DenseMatrix,
    top_right: DenseMatrix,
    bottom_left: DenseMatrix,
    bottom_right: DenseMatrix,
) -> DenseMatrix:
    """Assemble a 2x2 block matrix from four equal-order blocks."""
    k = top_left.order
    for m in (top_right, bottom_left, bottom_right):
        top_left._check(m)
    top = [list(a) + list(b) for a, b in zip(top_left.rows, top_right.rows)]
    bottom = [list(a) + list(b) for a, b in zip(bottom_left.rows, bottom_right.rows)]
    assert len(top) == k
    return DenseMatrix(top + bottom, top_left.alpha)


def block_diag(first: DenseMatrix, second: DenseMatrix) -> DenseMatrix:
    if first.alpha != second.alpha:
        raise RingMismatchError("alpha mismatch in block_diag")
    p, q = first.order, second.order

    def entry(i: int, j: int) -> object:
        if i <= p and j <= p:
            return first.rows[i - 1][j - 1]
        if i > p and j > p:
            return second.rows[i - p - 1][j - p - 1]
        return 0

    return DenseMatrix.from_function(p + q, entry, first.alpha)


def _require_order(k: int, name: str = "k") -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"{name} must be a positive integer, got {k!r}")


def gen_A(k: int, p: Params) -> DenseMatrix:
    """``a`` on the superdiagonal, ``-a`` on the subdiagonal."""
    _require_order(k)
    a = QuadScalar.gen(p.alpha)

    def entry(i: int, j: int) -> object:
        if j == i + 1:
            return a
        if i == j + 1:
            return -a
        return 0

    return DenseMatrix.from_function(k, entry, p.alpha)


def gen_B(k: int, p: Params) -> DenseMatrix:
    """Anti-diagonal with alternating signs ``b, -b, b, ...`` from the top row."""
    _require_order(k)

    def entry(i: int, j: int) -> object:
        if i + j == k + 1:
            return p.b if i % 2 == 1 else -p.b
        return 0

    return DenseMatrix.from_function(k, entry, p.alpha)


def gen_F(k: int, p: Params) -> DenseMatrix:
    """Order-2k matrix ``[[A, B], [(-1)^k B, A]]``."""
    A, B = gen_A(k, p), gen_B(k, p)
    return block(A, B, B if k % 2 == 0 else -B, A)


def gen_G(k: int, p: Params) -> DenseMatrix:
    """Order-2k matrix ``[[A, -B], [(-1)^(k+1) B, A]]``."""
    A, B = gen_A(k, p), gen_B(k, p)
    return block(A, -B, -B if k % 2 == 0 else B, A)


def gen_J(n: int, alpha: RationalLike = -1) -> DenseMatrix:
    """Exchange matrix: ones on the anti-diagonal."""
    _require_order(n, "n")
    return DenseMatrix.from_function(n, lambda i, j: 1 if i + j == n + 1 else 0, alpha)


def _t_diag(i: int, k: int, p: Params) -> Fraction:
    # -alpha for each neighbour of i on the path 1..k, i.e. the diagonal of A_k^2.
    neighbours = (i > 1) + (i < k)
    return p.b * p.b - neighbours * p.alpha


def gen_T(k: int, p: Params) -> DenseMatrix:
    """The k x k 2-banded matrix with ``det(T_k) == det(F_2k)``.

    Diagonal ``b^2 - alpha`` at both ends and ``b^2 - 2 alpha`` inside, ``alpha``
    at distance two. For ``k = 1`` the single entry is ``b^2``: there is no
    neighbour contributing ``-alpha``, which is what :func:`schur_reduce` gives.
    """
    _require_order(k)

    def entry(i: int, j: int) -> object:
        if i == j:
            return _t_diag(i, k, p)
        if abs(i - j) == 2:
            return p.alpha
        return 0

    return DenseMatrix.from_function(k, entry, p.alpha)


def schur_reduce(F: DenseMatrix, k: int) -> DenseMatrix:
    """Collapse ``F = [[A, B], [C, A]]`` to ``A A - B C`` after checking ``A C == C A``."""
    _require_order(k)
    if F.order != 2 * k:
        raise DomainError(f"expected order {2 * k}, got {F.order}")
    first, second = range(1, k + 1), range(k + 1, 2 * k + 1)

    def sub(rows: range, cols: range) -> DenseMatrix:
        return DenseMatrix(([F[i, j] for j in cols] for i in rows), F.alpha)

    A, B = sub(first, first), sub(first, second)
    C, D = sub(second, first), sub(second, second)
    if A @ C != C @ A:
        raise StructuralError("blocks do not commute: A C != C A")
    return A @ D - B @ C


def gen_split_blocks(k: int, p: Params) -> tuple[DenseMatrix, DenseMatrix]:
    """Tridiagonal blocks of ``T_k`` after the even/odd split.

    Odd ``k`` gives ``(H, K)`` of orders ``(k-1)/2, (k+1)/2``; even ``k`` gives
    ``(N, Q)`` of order ``k/2`` each. Off-diagonals are ``alpha``, the interior
    diagonal is ``b^2 - 2 alpha`` and ``b^2 - alpha`` sits where the block
    touches an end of ``T_k`` (K: both ends, N: last, Q: first, H: none).
    ``k = 1`` gives an empty first block and ``[b^2]``.
    """
    _require_order(k)
    edge = p.b * p.b - p.alpha
    inner = p.b * p.b - 2 * p.alpha

    def tridiag(m: int, ends: set[int]) -> DenseMatrix:
        def entry(i: int, j: int) -> object:
            if i == j:
                return edge if i in ends else inner
            if abs(i - j) == 1:
                return p.alpha
            return 0

        return DenseMatrix.from_function(m, entry, p.alpha)

    if k == 1:
        return DenseMatrix([], p.alpha), gen_T(1, p)
    if k % 2 == 1:
        h = (k - 1) // 2
        return tridiag(h, set()), tridiag(h + 1, {1, h + 1})
    h = k // 2
    return tridiag(h, {h}), tridiag(h, {1})


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``1..size``.

    ``order`` lists source indices in their new positions: position ``i``
    (1-based) of the permuted object holds source index ``order[i-1]``.
    """

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise DomainError(f"not a permutation of 1..n: {self.order}")

    @property
    def size(self) -> int:
        return len(self.order)

    def src(self, i: int) -> int:
        return self.order[i - 1]

    def dest(self, source: int) -> int:
        """Position that source index ``source`` is moved to."""
        return self.order.index(source) + 1

    @property
    def map(self) -> tuple[int, ...]:
        """``map[i-1]`` is the destination of source index ``i``."""
        return tuple(self.dest(i) for i in range(1, self.size + 1))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def matrix(self, alpha: RationalLike = -1) -> DenseMatrix:
        """Permutation matrix P with ``(P^T M P)[i, j] == M[src(i), src(j)]``."""
        return DenseMatrix.from_function(
            self.size, lambda i, j: 1 if i == self.src(j) else 0, alpha
        )


def gen_permutation(k: int) -> Permutation:
    """Even source indices first, then odd ones."""
    _require_order(k)
    return Permutation(tuple(range(2, k + 1, 2)) + tuple(range(1, k + 1, 2)))


def permute_conjugate(M: DenseMatrix, P: Permutation) -> DenseMatrix:
    if M.order != P.size:
        raise DomainError(f"order mismatch: matrix {M.order}, permutation {P.size}")
    return M.submatrix(P.order)


def is_skew_symmetric(M: DenseMatrix) -> bool:
    n = M.order
    rows = M.rows
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(i, n))


def is_skew_centrosymmetric(M: DenseMatrix) -> bool:
    """``J M J == -M``: every entry is negated by a half-turn of the matrix."""
    n = M.order
    rows = M.rows
    return all(
        rows[n - 1 - i][n - 1 - j] == -rows[i][j] for i in range(n) for j in range(n)
    )
