"""Determinant of F_2k through T_k: tridiagonal blocks and closed forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, SingularExtensionError
from .recurrence import IndexedSeq
from .scalar import Params, as_rational, integral_scaling
from .structmat import DenseMatrix, gen_split_blocks


@dataclass(frozen=True)
class TridiagSpec:
    """Diagonal ``d`` (length n), subdiagonal ``lo`` and superdiagonal ``hi`` (n-1 each).

    ``lo[t]`` is entry ``(t+2, t+1)`` and ``hi[t]`` is entry ``(t+1, t+2)``.
    """

    d: tuple[Fraction, ...]
    lo: tuple[Fraction, ...]
    hi: tuple[Fraction, ...]

    def __init__(
        self,
        d: Sequence[object],
        lo: Sequence[object] = (),
        hi: Sequence[object] = (),
    ):
        object.__setattr__(self, "d", tuple(as_rational(x) for x in d))
        object.__setattr__(self, "lo", tuple(as_rational(x) for x in lo))
        object.__setattr__(self, "hi", tuple(as_rational(x) for x in hi))
        expected = max(len(self.d) - 1, 0)
        if len(self.lo) != expected or len(self.hi) != expected:
            raise DomainError(
                f"off-diagonals must have length {expected}, "
                f"got {len(self.lo)} and {len(self.hi)}"
            )

    @property
    def order(self) -> int:
        return len(self.d)

    @classmethod
    def from_matrix(cls, M: DenseMatrix) -> TridiagSpec:
        """Read the three bands of a rational matrix; anything else must be zero."""
        n = M.order
        rows = M.rows
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if abs(i - j) > 1 and x:
                    raise DomainError(f"entry ({i + 1}, {j + 1}) lies outside the three bands")
        return cls(
            [rows[i][i].to_rational() for i in range(n)],
            [rows[i + 1][i].to_rational() for i in range(n - 1)],
            [rows[i][i + 1].to_rational() for i in range(n - 1)],
        )


def tridiag_det(t: TridiagSpec) -> Fraction:
    """``v_i = d_i v_{i-1} - lo_i hi_{i-1} v_{i-2}`` with ``v_0 = 1``, ``v_{-1} = 0``."""
    v_prev, v = Fraction(0), Fraction(1)
    for i, d in enumerate(t.d):
        coupling = t.lo[i - 1] * t.hi[i - 1] if i else 0
        v_prev, v = v, d * v - coupling * v_prev
    return v


def w_seq(m: int, p: Params, lo: int = -1) -> IndexedSeq:
    """Terms ``w_lo .. w_m`` of ``w_i = (b^2 - 2 alpha) w_{i-1} - alpha^2 w_{i-2}``.

    ``w_{-1} = 0``, ``w_0 = 1``. With ``lo = -2`` the recurrence is run backwards
    once, giving ``w_{-2} = -1/alpha^2``; that needs ``alpha != 0``.
    """
    if lo not in (-1, -2):
        raise DomainError(f"lo must be -1 or -2, got {lo!r}")
    if not isinstance(m, int) or m < lo:
        raise DomainError(f"m must be an integer >= {lo}, got {m!r}")
    alpha, b = p.alpha, p.b
    c = b * b - 2 * alpha
    a4 = alpha * alpha
    if alpha.denominator == 1 and b.denominator == 1:
        c, a4 = int(c), int(a4)
    values = [0, 1]
    for _ in range(m):
        values.append(c * values[-1] - a4 * values[-2])
    values = values[: m + 2]
    if lo == -2:
        if a4 == 0:
            raise SingularExtensionError("w_{-2} = -1/alpha^2 is undefined for alpha = 0")
        values.insert(0, Fraction(-1) / Fraction(a4))
    return IndexedSeq(lo, [Fraction(x) for x in values])


def det_closed(k: int, p: Params) -> Fraction:
    """``det(F_2k)`` from the w-sequence closed forms.

    Odd k: ``w_{(k-1)/2} (s^2 w_{(k-3)/2} - 2 alpha^2 s w_{(k-5)/2} + alpha^4 w_{(k-7)/2})``.
    Even k: ``(s w_{k/2-1} - alpha^2 w_{k/2-2})^2``, where ``s = b^2 - alpha``.

    ``k = 1`` is ``b^2`` directly. ``k = 3`` reaches ``w_{-2}``; with ``alpha = 0``
    that term is undefined and the block route is used instead. Non-integral
    parameters are scaled to integers first and the result divided by ``L^(2k)``.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    q, scale = integral_scaling(p)
    if scale != 1:
        return det_closed(k, q) / scale ** (2 * k)
    alpha, b = p.alpha, p.b
    if k == 1:
        return b * b
    s = b * b - alpha
    a2 = alpha * alpha
    if k % 2 == 0:
        h = k // 2
        w = w_seq(h - 1, p)
        root = s * w[h - 1] - a2 * w[h - 2]
        return root * root
    if k == 3 and alpha == 0:
        return det_blockdiag(k, p)
    h = (k - 1) // 2
    w = w_seq(h, p, lo=-2 if k == 3 else -1)
    return w[h] * (
        s * s * w[h - 1] - 2 * a2 * s * w[h - 2] + a2 * a2 * w[h - 3]
    )


def det_blockdiag(k: int, p: Params) -> Fraction:
    """Product of the tridiagonal determinants of the two split blocks of ``T_k``."""
    first, second = gen_split_blocks(k, p)
    return tridiag_det(TridiagSpec.from_matrix(first)) * tridiag_det(
        TridiagSpec.from_matrix(second)
    )
