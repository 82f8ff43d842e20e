"""Exact scalars: rationals and the quadratic ring Q[a]/(a**2 - alpha).

Rationals are plain :class:`fractions.Fraction` values, which are already
canonical (positive denominator, reduced) after every operation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DomainError, RingMismatchError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"`` (ASCII base 10, no whitespace)."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise DomainError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def as_rational(x: RationalLike) -> Fraction:
    if type(x) is Fraction:
        return x
    if type(x) is int:
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class Params:
    """Parameter pair driving every generator: ``alpha`` is a**2, plus ``b``."""

    alpha: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "b", as_rational(self.b))

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, b={self.b})"


class QuadScalar:
    """Immutable element ``u + v*a`` of Q[a] with ``a*a == alpha``.

    Plain ints and Fractions are promoted to ``v = 0`` elements of the ring of
    the other operand. There is deliberately no division: for square alpha the
    ring has zero divisors.
    """

    __slots__ = ("_u", "_v", "_alpha")

    def __init__(self, u: RationalLike = 0, v: RationalLike = 0, alpha: RationalLike = -1):
        self._u = as_rational(u)
        self._v = as_rational(v)
        self._alpha = as_rational(alpha)

    @classmethod
    def gen(cls, alpha: RationalLike) -> QuadScalar:
        """The generator ``a`` itself."""
        return cls(0, 1, alpha)

    @property
    def u(self) -> Fraction:
        return self._u

    @property
    def v(self) -> Fraction:
        return self._v

    @property
    def alpha(self) -> Fraction:
        return self._alpha

    @property
    def is_rational(self) -> bool:
        return self._v == 0

    def is_zero(self) -> bool:
        return self._u == 0 and self._v == 0

    def _coerce(self, other: object) -> QuadScalar | None:
        if isinstance(other, QuadScalar):
            if other._alpha != self._alpha:
                raise RingMismatchError(
                    f"alpha mismatch: {self._alpha} vs {other._alpha}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadScalar(other, 0, self._alpha)
        return None

    def __add__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self._u + o._u, self._v + o._v, self._alpha)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self._u - o._u, self._v - o._v, self._alpha)

    def __rsub__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        u1, v1, u2, v2 = self._u, self._v, o._u, o._v
        if v1 == 0 and v2 == 0:
            return QuadScalar(u1 * u2, 0, self._alpha)
        return QuadScalar(
            u1 * u2 + self._alpha * v1 * v2, u1 * v2 + v1 * u2, self._alpha
        )

    __rmul__ = __mul__

    def __neg__(self) -> QuadScalar:
        return QuadScalar(-self._u, -self._v, self._alpha)

    def __pos__(self) -> QuadScalar:
        return self

    def __pow__(self, n: int) -> QuadScalar:
        if not isinstance(n, int) or n < 0:
            raise DomainError("only non-negative integer powers are defined")
        result = QuadScalar(1, 0, self._alpha)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadScalar):
            if other._alpha != self._alpha:
                raise RingMismatchError(
                    f"alpha mismatch: {self._alpha} vs {other._alpha}"
                )
            return self._u == other._u and self._v == other._v
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._v == 0 and self._u == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._v == 0:
            return hash(self._u)
        return hash((self._u, self._v, self._alpha))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_rational(self) -> Fraction:
        if self._v != 0:
            raise DomainError(f"{self} has a nonzero a-component")
        return self._u

    def __repr__(self) -> str:
        return f"QuadScalar({self._u!s}, {self._v!s}, alpha={self._alpha!s})"

    def __str__(self) -> str:
        if self._v == 0:
            return str(self._u)
        if self._v < 0:
            return f"{self._u} - {-self._v}*a"
        return f"{self._u} + {self._v}*a"


def quad_add(x: QuadScalar, y: QuadScalar) -> QuadScalar:
    return x + y


def quad_sub(x: QuadScalar, y: QuadScalar) -> QuadScalar:
    return x - y


def quad_mul(x: QuadScalar, y: QuadScalar) -> QuadScalar:
    return x * y


def quad_neg(x: QuadScalar) -> QuadScalar:
    return -x


def quad_eq(x: QuadScalar, y: QuadScalar) -> bool:
    return x == y


def integral_scaling(p: Params) -> tuple[Params, int]:
    """Return ``(q, L)`` with ``q = (alpha L^2, b L)`` integral.

    Every entry of F_2k scales by ``L`` under ``a -> L a``, ``b -> L b``, so
    ``Pf`` scales by ``L^k`` and ``det`` by ``L^(2k)``. Running the recurrences
    on ``q`` keeps them on plain integers.
    """
    scale = p.b.denominator * p.alpha.denominator
    if scale == 1:
        return p, 1
    return Params(p.alpha * scale * scale, p.b * scale), scale
