"""Fibonacci, Pell and Jacobsthal numbers and the values they predict for F_2k."""
from __future__ import annotations

import enum

from .errors import DomainError
from .scalar import Params


class SequenceKind(enum.Enum):
    FIBONACCI = "fibonacci"
    PELL = "pell"
    JACOBSTHAL = "jacobsthal"

    @classmethod
    def parse(cls, name: str) -> SequenceKind:
        try:
            return cls(name.lower())
        except ValueError:
            raise DomainError(f"unknown sequence family: {name!r}") from None


# s_n = p s_{n-1} + q s_{n-2}, with s_1, s_2
_RECURRENCES = {
    SequenceKind.FIBONACCI: (1, 1, 1, 1),
    SequenceKind.PELL: (2, 1, 1, 2),
    SequenceKind.JACOBSTHAL: (1, 2, 1, 1),
}

_PARAMS = {
    SequenceKind.FIBONACCI: (-1, 1),  # a = i
    SequenceKind.PELL: (-1, 2),  # a = i
    SequenceKind.JACOBSTHAL: (-2, 1),  # a = i*sqrt(2)
}


def seq_value(kind: SequenceKind, n: int) -> int:
    """The n-th term (1-based)."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    p, q, s1, s2 = _RECURRENCES[kind]
    if n == 1:
        return s1
    prev, cur = s1, s2
    for _ in range(n - 2):
        prev, cur = cur, p * cur + q * prev
    return cur


def params_for(kind: SequenceKind) -> Params:
    alpha, b = _PARAMS[kind]
    return Params(alpha, b)


def expected_pf(kind: SequenceKind, k: int) -> int:
    """``+s_{k+1}`` when ``k % 4`` is 0 or 1, else ``-s_{k+1}``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    value = seq_value(kind, k + 1)
    return value if k % 4 in (0, 1) else -value


def expected_det(kind: SequenceKind, k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return seq_value(kind, k + 1) ** 2
