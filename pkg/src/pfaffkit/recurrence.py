"""O(k) Pfaffians of F_2k and G_2k via the coupled f/g recurrences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Sequence, overload

from .errors import DomainError
from .scalar import Params, integral_scaling


class IndexedSeq(Sequence[Fraction]):
    """Read-only sequence whose first element has index ``start`` (may be negative).

    ``s[i]`` means the term with index ``i``, never Python's from-the-end
    indexing.
    """

    __slots__ = ("_start", "_values")

    def __init__(self, start: int, values: Sequence[Fraction]):
        self._start = start
        self._values = tuple(values)

    @property
    def start(self) -> int:
        return self._start

    @property
    def stop(self) -> int:
        """Last valid index."""
        return self._start + len(self._values) - 1

    @overload
    def __getitem__(self, i: int) -> Fraction: ...
    @overload
    def __getitem__(self, i: slice) -> Sequence[Fraction]: ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            lo = self._start if i.start is None else i.start
            hi = self.stop + 1 if i.stop is None else i.stop
            return [self[j] for j in range(lo, hi, i.step or 1)]
        if not self._start <= i <= self.stop:
            raise IndexError(f"index {i} outside {self._start}..{self.stop}")
        return self._values[i - self._start]

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._values)

    def indices(self) -> range:
        return range(self._start, self.stop + 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IndexedSeq):
            return self._start == other._start and self._values == other._values
        return NotImplemented

    def __repr__(self) -> str:
        return f"IndexedSeq(start={self._start}, values={list(map(str, self._values))})"


@dataclass(frozen=True)
class SeqTriple:
    """``f`` and ``g`` indexed ``-1..m`` together with the parameters that made them."""

    f: IndexedSeq
    g: IndexedSeq
    params: Params


def _check_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m!r}")


def _lift(x: Fraction) -> int | Fraction:
    # Integer parameters keep the loop on plain ints, which is much faster.
    return x.numerator if x.denominator == 1 else x


def coupled_fg(m: int, p: Params) -> SeqTriple:
    """``f_n = b g_{n-1} + alpha f_{n-2}``, ``g_n = -b f_{n-1} + alpha g_{n-2}``.

    Seeds ``f_{-1} = g_{-1} = 0`` and ``f_0 = g_0 = 1`` give ``f_1 = b`` and
    ``g_1 = -b``.
    """
    _check_m(m)
    alpha, b = _lift(p.alpha), _lift(p.b)
    f = [0, 1]
    g = [0, 1]
    for _ in range(m):
        f_next = b * g[-1] + alpha * f[-2]
        g_next = -b * f[-1] + alpha * g[-2]
        f.append(f_next)
        g.append(g_next)
    return SeqTriple(
        IndexedSeq(-1, [Fraction(x) for x in f]),
        IndexedSeq(-1, [Fraction(x) for x in g]),
        p,
    )


def single_f(m: int, p: Params) -> IndexedSeq:
    """``f_n = (-1)^(n-1) b f_{n-1} + alpha f_{n-2}`` from ``f_{-1} = 0, f_0 = 1``."""
    _check_m(m)
    alpha, b = _lift(p.alpha), _lift(p.b)
    f = [0, 1]
    for n in range(1, m + 1):
        step = b * f[-1]
        f.append((step if n % 2 == 1 else -step) + alpha * f[-2])
    return IndexedSeq(-1, [Fraction(x) for x in f])


def pf_fast(k: int, p: Params, which: Literal["F", "G"] = "F") -> Fraction:
    """``Pf(F_2k)`` (``which="F"``) or ``Pf(G_2k)`` in O(k) operations."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if which not in ("F", "G"):
        raise DomainError(f"which must be 'F' or 'G', got {which!r}")
    q, scale = integral_scaling(p)
    alpha, b = int(q.alpha), int(q.b)
    f_prev, f_cur = 0, 1
    g_prev, g_cur = 0, 1
    for _ in range(k):
        f_prev, f_cur, g_prev, g_cur = (
            f_cur,
            b * g_cur + alpha * f_prev,
            g_cur,
            -b * f_cur + alpha * g_prev,
        )
    return Fraction(f_cur if which == "F" else g_cur, scale**k)
