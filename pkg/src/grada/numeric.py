"""Exact scalars and bi-infinite rational sequences with finitely many exceptions.

A :class:`FinExSeq` is a function Z -> Q that equals ``default`` everywhere
except at finitely many positions.  These form a unital subring of the full
product of copies of Q, closed under the shift automorphisms.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

_add, _sub, _mul = operator.add, operator.sub, operator.mul


def rat(x) -> Fraction:
    """Parse ints, Fractions and ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a 'p/q' string")
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class FinExSeq:
    default: Fraction
    exceptions: tuple[tuple[int, Fraction], ...]  # sorted, no entry equal to default

    def at(self, i: int) -> Fraction:
        return self._map.get(i, self.default)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self._map)

    def positions(self) -> set[int]:
        return {j for j, _ in self.exceptions}

    @cached_property
    def _map(self) -> dict[int, Fraction]:
        return dict(self.exceptions)

    def _combine(self, other: FinExSeq, f) -> FinExSeq:
        a, b = self._map, other._map
        da, db = self.default, other.default
        d = f(da, db)
        exc = {}
        for j, v in a.items():
            w = f(v, b.get(j, db))
            if w != d:
                exc[j] = w
        for j, v in b.items():
            if j not in a:
                w = f(da, v)
                if w != d:
                    exc[j] = w
        return FinExSeq(d, tuple(sorted(exc.items())))

    def __add__(self, other: FinExSeq) -> FinExSeq:
        return self._combine(other, _add)

    def __sub__(self, other: FinExSeq) -> FinExSeq:
        return self._combine(other, _sub)

    def __mul__(self, other):
        if isinstance(other, FinExSeq):
            if self.default == 0 and other.default == 0:
                # only the common exceptions survive
                a, b = self._map, other._map
                if len(b) < len(a):
                    a, b = b, a
                exc = tuple(sorted((j, v * b[j]) for j, v in a.items() if j in b and v * b[j] != 0))
                return FinExSeq(self.default, exc)
            return self._combine(other, _mul)
        c = rat(other)
        return seq_make(self.default * c, {j: v * c for j, v in self.exceptions})

    __rmul__ = __mul__

    def __neg__(self) -> FinExSeq:
        return self * -1

    def is_zero(self) -> bool:
        return self.default == 0 and not self.exceptions

    def shift(self, n: int) -> FinExSeq:
        return seq_shift(self, n)

    def coords(self) -> dict:
        """Coordinates in the basis {1} + {e_i}: a = d*1 + sum (a_i - d) e_i."""
        out = {}
        if self.default:
            out[(0, 0)] = self.default
        for j, v in self.exceptions:
            out[(1, j)] = v - self.default
        return out

    def __str__(self) -> str:
        if not self.exceptions:
            return f"const({self.default})"
        if self.default == 0:
            terms = [f"{v}*e{j}" if v != 1 else f"e{j}" for j, v in self.exceptions]
            return " + ".join(terms)
        exc = ", ".join(f"{j}:{v}" for j, v in self.exceptions)
        return f"({self.default}; {{{exc}}})"

    def to_json(self) -> dict:
        return {"default": str(self.default), "exceptions": {str(j): str(v) for j, v in self.exceptions}}


def seq_make(default, exceptions: Mapping[int, object] | Iterable[tuple[int, object]] = ()) -> FinExSeq:
    d = rat(default)
    items = exceptions.items() if isinstance(exceptions, Mapping) else exceptions
    exc = {}
    for j, v in items:
        exc[int(j)] = rat(v)
    return FinExSeq(d, tuple(sorted((j, v) for j, v in exc.items() if v != d)))


def seq_from_json(obj) -> FinExSeq:
    if isinstance(obj, (int, str)):
        return seq_make(obj)
    return seq_make(obj.get("default", 0), obj.get("exceptions", {}))


def seq_add(a: FinExSeq, b: FinExSeq) -> FinExSeq:
    return a + b


def seq_mul(a: FinExSeq, b: FinExSeq) -> FinExSeq:
    return a * b


def seq_shift(a: FinExSeq, n: int) -> FinExSeq:
    """Bilateral shift: the result at position j is ``a`` at position j - n."""
    if n == 0:
        return a
    return FinExSeq(a.default, tuple((j + n, v) for j, v in a.exceptions))


def seq_reflect(a: FinExSeq) -> FinExSeq:
    """j -> a(-j)."""
    return seq_make(a.default, {-j: v for j, v in a.exceptions})


def seq_is_idempotent(a: FinExSeq) -> bool:
    return a.default in (0, 1) and all(v in (0, 1) for _, v in a.exceptions)


def kron(i: int, q=1) -> FinExSeq:
    """q times the Kronecker sequence e_i."""
    return seq_make(0, {i: q})


def const(c) -> FinExSeq:
    return seq_make(c)


ZERO = const(0)
ONE = const(1)
