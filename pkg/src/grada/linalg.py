"""Exact span membership over Q with sparse coordinate vectors.

Vectors are dicts from sortable coordinate keys to Fractions.  A Span keeps
its rows in reduced echelon form, so membership is a single reduction pass.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _axpy(v: dict, c: Fraction, row: dict) -> None:
    # v -= c * row, in place, dropping zeros
    for k, x in row.items():
        y = v.get(k, 0) - c * x
        if y:
            v[k] = y
        else:
            v.pop(k, None)


class Span:
    def __init__(self, vectors: Iterable[dict] = ()):
        self.rows: dict = {}  # pivot key -> row with coefficient 1 at the pivot
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = dict(vec)
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c:
                _axpy(v, c, self.rows[p])
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        v = {k: x / c for k, x in v.items()}
        for q, row in self.rows.items():
            if p in row:
                _axpy(row, row[p], v)
        self.rows[p] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]
