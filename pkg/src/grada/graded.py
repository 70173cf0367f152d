"""Pieces shared by the ring engines and the analysis layer."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FamilyCertificate:
    """Why finitely many checks may speak for infinitely many degrees.

    ``periodic``: degrees outside the window behave like the far representatives
    the engine hands out, so window checks plus far checks cover all of G.
    ``orthogonal_tail``: every element of S_C S_{C^-1} is a finite combination of
    the engine's generators, so a nonzero far generator orthogonal to a candidate
    unit shows that no unit exists.
    """

    description: str
    periodic: bool = True
    orthogonal_tail: bool = False


class QuiverMismatch(ValueError):
    pass


class MissingEpsilonFamily(ValueError):
    pass
