"""Idempotent order, joins and local-unit constructions.

Everything here is generic over a carrier whose elements support ``+``, ``-``,
``*`` and exact ``==``.  The join ``a + b - ab`` is only used for commuting
idempotents.
"""
from __future__ import annotations

from typing import Iterable, Sequence, TypeVar

T = TypeVar("T")


class NotIdempotent(ValueError):
    pass


class NonCommuting(ValueError):
    pass


class BadWitness(ValueError):
    pass


def _zero(a):
    return a - a


def is_idempotent(a) -> bool:
    return a * a == a


def _require_idempotent(*xs) -> None:
    for x in xs:
        if not is_idempotent(x):
            raise NotIdempotent(str(x))


def commute(a, b) -> bool:
    return a * b == b * a


def idem_leq(a, b) -> bool:
    """a <= b  iff  a = ab = ba."""
    _require_idempotent(a, b)
    return a * b == a and b * a == a


def idem_join(a, b):
    if not commute(a, b):
        raise NonCommuting(f"{a} and {b} do not commute")
    return a + b - a * b


def idem_meet(a, b):
    if not commute(a, b):
        raise NonCommuting(f"{a} and {b} do not commute")
    return a * b


def are_orthogonal(a, b) -> bool:
    z = _zero(a)
    return a * b == z and b * a == z


def dedup(xs: Iterable[T]) -> list[T]:
    out: list[T] = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def join_closure(elems: Sequence[T], limit: int | None = None) -> list[T]:
    """Smallest join-closed superset, in discovery order.

    With ``limit`` set, stops (returning a partial closure) once the set grows
    past ``limit`` elements; callers treat that as "unbounded at this window".
    """
    out = dedup(elems)
    for i, a in enumerate(out):
        for b in out[:i]:
            if not commute(a, b):
                raise NonCommuting(f"{a} and {b} do not commute")
    # closure(S + {g}) = closure(S) + {g} + {c v g : c in closure(S)}
    gens, out = out, []
    seen = set()
    for g in gens:
        for j in [g] + [c + g - c * g for c in out]:
            if j not in seen:
                seen.add(j)
                out.append(j)
                if limit is not None and len(out) > limit:
                    return out
    return out


def join_all(elems: Sequence[T], zero=None):
    """Left-to-right join of a commuting family; ``zero`` for the empty family."""
    if not elems:
        return zero
    acc = elems[0]
    for x in elems[1:]:
        acc = idem_join(acc, x)
    return acc


def greatest_element(elems: Sequence[T]):
    """Join of the family with the list of ``x <= top`` checks, or None if empty."""
    if not elems:
        return None
    top = join_all(list(elems))
    cert = [(x, idem_leq(x, top)) for x in elems]
    assert all(ok for _, ok in cert)
    return top, cert


def maximal_elements(elems: Sequence[T]) -> list[T]:
    xs = dedup(elems)
    return [a for a in xs if not any(b != a and idem_leq(a, b) for b in xs)]


def tominaga_left_unit(pairs: Sequence[tuple[T, T]]):
    """A single e with e*x = x for every (unit, x) pair with unit*x = x.

    Induction on the number of pairs: with e' fixing the corrected elements
    x_i - u_{k+1} x_i, the element e' + u_{k+1} - e' u_{k+1} fixes all of them.
    The corrected pairs keep their units, which is valid when the units commute;
    otherwise the recursion reports BadWitness.  The result need not be idempotent.
    """
    if not pairs:
        raise BadWitness("need at least one pair")
    for u, x in pairs:
        if u * x != x:
            raise BadWitness(f"{u} does not fix {x} from the left")
    u_last, _ = pairs[-1]
    if len(pairs) == 1:
        return u_last
    rest = [(u, x - u_last * x) for u, x in pairs[:-1]]
    e1 = tominaga_left_unit(rest)
    return e1 + u_last - e1 * u_last


def tominaga_right_unit(pairs: Sequence[tuple[T, T]]):
    """Mirror of :func:`tominaga_left_unit`: x*e = x for every pair."""
    if not pairs:
        raise BadWitness("need at least one pair")
    for u, x in pairs:
        if x * u != x:
            raise BadWitness(f"{u} does not fix {x} from the right")
    u_last, _ = pairs[-1]
    if len(pairs) == 1:
        return u_last
    rest = [(u, x - x * u_last) for u, x in pairs[:-1]]
    e1 = tominaga_right_unit(rest)
    return e1 + u_last - u_last * e1
