"""Grading groups: the integers and finite Cayley-table groups, plus quotients.

Group elements are plain ints: the integer itself for Z, the row index for a
finite group.  Cosets are identified by a canonical key (a residue for Z/mZ,
the smallest member index for a finite group).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class GroupError(ValueError):
    pass


class MalformedTable(GroupError):
    pass


class NotSubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


@dataclass(frozen=True)
class Group:
    kind: str  # "integers" or "finite"
    cayley: tuple[tuple[int, ...], ...] = ()
    identity: int = 0
    _inverses: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def order(self) -> int | None:
        return len(self.cayley) if self.is_finite else None

    def op(self, a: int, b: int) -> int:
        if self.is_finite:
            return self.cayley[a][b]
        return a + b

    def inv(self, a: int) -> int:
        if self.is_finite:
            return self._inverses[a]
        return -a

    def elements(self) -> range:
        if not self.is_finite:
            raise GroupError("the integers cannot be listed exhaustively")
        return range(len(self.cayley))

    def contains(self, a: int) -> bool:
        if self.is_finite:
            return 0 <= a < len(self.cayley)
        return isinstance(a, int)

    def __repr__(self) -> str:
        if self.is_finite:
            return f"Group(finite, order={len(self.cayley)})"
        return "Group(Z)"


INTEGERS = Group("integers")


def integers() -> Group:
    return INTEGERS


def finite_group(cayley: Sequence[Sequence[int]]) -> Group:
    """Validate a Cayley table and wrap it as a Group."""
    table = tuple(tuple(int(x) for x in row) for row in cayley)
    n = len(table)
    if n == 0:
        raise MalformedTable("empty table")
    full = set(range(n))
    for row in table:
        if len(row) != n or set(row) != full:
            raise MalformedTable("table is not a Latin square")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise MalformedTable("table is not a Latin square")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise MalformedTable("no two-sided identity")
    e = ids[0]
    inverses = []
    for a in range(n):
        inv = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not inv:
            raise MalformedTable(f"element {a} has no two-sided inverse")
        inverses.append(inv[0])
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise MalformedTable("operation is not associative")
    return Group("finite", table, e, tuple(inverses))


def cyclic_group(n: int) -> Group:
    return finite_group([[(i + j) % n for j in range(n)] for i in range(n)])


def construct_group(desc) -> Group:
    """Build a group from ``"integers"`` or a scenario dict / Cayley table."""
    if desc == "integers":
        return INTEGERS
    if isinstance(desc, dict):
        kind = desc.get("kind")
        if kind == "integers":
            return INTEGERS
        if kind == "finite":
            return finite_group(desc["cayley"])
        if kind == "cyclic":
            return cyclic_group(int(desc["order"]))
        raise MalformedTable(f"unknown group kind {kind!r}")
    return finite_group(desc)


def enumerate_window(g: Group, bound: int) -> list[int]:
    """Z gives -bound..bound; a finite group gives all of its elements."""
    if g.is_finite:
        return list(g.elements())
    return list(range(-bound, bound + 1))


def balanced_window(g: Group, bound: int) -> list[int]:
    """Window in order of distance from the identity: 0, 1, -1, 2, -2, ..."""
    if g.is_finite:
        rest = [x for x in g.elements() if x != g.identity]
        return [g.identity] + rest
    out = [0]
    for k in range(1, bound + 1):
        out += [k, -k]
    return out


@dataclass(frozen=True)
class NormalSubgroup:
    group: Group
    modulus: int = 0  # Z only: the subgroup mZ
    members: frozenset[int] = frozenset()  # finite groups only

    def contains(self, a: int) -> bool:
        if self.group.is_finite:
            return a in self.members
        if self.modulus == 0:
            return a == 0
        return a % self.modulus == 0

    @property
    def is_trivial(self) -> bool:
        if self.group.is_finite:
            return len(self.members) == 1
        return self.modulus == 0

    def __str__(self) -> str:
        if self.group.is_finite:
            return "{" + ",".join(map(str, sorted(self.members))) + "}"
        return f"{self.modulus}Z"


def normal_subgroup(g: Group, desc) -> NormalSubgroup:
    """``desc`` is a modulus m for Z (subgroup mZ) or a member list for finite groups."""
    if not g.is_finite:
        m = abs(int(desc))
        return NormalSubgroup(g, modulus=m)
    members = frozenset(int(x) for x in desc)
    if g.identity not in members or not members <= set(g.elements()):
        raise NotSubgroup("subset must contain the identity and lie in the group")
    for a in members:
        if g.inv(a) not in members:
            raise NotSubgroup(f"{a} has no inverse in the subset")
        for b in members:
            if g.op(a, b) not in members:
                raise NotSubgroup(f"{a}*{b} leaves the subset")
    for x in g.elements():
        for a in members:
            if g.op(g.op(x, a), g.inv(x)) not in members:
                raise NotNormal(f"conjugating {a} by {x} leaves the subgroup")
    return NormalSubgroup(g, members=members)


def trivial_subgroup(g: Group) -> NormalSubgroup:
    return normal_subgroup(g, 0 if not g.is_finite else [g.identity])


@dataclass(frozen=True)
class Coset:
    key: int

    def __repr__(self) -> str:
        return f"[{self.key}]"


class QuotientGroup:
    """G/N with canonical coset keys.

    Z/0Z is Z itself (infinitely many cosets); everything else is finite.
    """

    def __init__(self, group: Group, sub: NormalSubgroup):
        if sub.group != group:
            raise GroupError("subgroup belongs to a different group")
        self.group = group
        self.sub = sub
        self._keys: list[int] | None = None
        if group.is_finite:
            keys = {}
            for x in group.elements():
                keys[x] = min(group.op(x, n) for n in sub.members)
            self._key_of = keys
            self._keys = sorted(set(keys.values()), key=lambda k: (k != keys[group.identity], k))
        elif sub.modulus:
            self._keys = list(range(sub.modulus))

    @property
    def is_finite(self) -> bool:
        return self._keys is not None

    @property
    def order(self) -> int | None:
        return len(self._keys) if self._keys is not None else None

    def coset_of(self, g: int) -> Coset:
        if self.group.is_finite:
            return Coset(self._key_of[g])
        m = self.sub.modulus
        return Coset(g % m if m else g)

    @property
    def identity(self) -> Coset:
        return self.coset_of(self.group.identity)

    def op(self, c: Coset, d: Coset) -> Coset:
        return self.coset_of(self.group.op(c.key, d.key))

    def inv(self, c: Coset) -> Coset:
        return self.coset_of(self.group.inv(c.key))

    def cosets(self, bound: int) -> list[Coset]:
        """All cosets when finitely many, else the cosets of the balanced window."""
        if self._keys is not None:
            return [Coset(k) for k in self._keys]
        return [Coset(g) for g in balanced_window(self.group, bound)]

    def members(self, c: Coset, window: Sequence[int]) -> list[int]:
        return [g for g in window if self.coset_of(g) == c]

    def __repr__(self) -> str:
        return f"QuotientGroup({self.group!r}, order={self.order})"


def quotient(g: Group, n: NormalSubgroup) -> QuotientGroup:
    return QuotientGroup(g, n)

