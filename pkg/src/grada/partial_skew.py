"""Unital partial actions on the sequence ring and their partial skew group rings.

A partial action is given by the identities 1_g of its domain ideals
D_g = 1_g R and the maps alpha_g : D_{g^-1} -> D_g.  Multiplication follows

    (a_g d_g)(b_h d_h) = a_g alpha_g(b_h 1_{g^-1}) d_{gh}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graded import FamilyCertificate
from .groups import INTEGERS, Coset, Group, QuotientGroup, balanced_window, cyclic_group
from .numeric import ONE, ZERO, FinExSeq, kron, seq_make, seq_reflect, seq_shift


class UnknownBuiltin(KeyError):
    pass


class DomainError(ValueError):
    """alpha_g applied outside D_{g^-1}."""


@dataclass(frozen=True)
class PartialAction:
    group: Group
    unit: Callable[[int], FinExSeq]  # g -> 1_g
    act: Callable[[int, FinExSeq], FinExSeq]  # alpha_g on D_{g^-1}
    name: str = "custom"
    certificate: FamilyCertificate | None = None
    ring_identity: FinExSeq = ONE  # identity of the carrier ring (= 1_e)

    def apply(self, g: int, x: FinExSeq) -> FinExSeq:
        if x * self.unit(self.group.inv(g)) != x:
            raise DomainError(f"{x} is not in D_{self.group.inv(g)}")
        return self.act(g, x)


class SkewElement:
    """Finite sum of a_g d_g; coefficients are kept inside their domains."""

    __slots__ = ("action", "terms")

    def __init__(self, action: PartialAction, terms: dict[int, FinExSeq] | None = None):
        self.action = action
        self.terms = {g: a for g, a in (terms or {}).items() if not a.is_zero()}

    def __add__(self, other: SkewElement) -> SkewElement:
        t = dict(self.terms)
        for g, a in other.terms.items():
            t[g] = t[g] + a if g in t else a
        return SkewElement(self.action, t)

    def __neg__(self) -> SkewElement:
        return SkewElement(self.action, {g: -a for g, a in self.terms.items()})

    def __sub__(self, other: SkewElement) -> SkewElement:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SkewElement):
            return SkewElement(self.action, {g: a * other for g, a in self.terms.items()})
        return skew_mul(self, other)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def coords(self) -> dict:
        out = {}
        for g, a in self.terms.items():
            for (k, j), v in a.coords().items():
                out[(g, k, j)] = v
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms):
            a = str(self.terms[g])
            parts.append(f"({a})d{g}" if "+" in a else f"{a} d{g}")
        return " + ".join(parts)

    __repr__ = __str__


def mono(pa: PartialAction, a: FinExSeq, g: int) -> SkewElement:
    """a d_g, after checking a lies in D_g."""
    if a * pa.unit(g) != a:
        raise DomainError(f"{a} is not in D_{g}")
    return SkewElement(pa, {g: a})


def skew_mul(x: SkewElement, y: SkewElement) -> SkewElement:
    pa = x.action
    grp = pa.group
    acc: dict[int, FinExSeq] = {}
    for g, a in x.terms.items():
        ginv_unit = pa.unit(grp.inv(g))
        for h, b in y.terms.items():
            c = a * pa.act(g, b * ginv_unit)
            if c.is_zero():
                continue
            k = grp.op(g, h)
            acc[k] = acc[k] + c if k in acc else c
    return SkewElement(pa, acc)


def skew_epsilon(pa: PartialAction, g: int) -> SkewElement:
    """1_g d_e."""
    return SkewElement(pa, {pa.group.identity: pa.unit(g)})


def skew_identity(pa: PartialAction) -> SkewElement:
    return skew_epsilon(pa, pa.group.identity)


# -- axioms -----------------------------------------------------------------

@dataclass
class AxiomReport:
    status: str
    bound: int
    witness: tuple | None = None
    condition: int | None = None
    detail: str = ""


def axiom_check(pa: PartialAction, bound: int) -> AxiomReport:
    """Check the three unital partial action conditions on a window.

    Condition (2) is tested on the generator 1_{g^-1} 1_h of D_{g^-1} D_h and
    condition (3) on x = 1_{h^-1} 1_{(gh)^-1}.  Conditions are swept in the
    order (1), (3), (2) over all window pairs, so a failing composition law is
    reported even when it also breaks (2).
    """
    grp = pa.group
    e = grp.identity
    win = balanced_window(grp, bound)
    if pa.unit(e) != pa.ring_identity:
        return AxiomReport("Fails", bound, (e,), 1, "1_e is not the identity")
    samples = [pa.ring_identity] + [pa.ring_identity * kron(i) for i in win if grp.kind == "integers"]
    for x in samples:
        if pa.act(e, x) != x:
            return AxiomReport("Fails", bound, (e,), 1, f"alpha_e moves {x}")
    for g in win:
        u = pa.unit(g)
        if u * u != u:
            return AxiomReport("Fails", bound, (g,), 1, f"1_{g} is not idempotent")
    for g in win:
        for h in win:
            gh = grp.op(g, h)
            x = pa.unit(grp.inv(h)) * pa.unit(grp.inv(gh))
            try:
                mid = pa.apply(h, x)
                lhs = pa.apply(g, mid)
            except DomainError as exc:
                return AxiomReport("Fails", bound, (g, h), 3, str(exc))
            rhs = pa.act(gh, x)
            if lhs != rhs:
                detail = f"alpha_{g}(alpha_{h}({x})) = alpha_{g}({mid}) = {lhs}, but alpha_{gh}({x}) = {rhs}"
                return AxiomReport("Fails", bound, (g, h), 3, detail)
    for g in win:
        for h in win:
            x = pa.unit(grp.inv(g)) * pa.unit(h)
            if pa.apply(g, x) != pa.unit(g) * pa.unit(grp.op(g, h)):
                return AxiomReport("Fails", bound, (g, h), 2, f"alpha_{g}(1_{grp.inv(g)} 1_{h}) != 1_{g} 1_{grp.op(g, h)}")
    if grp.is_finite or (pa.certificate is not None and pa.certificate.periodic):
        return AxiomReport("Holds", bound)
    return AxiomReport("UpToBound", bound)


# -- built-in actions ---------------------------------------------------------

def reflection_action(corrupt: bool = False) -> PartialAction:
    """D_0 = R, D_i = e_i R, alpha_i(q e_{-i}) = q e_i.

    With ``corrupt`` the map alpha_2 lands on e_3 instead of e_2.
    """

    def unit(g: int) -> FinExSeq:
        return ONE if g == 0 else kron(g)

    def act(g: int, x: FinExSeq) -> FinExSeq:
        if g == 0:
            return x
        y = seq_reflect(x)
        if corrupt and g == 2:
            y = seq_shift(y, 1)
        return y

    cert = FamilyCertificate(
        "translation-invariant family: 1_g = e_g for g != 0, pairwise orthogonal",
        periodic=True,
        orthogonal_tail=True,
    )
    return PartialAction(INTEGERS, unit, act, name="ex61_corrupted" if corrupt else "ex61", certificate=cert)


def cyclic_shift(a: FinExSeq, g: int, n: int) -> FinExSeq:
    """Rotate a sequence supported on positions 1..n by g steps."""
    if a.default != 0 or any(not 1 <= j <= n for j in a.positions()):
        raise DomainError(f"{a} is not supported on positions 1..{n}")
    return seq_make(0, {(j - 1 + g) % n + 1: v for j, v in a.exceptions})


def restricted_shift_action(group: Group, ideal: FinExSeq, name: str = "custom") -> PartialAction:
    """Shift action on a unital ideal A = ideal * R, with D_g = A * shift(A, g).

    Over Z the shift is bilateral; over a cyclic group of order n it rotates
    positions 1..n.
    """
    if ideal * ideal != ideal:
        raise ValueError("the ideal must be generated by an idempotent")
    if group.is_finite:
        n = group.order

        def shift(a: FinExSeq, g: int) -> FinExSeq:
            return cyclic_shift(a, g, n)

        cert = None
    else:

        def shift(a: FinExSeq, g: int) -> FinExSeq:
            return seq_shift(a, g)

        cert = FamilyCertificate(
            "1_g = A * shift(A, g) with A cofinite or finite; far domains are translates",
            periodic=True,
            orthogonal_tail=False,
        )
    cache: dict[int, FinExSeq] = {}

    def unit(g: int) -> FinExSeq:
        if g not in cache:
            cache[g] = ideal * shift(ideal, g)
        return cache[g]

    def act(g: int, x: FinExSeq) -> FinExSeq:
        return shift(x, g)

    return PartialAction(group, unit, act, name=name, certificate=cert, ring_identity=ideal)


def shift_ideal_action() -> PartialAction:
    return restricted_shift_action(INTEGERS, seq_make(1, {0: 0}), name="ex62")


def cyclic_four_action() -> PartialAction:
    return restricted_shift_action(cyclic_group(4), seq_make(0, {1: 1, 2: 1}), name="sec7")


BUILTINS: dict[str, tuple[Callable[[], PartialAction], str]] = {
    "ex61": (reflection_action, "Z acting on sequences, D_i = e_i R, alpha_i reflects"),
    "ex62": (shift_ideal_action, "bilateral shift restricted to {f : f(0) = 0}"),
    "sec7": (cyclic_four_action, "C4 rotating Q^4, restricted to e_1 R + e_2 R"),
    "ex61_corrupted": (lambda: reflection_action(corrupt=True), "ex61 with alpha_2 sent to the wrong index"),
}


def builtin(name: str) -> PartialAction:
    name = name.removeprefix("builtin:")
    if name not in BUILTINS:
        raise UnknownBuiltin(name)
    return BUILTINS[name][0]()


# -- adapter for the analysis layer -----------------------------------------

@dataclass
class SkewGrading:
    """R *_alpha G with components D_g d_g, seen through the analysis interface.

    Coefficient bases: when 1_g has default 0 the domain is finite-dimensional
    and spanned by the nonzero e_i 1_g; otherwise the basis is 1_g together with
    the e_i inside D_g for |i| <= bound, a truncation.
    """

    action: PartialAction
    name: str = ""
    engine: str = field(default="partial-skew", init=False)

    def __post_init__(self):
        self.group = self.action.group
        self.name = self.name or self.action.name
        self.certificate = self.action.certificate

    def window(self, bound: int) -> list[int]:
        return balanced_window(self.group, bound)

    def coefficient_basis(self, g: int, bound: int) -> list[FinExSeq]:
        u = self.action.unit(g)
        if u.is_zero():
            return []
        if u.default == 0:
            return [kron(j) for j, _ in u.exceptions]
        return [u] + [kron(i) for i in range(-bound, bound + 1) if u.at(i) == 1]

    def basis(self, g: int, bound: int) -> list[SkewElement]:
        return [SkewElement(self.action, {g: a}) for a in self.coefficient_basis(g, bound)]

    def complete(self, g: int, bound: int) -> bool:
        return self.action.unit(g).default == 0

    def support(self, bound: int) -> set[int] | None:
        if self.group.is_finite:
            return {g for g in self.group.elements() if not self.action.unit(g).is_zero()}
        return None

    def zero(self, bound: int = 0) -> SkewElement:
        return SkewElement(self.action)

    def identity(self, bound: int) -> SkewElement:
        return skew_identity(self.action)

    def coords(self, x: SkewElement) -> dict:
        return x.coords()

    def epsilon(self, g: int, bound: int) -> SkewElement:
        return skew_epsilon(self.action, g)

    def local_units(self, g: int, bound: int) -> list[SkewElement]:
        eps = skew_epsilon(self.action, g)
        return [] if eps.is_zero() else [eps]

    def element_units(self, g: int, s: SkewElement, bound: int) -> tuple[SkewElement, SkewElement]:
        return skew_epsilon(self.action, g), skew_epsilon(self.action, self.group.inv(g))

    def far_degrees(self, coset: Coset, quotient: QuotientGroup, bound: int) -> list[int]:
        """Two representatives of the coset beyond the window, one on each side."""
        if self.group.is_finite:
            return []
        m = quotient.sub.modulus
        if not m:
            return []
        r = coset.key % m
        lo = 2 * bound + 3
        up = lo + (r - lo) % m
        down = -lo - (-lo - r) % m
        return [up, down]

    def far_generators(self, coset: Coset, quotient: QuotientGroup, bound: int) -> list[SkewElement] | None:
        if self.certificate is None and not self.group.is_finite:
            return None
        out = []
        for g in self.far_degrees(coset, quotient, bound):
            out += self.local_units(g, bound)
        return out

    def render(self, x) -> str:
        return str(x)


def as_grading(pa: PartialAction) -> SkewGrading:
    return SkewGrading(pa)


def action_from_json(obj: dict) -> PartialAction:
    """{"kind": "restricted_shift", "group": ..., "ideal": seq} or {"builtin": name}."""
    from .groups import construct_group
    from .numeric import seq_from_json

    if "builtin" in obj:
        return builtin(obj["builtin"])
    kind = obj.get("kind", "restricted_shift")
    if kind != "restricted_shift":
        raise ValueError(f"unsupported partial action kind {kind!r}")
    group = construct_group(obj.get("group", "integers"))
    if group.is_finite and group.cayley != cyclic_group(group.order).cayley:
        raise ValueError("finite restricted shifts need the cyclic group Z/n")
    return restricted_shift_action(group, seq_from_json(obj["ideal"]), name=obj.get("name", "custom"))


__all__ = [
    "PartialAction",
    "SkewElement",
    "SkewGrading",
    "UnknownBuiltin",
    "DomainError",
    "axiom_check",
    "builtin",
    "mono",
    "skew_mul",
    "skew_epsilon",
    "skew_identity",
    "ZERO",
]
