"""Induced quotient gradings and the classifier suite.

Every check works on an :class:`InducedGrading`, i.e. a parent grading by G
regrouped along the cosets of a normal subgroup N; the trivial subgroup gives
back the parent grading.  The parent is any engine adapter offering

    group, name, certificate, window(b), basis(g, b), complete(g, b),
    support(b), zero(b), identity(b), coords(x), local_units(g, b),
    element_units(g, s, b), far_generators(C, quotient, b)

Verdicts are three-valued.  ``Holds`` needs a finiteness source: a finite
quotient with complete components, a finite support inside the window, or a
periodicity certificate (for the unit checks only).  ``Fails`` needs a
replayable witness.  Everything else is ``UpToBound``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graded import MissingEpsilonFamily
from .groups import Coset, NormalSubgroup, QuotientGroup, trivial_subgroup
from .idempotents import (
    NonCommuting,
    are_orthogonal,
    commute,
    dedup,
    greatest_element,
    idem_leq,
    is_idempotent,
    join_all,
    join_closure,
    maximal_elements,
    tominaga_left_unit,
    tominaga_right_unit,
)
from .linalg import Span

HOLDS, FAILS, UPTO = "Holds", "Fails", "UpToBound"
STATUSES = (HOLDS, FAILS, UPTO)
CLOSURE_LIMIT = 4096
REPORT_LIMIT = 64  # closure sizes quoted in certificates only
TOMINAGA_SAMPLE = 6  # basis elements per coset fed to the common-unit construction
PAIR_LIMIT = 16  # single basis pairs tried as epsilon-crossed witnesses

# weakest last; a Holds implies Holds further down, a Fails implies Fails further up
HIERARCHY = ("epsilon_strong", "virtually", "essentially", "nearly", "symmetric")

ANCHORS = {
    "strong": "identity-in-every-product criterion for strong gradings",
    "symmetric": "symmetry of induced gradings",
    "epsilon_strong": "upper bound of the join-closure of epsilons",
    "nearly": "per-element units combined by Tominaga's lemma",
    "essentially": "join-closed local units",
    "virtually": "pairwise orthogonal maximal local units",
    "epsilon_finite": "finite join-closure of the epsilon family",
    "epsilon_crossed": "sum of domain identities as an epsilon-invertible element",
    "main1": "upper bound of the join-closure inside E(S_C S_C^-1)",
}


@dataclass
class Verdict:
    check: str
    status: str
    bound: int
    witness: str | None = None
    certificate: str | None = None
    per_coset: dict[str, str] = field(default_factory=dict)
    elements: dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"check": self.check, "status": self.status, "bound": self.bound}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.per_coset:
            out["per_coset"] = dict(self.per_coset)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        return cls(d["check"], d["status"], d["bound"], d.get("witness"), d.get("certificate"), dict(d.get("per_coset", {})))


class NotApplicable(ValueError):
    pass


def _combine(statuses) -> str:
    statuses = list(statuses)
    if FAILS in statuses:
        return FAILS
    if all(s == HOLDS for s in statuses):
        return HOLDS
    return UPTO


class InducedGrading:
    """S_C = sum of S_g over g in C, for the cosets C of N in G."""

    def __init__(self, parent, sub: NormalSubgroup | None = None):
        self.parent = parent
        self.group = parent.group
        self.sub = sub if sub is not None else trivial_subgroup(self.group)
        self.quotient = QuotientGroup(self.group, self.sub)
        self._prod: dict = {}  # (C, D, bound) -> [span, independent products, pending products]

    @property
    def name(self) -> str:
        if self.sub.is_trivial:
            return self.parent.name
        return f"{self.parent.name}/{self.sub}"

    def cosets(self, bound: int) -> list[Coset]:
        if self.quotient.is_finite:
            return self.quotient.cosets(bound)
        return dedup(self.quotient.coset_of(g) for g in self.parent.window(bound))

    def members(self, c: Coset, bound: int) -> list[int]:
        return self.quotient.members(c, self.parent.window(bound))

    def inv(self, c: Coset) -> Coset:
        return self.quotient.inv(c)

    def op(self, c: Coset, d: Coset) -> Coset:
        return self.quotient.op(c, d)

    def is_principal(self, c: Coset) -> bool:
        return c == self.quotient.identity

    def basis(self, c: Coset, bound: int) -> list:
        out = []
        for g in self.members(c, bound):
            out += self.parent.basis(g, bound)
        return out

    def graded_basis(self, c: Coset, bound: int) -> list[tuple[int, Any]]:
        return [(g, s) for g in self.members(c, bound) for s in self.parent.basis(g, bound)]

    def zero(self, bound: int):
        return self.parent.zero(bound)

    def covered(self, bound: int) -> bool:
        """Every nonzero component of G lies in the window."""
        if self.group.is_finite:
            return True
        sup = self.parent.support(bound)
        if sup is None:
            return False
        win = set(self.parent.window(bound))
        return sup <= win

    def all_cosets(self, bound: int) -> bool:
        """The window meets every coset with a nonzero component."""
        return self.quotient.is_finite or self.covered(bound)

    def coset_in_window(self, c: Coset, bound: int) -> bool:
        """Every degree of C with a nonzero component is in the window."""
        return self.sub.is_trivial or self.covered(bound)

    def exact(self, c: Coset, bound: int) -> bool:
        """The window basis of S_C spans S_C."""
        return self.coset_in_window(c, bound) and all(self.parent.complete(g, bound) for g in self.members(c, bound))

    def periodic(self) -> bool:
        cert = self.parent.certificate
        return cert is not None and cert.periodic

    def orthogonal_tail(self) -> bool:
        cert = self.parent.certificate
        return cert is not None and cert.orthogonal_tail

    def _state(self, c: Coset, d: Coset, bound: int) -> list:
        key = (c, d, bound)
        if key not in self._prod:
            xs, ys = self.basis(c, bound), self.basis(d, bound)
            if hasattr(self.parent, "products"):
                raw = iter(self.parent.products(xs, ys))
            else:
                raw = (x * y for x in xs for y in ys)
            self._prod[key] = [Span(), [], raw]
        return self._prod[key]

    def _advance(self, state: list, target: dict | None = None) -> None:
        """Feed products into the span; stop early once ``target`` is in it."""
        span, keep, raw = state
        if raw is None:
            return
        for p in raw:
            if span.add(self.parent.coords(p)):
                keep.append(p)
                if target is not None and span.contains(target):
                    return
        state[2] = None

    def products(self, c: Coset, d: Coset, bound: int) -> list:
        """Independent elements spanning the products S_C S_D within the window."""
        state = self._state(c, d, bound)
        self._advance(state)
        return state[1]

    def product_span(self, c: Coset, d: Coset, bound: int) -> Span:
        state = self._state(c, d, bound)
        self._advance(state)
        return state[0]

    def in_span(self, x, c: Coset, d: Coset, bound: int) -> bool:
        state = self._state(c, d, bound)
        v = self.parent.coords(x)
        if state[0].contains(v):
            return True
        self._advance(state, v)
        return state[0].contains(v)

    def units(self, c: Coset, bound: int) -> list:
        if not hasattr(self.parent, "local_units"):
            raise MissingEpsilonFamily(self.parent.name)
        out = []
        for g in self.members(c, bound):
            out += self.parent.local_units(g, bound)
        return dedup(u for u in out if not u.is_zero())

    def far_units(self, c: Coset, bound: int) -> list | None:
        if self.group.is_finite:
            return []
        return self.parent.far_generators(c, self.quotient, bound)

    def far_coset_units(self, bound: int) -> list | None:
        """Local units of cosets beyond the window (only for infinite quotients)."""
        if self.quotient.is_finite:
            return []
        if not self.covered(bound) and not self.periodic():
            return None
        out = []
        for g in (2 * bound + 3, -(2 * bound + 3)):
            us = self.parent.local_units(g, bound) if not self.covered(bound) else []
            if us:
                out.append(join_all(us))
        return out

    def render(self, x) -> str:
        return str(x)


def induce_quotient(parent, sub: NormalSubgroup | None = None) -> InducedGrading:
    return InducedGrading(parent, sub)


def _as_induced(g) -> InducedGrading:
    return g if isinstance(g, InducedGrading) else InducedGrading(g)


def _finish(ind: InducedGrading, bound: int, exact: bool) -> str:
    return HOLDS if exact else UPTO


# -- strong -----------------------------------------------------------------

def check_strong(g, bound: int) -> Verdict:
    ind = _as_induced(g)
    cos = ind.cosets(bound)
    one = ind.parent.identity(bound)
    if one is not None and ind.quotient.is_finite:
        if all(ind.in_span(one, c, ind.inv(c), bound) for c in cos):
            return Verdict(
                "strong", HOLDS, bound,
                certificate=f"identity {ind.render(one)} lies in S_C S_C^-1 for every coset",
            )
    exact = ind.all_cosets(bound)
    cset = set(cos)
    pairs = [(c, d) for c in cos for d in cos if ind.op(c, d) in cset]
    pairs.sort(key=lambda cd: not (ind.exact(cd[0], bound) and ind.exact(cd[1], bound)))
    for c, d in pairs:
        cd = ind.op(c, d)
        complete = ind.exact(c, bound) and ind.exact(d, bound)
        for s in ind.basis(cd, bound):
            if not ind.in_span(s, c, d, bound):
                if complete:
                    witness = f"{ind.render(s)} in degree {cd} is not in span S_{c} S_{d}"
                    return Verdict("strong", FAILS, bound, witness=witness, elements={"witness": s, "pair": (c, d)})
                return Verdict(
                    "strong", UPTO, bound,
                    witness=f"{ind.render(s)} uncovered by the truncated span S_{c} S_{d}",
                )
        exact = exact and ind.exact(cd, bound)
    if not ind.quotient.is_finite and ind.covered(bound):
        # finite support in an infinite quotient: S_h = S_c S_{c^-1 h} fails for c outside the support
        sup = ind.parent.support(bound)
        for c in cos:
            if ind.is_principal(c):
                continue
            b = ind.basis(c, bound)
            if b:
                far = max(abs(g) for g in sup) + 1
                return Verdict(
                    "strong", FAILS, bound,
                    witness=f"{ind.render(b[0])} in degree {c} is not in S_{far} S_{c.key - far} = 0",
                    elements={"witness": b[0]},
                )
    status = HOLDS if exact else UPTO
    return Verdict("strong", status, bound, certificate="S_C S_D spans S_CD for every window pair")


# -- symmetric --------------------------------------------------------------

def check_symmetric(g, bound: int, eps: tuple[Verdict, list] | None = None) -> Verdict:
    """S_C in span(S_C S_C^-1 S_C).

    When a unit chi of S_C S_C^-1 fixes S_C from the left, s = chi s already
    exhibits the membership; otherwise triple products are expanded.
    """
    ind = _as_induced(g)
    chis = {}
    if eps is not None:
        chis = {w.coset: w for w in eps[1]}
    exact = ind.all_cosets(bound)
    inconclusive = False
    for c in ind.cosets(bound):
        basis = ind.basis(c, bound)
        if not basis:
            continue
        w = chis.get(c)
        if w is not None and w.member and all(w.chi * s == s for s in basis):
            exact = exact and ind.exact(c, bound)
            continue
        pc = ind.products(c, ind.inv(c), bound)
        span = Span(ind.parent.coords(p * s) for p in pc for s in basis)
        for s in basis:
            if not span.contains(ind.parent.coords(s)):
                if ind.exact(c, bound) and ind.exact(ind.inv(c), bound):
                    return Verdict(
                        "symmetric", FAILS, bound,
                        witness=f"{ind.render(s)} not in S_C S_C^-1 S_C for C = {c}",
                        elements={"witness": s},
                    )
                inconclusive = True
        exact = exact and ind.exact(c, bound)
    status = HOLDS if exact and not inconclusive else UPTO
    return Verdict("symmetric", status, bound, certificate="S_C lies in S_C S_C^-1 S_C on the window")


# -- epsilon-strong -----------------------------------------------------------

@dataclass
class EpsilonWitness:
    coset: Coset
    chi: Any
    chain: list
    status: str
    absorbs: bool
    member: bool
    note: str = ""


def _join_chain(units: list) -> list:
    chain = []
    acc = None
    for u in units:
        acc = u if acc is None else acc + u - acc * u
        if not chain or chain[-1] != acc:
            chain.append(acc)
    return chain


def epsilon_witnesses(g, bound: int) -> list[EpsilonWitness]:
    ind = _as_induced(g)
    cos = ind.cosets(bound)
    chis = {}
    chains = {}
    for c in cos:
        units = ind.units(c, bound)
        for i, a in enumerate(units):
            for b in units[:i]:
                if not commute(a, b):
                    raise NonCommuting(f"{a} and {b}")
        chain = _join_chain(units)
        chains[c] = chain
        chis[c] = chain[-1] if chain else ind.zero(bound)
    one = ind.parent.identity(bound)
    out = []
    for c in cos:
        chi = chis[c]
        ci = ind.inv(c)
        chi_inv = chis.get(ci)
        absorbs = all(chi * s == s for s in ind.basis(c, bound))
        if chi_inv is not None:
            absorbs = absorbs and all(s * chi_inv == s for s in ind.basis(c, bound))
        member = ind.in_span(chi, c, ci, bound)
        exact = ind.exact(c, bound) and ind.exact(ci, bound)
        far = ind.far_units(c, bound)
        note = ""
        if not (absorbs and member):
            status = FAILS if exact else UPTO
            note = "join of local units does not act as identity" if not absorbs else "join not in S_C S_C^-1"
        elif one is not None and chi == one:
            status = HOLDS
            note = "the join is the identity of the ring"
        elif far is None:
            status = UPTO
            note = "no information beyond the window"
        else:
            above = [f for f in far if not f.is_zero() and not idem_leq(f, chi)]
            if above:
                f = above[0]
                if ind.orthogonal_tail() and are_orthogonal(f, chi):
                    status = FAILS
                    note = f"far unit {ind.render(f)} is orthogonal to {ind.render(chi)}; the chain never stabilizes"
                else:
                    status = UPTO
                    note = f"far unit {ind.render(f)} not below the join"
            elif exact:
                status = HOLDS
            elif ind.periodic():
                status = HOLDS
                note = "periodic certificate: far units lie below the join"
            else:
                status = UPTO
        out.append(EpsilonWitness(c, chi, chains[c], status, absorbs, member, note))
    return out


def check_epsilon_strong(g, bound: int) -> tuple[Verdict, list[EpsilonWitness]]:
    ind = _as_induced(g)
    ws = epsilon_witnesses(ind, bound)
    per = {str(w.coset): w.status for w in ws}
    status = _combine(w.status for w in ws)
    if status == HOLDS and not ind.all_cosets(bound) and not ind.periodic():
        status = UPTO
    bad = next((w for w in ws if w.status == FAILS), None)
    if bad is not None:
        chain = " < ".join(ind.render(x) for x in bad.chain[:3])
        if len(bad.chain) > 3:
            chain += " < ..."
        witness = f"coset {bad.coset}: chain {chain}; {bad.note}"
        return Verdict("epsilon_strong", FAILS, bound, witness=witness, per_coset=per, elements={"witnesses": ws}), ws
    cert = "; ".join(f"eps_{w.coset} = {ind.render(w.chi)}" for w in ws[:12])
    if len(ws) > 12:
        cert += "; ..."
    return Verdict("epsilon_strong", status, bound, certificate=cert, per_coset=per, elements={"witnesses": ws}), ws


# -- nearly / essentially / virtually ------------------------------------------

def check_nearly(g, bound: int) -> Verdict:
    ind = _as_induced(g)
    exact = ind.all_cosets(bound)
    inconclusive = False
    for c in ind.cosets(bound):
        ci = ind.inv(c)
        left, right = [], []
        for deg, s in ind.graded_basis(c, bound):
            lu, ru = ind.parent.element_units(deg, s, bound)
            if lu * s != s or s * ru != s:
                return Verdict("nearly", FAILS, bound, witness=f"engine unit does not fix {ind.render(s)}")
            if not (ind.in_span(lu, c, ci, bound) and ind.in_span(ru, ci, c, bound)):
                inconclusive = True
            left.append((lu, s))
            right.append((ru, s))
        if left:
            # s-unitality is settled per element; the combined unit is built for a sample
            left, right = left[:TOMINAGA_SAMPLE], right[:TOMINAGA_SAMPLE]
            e = tominaga_left_unit(left)
            f = tominaga_right_unit(right)
            if any(e * s != s for _, s in left) or any(s * f != s for _, s in right):
                inconclusive = True
        exact = exact and ind.exact(c, bound)
    status = HOLDS if exact and not inconclusive else UPTO
    return Verdict("nearly", status, bound, certificate="per-element units combined by Tominaga's construction")


def _fixed_by(e, p) -> bool:
    return e * p == p and p * e == p


def check_essentially(g, bound: int) -> Verdict:
    ind = _as_induced(g)
    exact = ind.all_cosets(bound)
    sizes = []
    for c in ind.cosets(bound):
        units = ind.units(c, bound)
        prods = ind.products(c, ind.inv(c), bound)
        e = join_all(units)  # the top of the window closure
        for p in prods:
            if e is None or not _fixed_by(e, p):
                if ind.exact(c, bound) and ind.exact(ind.inv(c), bound):
                    return Verdict("essentially", FAILS, bound, witness=f"{ind.render(p)} fixed by no join of local units")
                return Verdict("essentially", UPTO, bound, witness=f"{ind.render(p)} unfixed inside the window")
        sizes.append(len(units))
        exact = exact and ind.exact(c, bound) and ind.exact(ind.inv(c), bound)
    status = HOLDS if exact else UPTO
    return Verdict("essentially", status, bound, certificate=f"joins of local units fix every product; generators per coset {sizes[:8]}")


def check_virtually(g, bound: int, eps: Verdict | None = None) -> Verdict:
    ind = _as_induced(g)
    exact = ind.all_cosets(bound)
    notes = []
    fallback = False
    for c in ind.cosets(bound):
        units = ind.units(c, bound)
        top = maximal_elements(units)
        if not all(commute(a, b) for i, a in enumerate(top) for b in top[:i]):
            return Verdict("virtually", UPTO, bound, witness=f"condition (a) fails at coset {c}")
        if not all(are_orthogonal(a, b) for i, a in enumerate(top) for b in top[:i]):
            notes.append(f"condition (b) fails at coset {c}")
            fallback = True
            continue
        prods = ind.products(c, ind.inv(c), bound)
        for p in prods:
            rel = [u for u in top if not (u * p).is_zero() or not (p * u).is_zero()]
            e = join_all(rel)
            if e is None or not _fixed_by(e, p):
                if ind.exact(c, bound) and ind.exact(ind.inv(c), bound):
                    return Verdict("virtually", FAILS, bound, witness=f"{ind.render(p)} not fixed by a sum of maximal idempotents")
                return Verdict("virtually", UPTO, bound, witness=f"{ind.render(p)} unfixed inside the window")
        exact = exact and ind.exact(c, bound) and ind.exact(ind.inv(c), bound)
    if fallback:
        if eps is None:
            eps, _ = check_epsilon_strong(ind, bound)
        status = HOLDS if eps.status == HOLDS else UPTO
        return Verdict("virtually", status, bound, witness="; ".join(notes), certificate=f"fallback to unitality: epsilon-strong {eps.status}")
    status = HOLDS if exact else UPTO
    return Verdict("virtually", status, bound, certificate="maximal local units are pairwise orthogonal and their finite sums fix every product")


# -- epsilon-finite -----------------------------------------------------------

def check_epsilon_finite(g, bound: int, eps: tuple[Verdict, list[EpsilonWitness]] | None = None) -> Verdict:
    ind = _as_induced(g)
    verdict, ws = eps if eps is not None else check_epsilon_strong(ind, bound)
    if verdict.status == FAILS:
        return Verdict("epsilon_finite", FAILS, bound, witness="not epsilon-strong")
    family = dedup(w.chi for w in ws if not w.chi.is_zero())
    closure = join_closure(family, limit=REPORT_LIMIT)
    size = len(closure) if len(closure) <= REPORT_LIMIT else f"more than {REPORT_LIMIT}"
    if verdict.status == HOLDS and (ind.quotient.is_finite or ind.covered(bound)):
        return Verdict("epsilon_finite", HOLDS, bound, certificate=f"closure of the epsilon family has {size} elements")
    far = ind.far_coset_units(bound)
    if far and ind.orthogonal_tail():
        principal = {w.coset: w.chi for w in ws}.get(ind.quotient.identity)
        for f in far:
            others = [x for x in family if x != principal]
            if all(are_orthogonal(f, x) for x in others):
                return Verdict(
                    "epsilon_finite", FAILS, bound,
                    witness=f"far epsilon {ind.render(f)} is orthogonal to every non-principal epsilon in the window",
                )
    return Verdict("epsilon_finite", UPTO, bound, certificate=f"window closure has {size} elements")


# -- main theorem condition -----------------------------------------------------

@dataclass
class Main1Coset:
    coset: Coset
    status: str
    chi: Any = None
    closure_size: int = 0
    note: str = ""


def theorem_main1_condition(g, bound: int) -> list[Main1Coset]:
    """Search E(S_C S_C^-1) for an upper bound of the join-closure of the local units.

    This is an independent route to the epsilon-strong verdict: it never tests
    absorption, only the order relation, so agreement with
    :func:`check_epsilon_strong` exercises the equivalence.
    """
    ind = _as_induced(g)
    out = []
    one = ind.parent.identity(bound)
    for c in ind.cosets(bound):
        ci = ind.inv(c)
        units = dedup(ind.units(c, bound))
        # the join of the generators is the greatest element of their join-closure
        top = join_all(units)
        size = len(join_closure(units, limit=REPORT_LIMIT)) if units else 0
        cands = []
        if top is not None:
            cands.append(top)
        if one is not None:
            cands.append(one)
        cands += [p for p in ind.products(c, ci, bound) if is_idempotent(p)]
        if not units:
            cands.append(ind.zero(bound))
        far = ind.far_units(c, bound)
        exact = ind.exact(c, bound) and ind.exact(ci, bound)
        found = None
        for x in dedup(cands):
            if not is_idempotent(x) or not ind.in_span(x, c, ci, bound):
                continue
            if top is not None and not (x * top == top and top * x == top):
                continue
            if far and not all(f.is_zero() or idem_leq(f, x) for f in far):
                continue
            found = x
            break
        if found is not None:
            if one is not None and found == one:
                st, note = HOLDS, "the identity lies in S_C S_C^-1"
            elif far is None:
                st, note = UPTO, "upper bound found; nothing known beyond the window"
            elif exact or ind.periodic():
                st, note = HOLDS, "upper bound found"
            else:
                st, note = UPTO, "upper bound found in a truncated window"
            out.append(Main1Coset(c, st, found, size, note))
            continue
        tail = far and ind.orthogonal_tail() and top is not None and any(
            not f.is_zero() and are_orthogonal(f, top) for f in far
        )
        if tail:
            out.append(Main1Coset(c, FAILS, None, size, "orthogonal far unit: no upper bound can exist"))
        elif exact:
            out.append(Main1Coset(c, FAILS, None, size, "no idempotent of S_C S_C^-1 bounds the closure"))
        else:
            out.append(Main1Coset(c, UPTO, None, size, "no upper bound inside the window"))
    return out


def main1_agrees(g, bound: int) -> tuple[bool, dict[str, tuple[str, str]]]:
    ind = _as_induced(g)
    verdict, _ = check_epsilon_strong(ind, bound)
    cond = theorem_main1_condition(ind, bound)
    table = {str(m.coset): (m.status, verdict.per_coset[str(m.coset)]) for m in cond}
    return all(a == b for a, b in table.values()), table


# -- epsilon-crossed ------------------------------------------------------------

def epsilon_crossed_witness(g, bound: int, eps: tuple[Verdict, list[EpsilonWitness]] | None = None) -> dict[Coset, tuple | None]:
    """Per coset an epsilon-invertible pair (s, t) with st = eps_C and ts = eps_C^-1."""
    ind = _as_induced(g)
    verdict, ws = eps if eps is not None else check_epsilon_strong(ind, bound)
    if verdict.status != HOLDS:
        raise NotApplicable(f"grading is not epsilon-strong ({verdict.status})")
    chi = {w.coset: w.chi for w in ws}
    out: dict[Coset, tuple | None] = {}
    for c in ind.cosets(bound):
        ci = ind.inv(c)
        if ind.is_principal(c):
            out[c] = (chi[c], chi[c])
            continue
        cands = []
        action = getattr(ind.parent, "action", None)
        if action is not None:
            from .partial_skew import SkewElement

            grp = ind.group
            seen, s, t = [], ind.zero(bound), ind.zero(bound)
            for g_ in ind.members(c, bound):
                u = action.unit(g_)
                if u.is_zero() or u in seen:
                    continue
                seen.append(u)
                s = s + SkewElement(action, {g_: u})
                t = t + SkewElement(action, {grp.inv(g_): action.unit(grp.inv(g_))})
            cands.append((s, t))
        bc, bci = ind.basis(c, bound), ind.basis(ci, bound)
        cands.append((sum(bc, ind.zero(bound)), sum(bci, ind.zero(bound))))
        cands += [(s, t) for s in bc[:PAIR_LIMIT] for t in bci[:PAIR_LIMIT]]
        out[c] = None
        for s, t in cands:
            if s * t == chi[c] and t * s == chi[ci]:
                out[c] = (s, t)
                break
    return out


def check_epsilon_crossed(g, bound: int, eps=None) -> Verdict:
    ind = _as_induced(g)
    eps = eps if eps is not None else check_epsilon_strong(ind, bound)
    if eps[0].status == FAILS:
        return Verdict("epsilon_crossed", FAILS, bound, witness="not epsilon-strong")
    try:
        wit = epsilon_crossed_witness(ind, bound, eps)
    except NotApplicable as exc:
        return Verdict("epsilon_crossed", UPTO, bound, witness=str(exc))
    per = {str(c): (HOLDS if w is not None else UPTO) for c, w in wit.items()}
    status = _combine(per.values())
    if status == HOLDS and not ind.all_cosets(bound) and not ind.periodic():
        status = UPTO
    cert = "; ".join(f"{c}: s = {ind.render(w[0])}" for c, w in wit.items() if w is not None)
    return Verdict("epsilon_crossed", status, bound, certificate=cert, per_coset=per, elements={"witnesses": wit})


# -- classification -------------------------------------------------------------

@dataclass
class Section:
    name: str
    verdicts: dict[str, Verdict]
    defects: list[str] = field(default_factory=list)

    def status(self, check: str) -> str:
        return self.verdicts[check].status

    def to_dict(self) -> dict:
        return {
            "grading": self.name,
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
            "defects": list(self.defects),
        }


def _propagate(sec: Section, unital: bool) -> None:
    v = sec.verdicts
    order = list(HIERARCHY)
    if unital:
        order = ["strong"] + order
    for i, name in enumerate(order):
        if v[name].status != HOLDS:
            continue
        for weaker in order[i + 1:]:
            w = v[weaker]
            if w.status == FAILS:
                sec.defects.append(f"{name} Holds but {weaker} Fails")
            elif w.status == UPTO:
                v[weaker] = Verdict(weaker, HOLDS, w.bound, certificate=f"implied by {name}", per_coset=w.per_coset)
    for i, name in enumerate(order):
        if v[name].status != FAILS:
            continue
        for stronger in order[:i]:
            w = v[stronger]
            if w.status == HOLDS:
                sec.defects.append(f"{stronger} Holds but {name} Fails")
            elif w.status == UPTO:
                v[stronger] = Verdict(stronger, FAILS, w.bound, witness=f"{name} fails")
    if v["epsilon_crossed"].status == HOLDS and v["epsilon_strong"].status != HOLDS:
        sec.defects.append("epsilon-crossed without epsilon-strong")


def classify_section(g, bound: int) -> Section:
    ind = _as_induced(g)
    eps = check_epsilon_strong(ind, bound)
    verdicts = {
        "strong": check_strong(ind, bound),
        "epsilon_strong": eps[0],
        "virtually": check_virtually(ind, bound, eps[0]),
        "essentially": check_essentially(ind, bound),
        "nearly": check_nearly(ind, bound),
        "symmetric": check_symmetric(ind, bound, eps),
        "epsilon_finite": check_epsilon_finite(ind, bound, eps),
        "epsilon_crossed": check_epsilon_crossed(ind, bound, eps),
    }
    sec = Section(ind.name, verdicts)
    _propagate(sec, ind.parent.identity(bound) is not None)
    ok, table = main1_agrees(ind, bound)
    if not ok:
        sec.defects.append(f"main theorem condition disagrees: {table}")
    return sec


@dataclass
class Report:
    ring: str
    bound: int
    parent: Section
    induced: Section | None = None

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "bound": self.bound, "parent": self.parent.to_dict()}
        if self.induced is not None:
            out["induced"] = self.induced.to_dict()
        return out


def classify(parent, sub: NormalSubgroup | None = None, bound: int = 4) -> Report:
    par = classify_section(InducedGrading(parent), bound)
    ind = None
    if sub is not None and not sub.is_trivial:
        ind = classify_section(InducedGrading(parent, sub), bound)
    return Report(parent.name, bound, par, ind)
