"""Leavitt path algebras over Q with standard group gradings.

Elements are finite rational combinations of monomials alpha beta* kept in a
normal form: at every regular vertex v the first outgoing edge gamma(v) (in
insertion order) is distinguished, and a monomial whose real and ghost paths
both end in gamma(v) is rewritten with the Cuntz-Krieger sum relation

    (a gamma(v)) (b gamma(v))*  ->  a b*  -  sum_{f in s^-1(v), f != gamma(v)} (a f)(b f)*

The surviving monomials form a basis, which makes equality decidable.
"""
from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from typing import NamedTuple, Sequence

from .graded import FamilyCertificate, QuiverMismatch
from .groups import INTEGERS, Group, balanced_window
from .linalg import Span


class Edge(NamedTuple):
    id: str
    src: str
    rng: str


class Path(NamedTuple):
    start: str
    edges: tuple[str, ...] = ()


class Monomial(NamedTuple):
    real: Path
    ghost: Path

    @property
    def length(self) -> int:
        return len(self.real.edges) + len(self.ghost.edges)

    def __repr__(self) -> str:
        return monomial_str(self)


class Quiver:
    """A finite directed graph.  ``family`` marks truncations of an infinite one."""

    def __init__(self, vertices: Sequence[str], edges: Sequence[Edge | tuple], name: str = "", family: str | None = None):
        self.vertices = tuple(vertices)
        self.edges = tuple(Edge(*e) for e in edges)
        self.name = name
        self.family = family
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self._edge = {}
        self._out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.id in self._edge or e.id in vs:
                raise ValueError(f"duplicate id {e.id!r}")
            if e.src not in vs or e.rng not in vs:
                raise ValueError(f"edge {e.id!r} has a missing endpoint")
            self._edge[e.id] = e
            self._out[e.src].append(e.id)
        self._nf_cache: dict[Monomial, dict[Monomial, Fraction]] = {}
        self._paths_cache: dict[int, list[Path]] = {}

    def __repr__(self) -> str:
        return f"Quiver({self.name or '?'}, |V|={len(self.vertices)}, |E|={len(self.edges)})"

    def src(self, e: str) -> str:
        return self._edge[e].src

    def rng(self, e: str) -> str:
        return self._edge[e].rng

    def out(self, v: str) -> list[str]:
        return self._out[v]

    def is_regular(self, v: str) -> bool:
        return bool(self._out[v])

    def special(self, v: str) -> str | None:
        out = self._out[v]
        return out[0] if out else None

    def path_range(self, p: Path) -> str:
        return self.rng(p.edges[-1]) if p.edges else p.start

    def path(self, *edges: str) -> Path:
        if not edges:
            raise ValueError("use vertex_path for length zero")
        for a, b in zip(edges, edges[1:]):
            if self.rng(a) != self.src(b):
                raise ValueError(f"{a} and {b} are not composable")
        return Path(self.src(edges[0]), tuple(edges))

    def vertex_path(self, v: str) -> Path:
        return Path(v, ())

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for e in self.edges:
            indeg[e.rng] += 1
        stack = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for e in self._out[v]:
                w = self.rng(e)
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == len(self.vertices)

    def paths(self, max_len: int) -> list[Path]:
        """All paths of length <= max_len (vertex paths first), deterministic order."""
        if max_len in self._paths_cache:
            return self._paths_cache[max_len]
        layer = [Path(v, ()) for v in self.vertices]
        out = list(layer)
        for _ in range(max_len):
            nxt = []
            for p in layer:
                for e in self._out[self.path_range(p)]:
                    nxt.append(Path(p.start, p.edges + (e,)))
            if not nxt:
                break
            out += nxt
            layer = nxt
        self._paths_cache[max_len] = out
        return out

    def longest_path(self) -> int:
        """Length of the longest path; only meaningful for acyclic quivers."""
        best = 0
        for p in self.paths(len(self.edges)):
            best = max(best, len(p.edges))
        return best


def fig2() -> Quiver:
    """v1 --f--> v2: one edge into a sink."""
    return Quiver(["v1", "v2"], [("f", "v1", "v2")], name="fig2")


def loop() -> Quiver:
    """One vertex with one loop; its Leavitt path algebra is the Laurent ring."""
    return Quiver(["v"], [("x", "v", "v")], name="loop")


def discrete(n: int) -> Quiver:
    """The first n vertices of the edgeless graph on infinitely many vertices."""
    return Quiver([f"v{i}" for i in range(1, n + 1)], [], name=f"discrete({n})", family="discrete_inf")


def quiver_from_json(obj: dict) -> tuple[Quiver, dict[str, int]]:
    edges = [(e["id"], e["src"], e["rng"]) for e in obj.get("edges", [])]
    q = Quiver(obj["vertices"], edges, name=obj.get("name", "custom"))
    degrees = {k: int(v) for k, v in obj.get("degrees", {}).items()}
    return q, degrees


# -- monomial arithmetic ----------------------------------------------------

def monomial_mul(a: Monomial, b: Monomial) -> Monomial | None:
    """(g d*)(l r*): g k r* if l = d k;  g (r s)* if d = l s;  else zero."""
    gamma, delta = a
    lam, rho = b
    if delta.start != lam.start:
        return None
    nd, nl = len(delta.edges), len(lam.edges)
    if lam.edges[:nd] == delta.edges:
        return Monomial(Path(gamma.start, gamma.edges + lam.edges[nd:]), rho)
    if delta.edges[:nl] == lam.edges:
        return Monomial(gamma, Path(rho.start, rho.edges + delta.edges[nl:]))
    return None


def is_normal(q: Quiver, m: Monomial) -> bool:
    a, b = m.real.edges, m.ghost.edges
    if not a or not b or a[-1] != b[-1]:
        return True
    return q.special(q.src(a[-1])) != a[-1]


def _rewrite_once(q: Quiver, m: Monomial) -> dict[Monomial, int]:
    """One application of the oriented Cuntz-Krieger sum relation at the tail."""
    e = m.real.edges[-1]
    v = q.src(e)
    a = Path(m.real.start, m.real.edges[:-1])
    b = Path(m.ghost.start, m.ghost.edges[:-1])
    out = {Monomial(a, b): 1}
    for f in q.out(v):
        if f != e:
            out[Monomial(Path(a.start, a.edges + (f,)), Path(b.start, b.edges + (f,)))] = -1
    return out


def normal_form_monomial(q: Quiver, m: Monomial) -> dict[Monomial, Fraction]:
    cached = q._nf_cache.get(m)
    if cached is not None:
        return cached
    if is_normal(q, m):
        res = {m: Fraction(1)}
    else:
        res = {}
        for t, c in _rewrite_once(q, m).items():
            for u, d in normal_form_monomial(q, t).items():
                x = res.get(u, 0) + c * d
                if x:
                    res[u] = x
                else:
                    res.pop(u, None)
    q._nf_cache[m] = res
    return res


def normal_form(q: Quiver, terms: dict[Monomial, object], policy: str | random.Random = "leftmost") -> "LpaElement":
    """Rewrite a raw combination to normal form one redex at a time.

    ``policy`` picks the redex: "leftmost" takes the smallest reducible
    monomial, a ``random.Random`` picks uniformly.  Any policy gives the same
    result; the property tests rely on that.
    """
    cur: dict[Monomial, Fraction] = {}
    for m, c in terms.items():
        c = Fraction(c)
        if c:
            cur[m] = cur.get(m, 0) + c
    cur = {m: c for m, c in cur.items() if c}
    while True:
        redexes = [m for m in cur if not is_normal(q, m)]
        if not redexes:
            return LpaElement(q, cur)
        if policy == "leftmost":
            m = min(redexes)
        else:
            m = policy.choice(sorted(redexes))
        c = cur.pop(m)
        for t, d in _rewrite_once(q, m).items():
            x = cur.get(t, 0) + c * d
            if x:
                cur[t] = x
            else:
                cur.pop(t, None)


def path_str(p: Path) -> str:
    return "".join(p.edges) if p.edges else p.start


def monomial_str(m: Monomial) -> str:
    a, b = m
    if not b.edges:
        return path_str(a)
    ghost = f"{b.edges[0]}*" if len(b.edges) == 1 else f"({path_str(b)})*"
    if not a.edges:
        return ghost
    return f"{path_str(a)}{ghost}"


class LpaElement:
    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: Quiver, terms: dict[Monomial, Fraction] | None = None):
        self.quiver = quiver
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def _exact(cls, quiver: Quiver, terms: dict[Monomial, Fraction]) -> LpaElement:
        """Construct from Fraction coefficients without coercing them again."""
        x = cls.__new__(cls)
        x.quiver = quiver
        x.terms = {m: c for m, c in terms.items() if c}
        return x

    def _check(self, other: LpaElement) -> None:
        if other.quiver is not self.quiver:
            raise QuiverMismatch(f"{self.quiver!r} vs {other.quiver!r}")

    def __add__(self, other: LpaElement) -> LpaElement:
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t[m] + c if m in t else c
        return LpaElement._exact(self.quiver, t)

    def __neg__(self) -> LpaElement:
        return LpaElement._exact(self.quiver, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: LpaElement) -> LpaElement:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LpaElement):
            c = Fraction(other)
            return LpaElement._exact(self.quiver, {m: c * x for m, x in self.terms.items()})
        self._check(other)
        q = self.quiver
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                p = monomial_mul(m1, m2)
                if p is None:
                    continue
                c = c1 * c2
                for u, d in normal_form_monomial(q, p).items():
                    acc[u] += c if d == 1 else c * d
        return LpaElement._exact(q, acc)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other) -> bool:
        return isinstance(other, LpaElement) and other.quiver is self.quiver and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def star(self) -> LpaElement:
        return LpaElement._exact(self.quiver, {Monomial(m.ghost, m.real): c for m, c in self.terms.items()})

    def coords(self) -> dict[Monomial, Fraction]:
        return self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            s = monomial_str(m)
            parts.append(s if c == 1 else f"-{s}" if c == -1 else f"{c}*{s}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def element(q: Quiver, m: Monomial, c=1) -> LpaElement:
    """The normal form of c * m."""
    return LpaElement(q, {u: c * d for u, d in normal_form_monomial(q, m).items()})


def vertex(q: Quiver, v: str) -> LpaElement:
    return LpaElement(q, {Monomial(Path(v), Path(v)): 1})


def edge(q: Quiver, e: str) -> LpaElement:
    r = q.rng(e)
    return LpaElement(q, {Monomial(q.path(e), Path(r)): 1})


def ghost(q: Quiver, e: str) -> LpaElement:
    return edge(q, e).star()


def lpa_mul(a: LpaElement, b: LpaElement) -> LpaElement:
    return a * b


def lpa_add(a: LpaElement, b: LpaElement) -> LpaElement:
    return a + b


def lpa_scale(a: LpaElement, c) -> LpaElement:
    return a * c


def involution(a: LpaElement) -> LpaElement:
    return a.star()


# -- gradings ---------------------------------------------------------------

class StandardGrading:
    """Edge degrees in G; vertices sit in degree e and ghosts in inverse degrees."""

    def __init__(self, quiver: Quiver, group: Group = INTEGERS, degrees: dict[str, int] | None = None):
        self.quiver = quiver
        self.group = group
        degrees = dict(degrees or {})
        for e in quiver.edges:
            degrees.setdefault(e.id, 1 if not group.is_finite else None)
            if degrees[e.id] is None or not group.contains(degrees[e.id]):
                raise ValueError(f"edge {e.id!r} needs a degree in the group")
        self.degrees = degrees

    def path_degree(self, p: Path) -> int:
        g = self.group.identity
        for e in p.edges:
            g = self.group.op(g, self.degrees[e])
        return g

    def degree_of(self, m: Monomial) -> int:
        return self.group.op(self.path_degree(m.real), self.group.inv(self.path_degree(m.ghost)))


def canonical_grading(q: Quiver) -> StandardGrading:
    return StandardGrading(q, INTEGERS, {e.id: 1 for e in q.edges})


def degree_of(m: Monomial, grading: StandardGrading) -> int:
    return grading.degree_of(m)


def _length_bound(q: Quiver, len_bound: int) -> tuple[int, bool]:
    """Effective length bound and whether enumeration is exhaustive."""
    if q.is_acyclic():
        full = 2 * q.longest_path()
        return min(len_bound, full), len_bound >= full
    return len_bound, False


def normal_monomials(grading: StandardGrading, len_bound: int) -> dict[int, list[Monomial]]:
    """Normal monomials with len(alpha)+len(beta) <= len_bound, grouped by degree."""
    q = grading.quiver
    paths = q.paths(len_bound)
    by_range: dict[str, list[Path]] = defaultdict(list)
    for p in paths:
        by_range[q.path_range(p)].append(p)
    out: dict[int, list[Monomial]] = defaultdict(list)
    for v in q.vertices:
        ps = by_range[v]
        for a in ps:
            for b in ps:
                m = Monomial(a, b)
                if m.length <= len_bound and is_normal(q, m):
                    out[grading.degree_of(m)].append(m)
    for g in out:
        out[g].sort(key=lambda m: (m.length, m))
    return out


def homogeneous_basis(g: int, len_bound: int, grading: StandardGrading) -> list[Monomial]:
    """Normal monomials of degree g up to the length bound.

    Exhaustive for a finite acyclic quiver once the bound reaches twice the
    longest path; otherwise a truncation (see :func:`basis_is_complete`).
    """
    return list(normal_monomials(grading, len_bound).get(g, []))


def basis_is_complete(grading: StandardGrading, len_bound: int) -> bool:
    return _length_bound(grading.quiver, len_bound)[1]


def product_span(g: int, h: int, len_bound: int, grading: StandardGrading) -> Span:
    """Row-reduced span of all products S_g * S_h of basis monomials."""
    q = grading.quiver
    mons = normal_monomials(grading, len_bound)
    raw = set()
    for a in mons.get(g, []):
        for b in mons.get(h, []):
            p = monomial_mul(a, b)
            if p is not None:
                raw.add(p)
    return Span(normal_form_monomial(q, p) for p in sorted(raw))


def _raw_products(g: int, len_bound: int, grading: StandardGrading) -> set[Monomial]:
    grp = grading.group
    mons = normal_monomials(grading, len_bound)
    raw = set()
    for a in mons.get(g, []):
        for b in mons.get(grp.inv(g), []):
            p = monomial_mul(a, b)
            if p is not None:
                raw.add(p)
    return raw


def _is_prefix(a: Path, b: Path) -> bool:
    return a.start == b.start and b.edges[: len(a.edges)] == a.edges


def mset(g: int, len_bound: int, grading: StandardGrading) -> list[Monomial]:
    """{alpha alpha* : alpha minimal among real parts of S_g S_{g^-1} products}.

    Returned as raw monomials; distinct members are orthogonal idempotents.
    """
    reals = sorted({m.real for m in _raw_products(g, len_bound, grading)}, key=lambda p: (len(p.edges), p))
    minimal = [a for a in reals if not any(b != a and _is_prefix(b, a) for b in reals)]
    return [Monomial(a, a) for a in minimal]


class EpsilonReport(NamedTuple):
    value: LpaElement | None
    counterexample: Monomial | None
    stable: bool  # enlarging the length bound by one left the M-set unchanged
    mset: list[Monomial]


def epsilon_report(g: int, len_bound: int, grading: StandardGrading) -> EpsilonReport:
    q = grading.quiver
    grp = grading.group
    ms = mset(g, len_bound, grading)
    eps = LpaElement(q)
    for m in ms:
        eps = eps + element(q, m)
    eps_inv = LpaElement(q)
    for m in mset(grp.inv(g), len_bound, grading):
        eps_inv = eps_inv + element(q, m)
    bad = None
    for s in homogeneous_basis(g, len_bound, grading):
        x = element(q, s)
        if eps * x != x or x * eps_inv != x:
            bad = s
            break
    stable = mset(g, len_bound + 1, grading) == ms and q.family is None
    return EpsilonReport(None if bad else eps, bad, stable, ms)


def epsilon_of(g: int, len_bound: int, grading: StandardGrading) -> LpaElement | None:
    return epsilon_report(g, len_bound, grading).value


# -- adapter for the analysis layer -----------------------------------------

class LpaGrading:
    """A standard grading of L(E) seen through the analysis interface.

    ``bound`` is the radius of the degree window over Z and, for quivers with
    cycles, the length bound of enumerated monomials.  Finite acyclic quivers
    are always enumerated exhaustively.
    """

    engine = "leavitt"

    def __init__(self, quiver: Quiver, grading: StandardGrading | None = None, name: str = ""):
        self.quiver = quiver
        self.grading = grading or canonical_grading(quiver)
        self.group = self.grading.group
        self.name = name or quiver.name
        self.acyclic = quiver.is_acyclic()
        self.certificate = None
        self._mons: dict[int, dict[int, list[Monomial]]] = {}
        self._units: dict[tuple[int, int], list[LpaElement]] = {}
        self._windows: dict[int, list[int]] = {}

    def _len(self, bound: int) -> int:
        return 2 * self.quiver.longest_path() if self.acyclic else bound

    def _monomials(self, bound: int) -> dict[int, list[Monomial]]:
        L = self._len(bound)
        if L not in self._mons:
            self._mons[L] = normal_monomials(self.grading, L)
        return self._mons[L]

    def window(self, bound: int) -> list[int]:
        """The degree window; for acyclic quivers it always covers the support."""
        if bound not in self._windows:
            radius = bound
            if self.acyclic and not self.group.is_finite:
                sup = {g for g, ms in self._monomials(bound).items() if ms}
                radius = max([bound] + [abs(g) for g in sup])
            self._windows[bound] = balanced_window(self.group, radius)
        return self._windows[bound]

    def support(self, bound: int) -> set[int] | None:
        if not self.acyclic:
            return None
        return {g for g, ms in self._monomials(bound).items() if ms}

    def basis(self, g: int, bound: int) -> list[LpaElement]:
        return [LpaElement(self.quiver, {m: 1}) for m in self._monomials(bound).get(g, [])]

    def basis_monomials(self, g: int, bound: int) -> list[Monomial]:
        return list(self._monomials(bound).get(g, []))

    def complete(self, g: int, bound: int) -> bool:
        return self.acyclic

    def zero(self, bound: int = 0) -> LpaElement:
        return LpaElement(self.quiver)

    def products(self, xs: list[LpaElement], ys: list[LpaElement]) -> list[LpaElement]:
        """Normal forms of the distinct nonzero products of basis monomials."""
        if not xs or not ys:
            return []
        q = xs[0].quiver
        raw = set()
        for x in xs:
            (a,) = x.terms
            for y in ys:
                (b,) = y.terms
                p = monomial_mul(a, b)
                if p is not None:
                    raw.add(p)
        out = []
        for p in sorted(raw):
            x = element(q, p)
            if x.terms:
                out.append(x)
        return out

    def identity(self, bound: int) -> LpaElement | None:
        if self.quiver.family is not None:
            return None
        return sum((vertex(self.quiver, v) for v in self.quiver.vertices), LpaElement(self.quiver))

    def coords(self, x: LpaElement) -> dict:
        return x.terms

    def local_units(self, g: int, bound: int) -> list[LpaElement]:
        key = (g, self._len(bound))
        if key not in self._units:
            out = []
            for m in mset(g, key[1], self.grading):
                x = element(self.quiver, m)
                if x.terms and x not in out:
                    out.append(x)
            self._units[key] = out
        return list(self._units[key])

    def epsilon(self, g: int, bound: int) -> LpaElement | None:
        if self.quiver.family is not None:
            return None
        return epsilon_of(g, self._len(bound), self.grading)

    def element_units(self, g: int, s: LpaElement, bound: int) -> tuple[LpaElement, LpaElement]:
        """Per-element units: alpha alpha* on the left and beta beta* on the right, Tominaga-combined."""
        from .idempotents import tominaga_left_unit, tominaga_right_unit

        q = self.quiver
        left = [(element(q, Monomial(m.real, m.real)), LpaElement(q, {m: c})) for m, c in s.terms.items()]
        right = [(element(q, Monomial(m.ghost, m.ghost)), LpaElement(q, {m: c})) for m, c in s.terms.items()]
        if not left:
            return LpaElement(q), LpaElement(q)
        return tominaga_left_unit(left), tominaga_right_unit(right)

    def far_generators(self, coset, quotient, bound: int) -> list | None:
        """Units of degrees beyond the window: none for acyclic quivers, unknown otherwise."""
        return [] if self.acyclic else None

    def render(self, x) -> str:
        return str(x)


class DiscreteInfiniteGrading(LpaGrading):
    """Edgeless graph on infinitely many vertices, seen through finite windows.

    At window ``bound`` = n the engine works inside the truncation to n + 1
    vertices: v1..vn are in view and v(n+1) is handed out as the far generator.
    """

    def __init__(self):
        super().__init__(discrete(2), name="discrete_inf")
        self.certificate = FamilyCertificate(
            "infinitely many pairwise orthogonal vertex idempotents; elements are finite sums",
            periodic=True,
            orthogonal_tail=True,
        )
        self._trunc: dict[int, LpaGrading] = {}

    def at(self, bound: int) -> LpaGrading:
        n = max(bound, 1)
        if n not in self._trunc:
            self._trunc[n] = LpaGrading(discrete(n + 1), name="discrete_inf")
        return self._trunc[n]

    def _visible(self, bound: int) -> list[str]:
        return [f"v{i}" for i in range(1, max(bound, 1) + 1)]

    def support(self, bound: int) -> set[int]:
        return {0}

    def basis(self, g: int, bound: int) -> list[LpaElement]:
        if g != 0:
            return []
        q = self.at(bound).quiver
        return [vertex(q, v) for v in self._visible(bound)]

    def basis_monomials(self, g: int, bound: int) -> list[Monomial]:
        return [Monomial(Path(v), Path(v)) for v in self._visible(bound)] if g == 0 else []

    def complete(self, g: int, bound: int) -> bool:
        return g != 0

    def zero(self, bound: int = 0) -> LpaElement:
        return LpaElement(self.at(bound).quiver)

    def identity(self, bound: int) -> None:
        return None

    def local_units(self, g: int, bound: int) -> list[LpaElement]:
        return self.basis(g, bound)

    def epsilon(self, g: int, bound: int) -> None:
        return None

    def element_units(self, g: int, s: LpaElement, bound: int):
        return self.at(bound).element_units(g, s, bound)

    def window(self, bound: int) -> list[int]:
        return balanced_window(self.group, bound)

    def far_generators(self, coset, quotient, bound: int) -> list:
        if quotient.coset_of(0) != coset:
            return []
        q = self.at(bound).quiver
        return [vertex(q, f"v{max(bound, 1) + 1}")]

    def principal_candidate(self, bound: int) -> LpaElement:
        """v1 + ... + vn: the join of the vertices in view."""
        return sum(self.basis(0, bound), self.zero(bound))


def builtin_quiver(name: str) -> LpaGrading:
    name = name.removeprefix("builtin:")
    if name == "fig2":
        return LpaGrading(fig2())
    if name == "loop":
        return LpaGrading(loop())
    if name == "discrete_inf":
        return DiscreteInfiniteGrading()
    from .partial_skew import UnknownBuiltin

    raise UnknownBuiltin(name)
