import json
import random

import pytest

from oracle import oracle_for, to_units

from grada.graded import QuiverMismatch
from grada.groups import INTEGERS, cyclic_group
from grada.leavitt import (
    DiscreteInfiniteGrading,
    LpaElement,
    LpaGrading,
    Monomial,
    Path,
    Quiver,
    StandardGrading,
    builtin_quiver,
    canonical_grading,
    degree_of,
    discrete,
    edge,
    element,
    epsilon_of,
    epsilon_report,
    fig2,
    ghost,
    homogeneous_basis,
    is_normal,
    loop,
    monomial_mul,
    mset,
    normal_form,
    product_span,
    quiver_from_json,
    vertex,
)
from grada.partial_skew import UnknownBuiltin


def mono(real: Path, ghost_: Path) -> Monomial:
    return Monomial(real, ghost_)


@pytest.fixture
def f2():
    q = fig2()
    return q, canonical_grading(q)


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(["a", "a"], [])
    with pytest.raises(ValueError):
        Quiver(["a"], [("e", "a", "b")])
    q = fig2()
    assert q.src("f") == "v1" and q.rng("f") == "v2"
    assert q.is_acyclic() and not loop().is_acyclic()
    with pytest.raises(ValueError):
        Quiver(["a", "b"], [("e", "a", "b"), ("g", "a", "b")]).path("e", "g")


def test_quiver_json():
    obj = {"vertices": ["a", "b"], "edges": [{"id": "e", "src": "a", "rng": "b"}], "degrees": {"e": 2}}
    q, deg = quiver_from_json(json.loads(json.dumps(obj)))
    assert q.vertices == ("a", "b") and deg == {"e": 2}


def test_monomial_product_cases(f2):
    q, _ = f2
    f = q.path("f")
    v1, v2 = Path("v1"), Path("v2")
    # concatenation through vertex ghost parts
    assert monomial_mul(mono(f, v2), mono(v2, f)) == mono(f, f)
    # aa* times bb* with a a prefix of b
    assert monomial_mul(mono(v1, v1), mono(f, f)) == mono(f, f)
    # mismatched vertices
    assert monomial_mul(mono(f, v2), mono(v1, v1)) is None


def test_normal_forms(f2):
    q, _ = f2
    f = q.path("f")
    assert not is_normal(q, mono(f, f))
    assert element(q, mono(f, f)) == vertex(q, "v1")
    assert vertex(q, "v1") == element(q, mono(Path("v1"), Path("v1")))
    L = loop()
    x = L.path("x")
    assert element(L, mono(x, x)) == vertex(L, "v")


def test_products(f2):
    q, _ = f2
    f, fs = edge(q, "f"), ghost(q, "f")
    assert fs * f == vertex(q, "v2")
    assert f * LpaElement(q) == LpaElement(q)
    assert (f * fs) * f == f
    assert f * fs == vertex(q, "v1")


def test_involution(f2):
    q, _ = f2
    L = loop()
    x = edge(L, "x")
    assert (x * x * x.star()).star() == x * x.star() * x.star()
    assert vertex(q, "v1").star() == vertex(q, "v1")
    a = Quiver(["u", "w"], [("g", "u", "w"), ("h", "u", "w")])
    assert (edge(a, "g") * ghost(a, "h")).star() == edge(a, "h") * ghost(a, "g")


def test_quiver_mismatch():
    with pytest.raises(QuiverMismatch):
        vertex(fig2(), "v1") * vertex(fig2(), "v1")


def test_degrees(f2):
    q, g = f2
    assert degree_of(mono(Path("v1"), Path("v1")), g) == 0
    assert degree_of(mono(q.path("f"), Path("v2")), g) == 1
    a = Quiver(["u", "w"], [("g", "u", "w"), ("h", "u", "w")])
    assert degree_of(mono(a.path("g"), a.path("h")), canonical_grading(a)) == 0


def test_grading_needs_degrees_over_finite_groups():
    with pytest.raises(ValueError):
        StandardGrading(fig2(), cyclic_group(2))
    g = StandardGrading(fig2(), cyclic_group(2), {"f": 1})
    assert g.degree_of(mono(Path("v2"), fig2().path("f"))) == 1


def test_homogeneous_basis(f2):
    q, g = f2
    assert homogeneous_basis(0, 2, g) == [mono(Path("v1"), Path("v1")), mono(Path("v2"), Path("v2"))]
    assert homogeneous_basis(2, 4, g) == []
    assert homogeneous_basis(1, 1, g) == [mono(q.path("f"), Path("v2"))]


def test_product_spans(f2):
    q, g = f2
    v1, v2 = mono(Path("v1"), Path("v1")), mono(Path("v2"), Path("v2"))
    assert product_span(1, -1, 2, g).basis() == [{v1: 1}]
    assert product_span(-1, 1, 2, g).basis() == [{v2: 1}]
    assert product_span(2, -2, 2, g).rank == 0


def test_msets(f2):
    q, g = f2
    f = q.path("f")
    assert mset(1, 2, g) == [mono(f, f)]
    assert [element(q, m) for m in mset(1, 2, g)] == [vertex(q, "v1")]
    assert mset(0, 2, g) == [mono(Path("v1"), Path("v1")), mono(Path("v2"), Path("v2"))]
    L = loop()
    x = L.path("x")
    assert mset(1, 4, canonical_grading(L)) == [mono(x, x)]


def test_epsilons_match_oracle(f2):
    q, g = f2
    orc = oracle_for(q, {"f": 1})
    for d in (1, -1, 0, 2):
        assert to_units(orc, epsilon_of(d, 2, g)) == orc.epsilon(d)
    assert epsilon_of(1, 2, g) == vertex(q, "v1")
    assert epsilon_of(-1, 2, g) == vertex(q, "v2")
    assert epsilon_of(0, 2, g) == vertex(q, "v1") + vertex(q, "v2")
    assert epsilon_of(2, 2, g).is_zero()


def test_discrete_truncations_grow():
    prev = None
    for n in range(1, 21):
        rep = epsilon_report(0, 2, canonical_grading(discrete(n)))
        assert rep.value == sum((vertex(rep.value.quiver, f"v{i}") for i in range(1, n + 1)), LpaElement(rep.value.quiver))
        assert not rep.stable
        if prev is not None:
            assert len(rep.value.terms) == len(prev.terms) + 1
        prev = rep.value
    d = DiscreteInfiniteGrading()
    assert str(d.principal_candidate(3)) == "v1 + v2 + v3"


def test_random_redex_policy_is_deterministic_per_seed():
    q = Quiver(["u", "w"], [("a", "u", "w"), ("b", "u", "w"), ("c", "u", "u")])
    raw = {mono(q.path("a"), q.path("a")): 1, mono(q.path("c", "a"), q.path("c", "a")): 2}
    assert normal_form(q, raw, random.Random(3)) == normal_form(q, raw)


def test_builtins():
    assert builtin_quiver("builtin:fig2").quiver.name == "fig2"
    assert isinstance(builtin_quiver("discrete_inf"), DiscreteInfiniteGrading)
    with pytest.raises(UnknownBuiltin):
        builtin_quiver("nope")


def test_adapter_identity_and_window():
    g = LpaGrading(fig2())
    q = g.quiver
    assert g.identity(0) == vertex(q, "v1") + vertex(q, "v2")
    assert g.support(0) == {-1, 0, 1}
    assert set(g.window(0)) >= {-1, 0, 1}
    assert g.far_generators(None, None, 3) == []
    assert LpaGrading(loop()).far_generators(None, None, 3) is None
