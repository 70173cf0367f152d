import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_seq

from grada.analysis import HOLDS
from grada.groups import cyclic_group
from grada.numeric import ONE, kron, seq_make
from grada.partial_skew import (
    DomainError,
    SkewElement,
    SkewGrading,
    UnknownBuiltin,
    action_from_json,
    axiom_check,
    builtin,
    mono,
    restricted_shift_action,
    skew_epsilon,
    skew_identity,
)


def unit(n: int):
    return seq_make(1, {0: 0, n: 0})


def test_axioms():
    assert axiom_check(builtin("ex61"), 5).status == HOLDS
    assert axiom_check(builtin("ex62"), 5).status == HOLDS
    assert axiom_check(builtin("sec7"), 5).status == HOLDS
    bad = axiom_check(builtin("ex61_corrupted"), 5)
    assert bad.status == "Fails"
    assert bad.witness == (2, -2) and bad.condition == 3


def test_reflection_product():
    pa = builtin("ex61")
    x = mono(pa, kron(1), 1) * mono(pa, kron(-1), -1)
    assert x == SkewElement(pa, {0: kron(1)})
    assert x == skew_epsilon(pa, 1)


def test_shift_ideal_identity():
    pa = builtin("ex62")
    assert pa.unit(3) == unit(3)
    gamma = kron(-1)
    lhs = mono(pa, gamma, -3) * mono(pa, pa.unit(3), 3) + mono(pa, pa.unit(-1), -1) * mono(pa, pa.unit(1), 1)
    assert lhs == SkewElement(pa, {0: seq_make(1, {0: 0})})
    # the two summands separately
    assert mono(pa, gamma, -3) * mono(pa, pa.unit(3), 3) == SkewElement(pa, {0: gamma})
    assert mono(pa, pa.unit(-1), -1) * mono(pa, pa.unit(1), 1) == SkewElement(pa, {0: pa.unit(-1)})


def test_cyclic_example_square():
    pa = builtin("sec7")
    s = mono(pa, kron(2), 1) + mono(pa, kron(1), 3)
    eps1 = skew_epsilon(pa, 1) + skew_epsilon(pa, 3)
    assert s * s == SkewElement(pa, {0: kron(1) + kron(2)})
    assert pa.unit(1) == kron(2) and pa.unit(3) == kron(1) and pa.unit(2).is_zero()
    assert eps1 == SkewElement(pa, {0: kron(1) + kron(2)})


def test_epsilons():
    assert skew_epsilon(builtin("ex61"), 3) == SkewElement(builtin("ex61"), {0: kron(3)})
    pa = builtin("ex62")
    assert skew_epsilon(pa, 0) == SkewElement(pa, {0: seq_make(1, {0: 0})})
    for name in ("ex61", "ex62", "sec7"):
        a = builtin(name)
        one = skew_identity(a)
        x = mono(a, a.unit(1), 1)
        assert one * x == x == x * one


def test_domains():
    pa = builtin("ex61")
    with pytest.raises(DomainError):
        mono(pa, kron(2), 1)
    with pytest.raises(DomainError):
        pa.apply(1, kron(1))


def test_unknown_builtin():
    with pytest.raises(UnknownBuiltin):
        builtin("ex99")


def test_json_actions():
    pa = action_from_json({"kind": "restricted_shift", "group": "integers", "ideal": {"default": 1, "exceptions": {"0": 0}}})
    assert pa.unit(3) == builtin("ex62").unit(3)
    pb = action_from_json({"builtin": "sec7"})
    assert pb.group.order == 4
    with pytest.raises(ValueError):
        action_from_json({"kind": "other"})


def test_finite_restricted_shift():
    pa = restricted_shift_action(cyclic_group(3), kron(1) + kron(2))
    assert axiom_check(pa, 2).status == HOLDS


def test_coefficient_bases():
    g = SkewGrading(builtin("sec7"))
    assert g.coefficient_basis(1, 0) == [kron(2)]
    assert g.coefficient_basis(2, 0) == []
    h = SkewGrading(builtin("ex62"))
    b = h.coefficient_basis(1, 1)
    assert b[0] == unit(1) and kron(-1) in b and kron(1) not in b and kron(0) not in b


def _random_element(rng: random.Random, pa) -> SkewElement:
    x = SkewElement(pa)
    degrees = list(pa.group.elements()) if pa.group.is_finite else list(range(-3, 4))
    for _ in range(rng.randint(1, 3)):
        g = rng.choice(degrees)
        x = x + SkewElement(pa, {g: pa.unit(g) * random_seq(rng)})
    return x


@settings(max_examples=200)
@given(st.sampled_from(["ex61", "ex62", "sec7"]), st.integers(0, 2**31 - 1))
def test_skew_associativity(name, seed):
    pa = builtin(name)
    rng = random.Random(seed)
    x, y, z = (_random_element(rng, pa) for _ in range(3))
    assert (x * y) * z == x * (y * z)
