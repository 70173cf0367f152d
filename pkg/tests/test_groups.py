from itertools import permutations

import pytest

from grada.groups import (
    Coset,
    MalformedTable,
    NotNormal,
    NotSubgroup,
    balanced_window,
    construct_group,
    cyclic_group,
    enumerate_window,
    finite_group,
    integers,
    normal_subgroup,
    quotient,
    trivial_subgroup,
)

C4_TABLE = [[(i + j) % 4 for j in range(4)] for i in range(4)]


def s3():
    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    return finite_group(table), perms, index


def test_integers():
    z = construct_group("integers")
    assert z is integers()
    assert z.identity == 0 and not z.is_finite
    assert z.op(3, -5) == -2 and z.inv(7) == -7


def test_cyclic_four_from_table():
    g = construct_group(C4_TABLE)
    assert g.order == 4
    assert g.op(3, 2) == 1 and g.inv(1) == 3


def test_malformed():
    with pytest.raises(MalformedTable):
        finite_group([[0, 1], [0, 1]])


def test_windows():
    assert enumerate_window(integers(), 2) == [-2, -1, 0, 1, 2]
    assert enumerate_window(cyclic_group(4), 1) == [0, 1, 2, 3]
    assert enumerate_window(integers(), 0) == [0]
    assert balanced_window(integers(), 2) == [0, 1, -1, 2, -2]


def test_quotients():
    z = integers()
    q = quotient(z, normal_subgroup(z, 2))
    assert q.order == 2
    assert q.cosets(5) == [Coset(0), Coset(1)]
    assert q.coset_of(-3) == Coset(1)
    assert q.op(Coset(1), Coset(1)) == Coset(0)
    c4 = cyclic_group(4)
    q4 = quotient(c4, normal_subgroup(c4, [0, 2]))
    assert q4.order == 2
    assert q4.coset_of(3) == q4.coset_of(1)


def test_trivial_quotient_is_the_group():
    z = integers()
    q = quotient(z, trivial_subgroup(z))
    assert not q.is_finite
    assert q.coset_of(-4) == Coset(-4)


def test_s3_transposition_subgroup_is_not_normal():
    g, perms, index = s3()
    swap = index[(1, 0, 2)]
    with pytest.raises(NotNormal):
        normal_subgroup(g, [index[(0, 1, 2)], swap])
    # the rotations do form a normal subgroup of index two
    rot = [index[p] for p in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]]
    assert quotient(g, normal_subgroup(g, rot)).order == 2


def test_not_a_subgroup():
    c4 = cyclic_group(4)
    with pytest.raises(NotSubgroup):
        normal_subgroup(c4, [0, 1])


def test_subgroup_names():
    assert str(normal_subgroup(integers(), 2)) == "2Z"
    assert str(normal_subgroup(cyclic_group(4), [0, 2])) == "{0,2}"
