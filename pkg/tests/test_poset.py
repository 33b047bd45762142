import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nestex.errors import NotALattice, NotAPartialOrder, NotGraded, NotComparable
from nestex.poset import (Lattice, boolean_lattice, build_lattice, chain, partition_lattice,
                          poset_isomorphic, product)

BELL = [1, 1, 2, 5, 15, 52]


def test_boolean_top_is_full_set():
    B3 = boolean_lattice(3)
    assert B3.size == 8
    assert B3.objects[B3.top] == frozenset({1, 2, 3})
    assert B3.objects[B3.bottom] == frozenset()


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_lattice_has_bell_many_elements(n):
    assert partition_lattice(n).size == BELL[n]


def test_missing_join_raises():
    with pytest.raises(NotALattice):
        build_lattice(["0", "a", "b"], [("0", "a"), ("0", "b")])


def test_not_a_partial_order():
    with pytest.raises(NotAPartialOrder):
        build_lattice([1, 2], lambda x, y: True)
    with pytest.raises(NotAPartialOrder):
        build_lattice([1, 2, 3], [(1, 2), (2, 3)])  # not transitive


def test_join_meet_examples():
    P3 = partition_lattice(3)
    assert P3.join(P3.index("12"), P3.index("13")) == P3.top
    B3 = boolean_lattice(3)
    assert B3.labels[B3.meet(B3.index("12"), B3.index("23"))] == "2"
    for x in range(B3.size):
        assert B3.join(x, B3.bottom) == x


def test_join_of_set():
    B3 = boolean_lattice(3)
    assert B3.join_of_set([]) == B3.bottom
    assert B3.join_of_set([B3.index(s) for s in "123"]) == B3.top
    P4 = partition_lattice(4)
    assert P4.labels[P4.join_of_set([P4.index("12"), P4.index("34")])] == "12|34"


def test_pentagon_is_not_graded():
    # 0 < a < b < 1 and 0 < c < 1
    L = build_lattice("0abc1", [("0", "a"), ("a", "b"), ("0", "b"), ("b", "1"), ("a", "1"),
                                ("0", "c"), ("c", "1"), ("0", "1")])
    with pytest.raises(NotGraded) as ei:
        L.rank_function()
    c1, c2 = ei.value.chains
    assert len(c1) != len(c2)
    assert not L.is_graded()


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_rank_is_n_minus_blocks(n):
    P = partition_lattice(n)
    for x in range(P.size):
        assert P.rank(x) == n - len(P.objects[x])


def test_boolean_rank_is_cardinality():
    B = boolean_lattice(4)
    assert all(B.rank(x) == len(B.objects[x]) for x in range(B.size))


def test_join_irreducibles():
    B3 = boolean_lattice(3)
    assert sorted(B3.labels[x] for x in B3.join_irreducibles()) == ["1", "2", "3"]
    P4 = partition_lattice(4)
    assert P4.join_irreducibles() == P4.atoms()
    assert len(P4.atoms()) == 6
    C = chain(2)
    assert C.join_irreducibles() == [1, 2]
    assert chain(1).atoms() == [1]


def test_intervals():
    B3 = boolean_lattice(3)
    sub, emb = B3.interval(B3.index("1"), B3.top)
    assert poset_isomorphic(sub, boolean_lattice(2)) is not None
    assert [B3.labels[e] for e in emb] == sub.labels
    full, _ = B3.interval(B3.bottom, B3.top)
    assert full.labels == B3.labels
    P4 = partition_lattice(4)
    up, _ = P4.interval(P4.index("12"), P4.top)
    assert poset_isomorphic(up, partition_lattice(3)) is not None
    with pytest.raises(NotComparable):
        B3.interval(B3.index("1"), B3.index("2"))


def test_isomorphism_examples():
    B2 = boolean_lattice(2)
    assert poset_isomorphic(B2, product(chain(1), chain(1))) is not None
    assert poset_isomorphic(B2, chain(3)) is None
    P4 = partition_lattice(4)
    low, _ = P4.interval(P4.bottom, P4.index("12|34"))
    a, _ = P4.interval(P4.bottom, P4.index("12"))
    b, _ = P4.interval(P4.bottom, P4.index("34"))
    assert poset_isomorphic(low, product(a, b)) is not None


def test_json_roundtrip():
    P4 = partition_lattice(4)
    L = Lattice.from_json(P4.to_json())
    assert L.labels == P4.labels
    assert L.down == P4.down
    with pytest.raises(NotAPartialOrder):
        Lattice.from_covers(["0", "a", "1"], [(0, 1), (1, 2), (0, 2)])


def _lattices():
    return [boolean_lattice(3), partition_lattice(4), chain(3),
            product(chain(2), chain(1))]


@pytest.mark.parametrize("L", _lattices(), ids=["B3", "Pi4", "C3", "C2xC1"])
def test_join_meet_are_bounds(L):
    for a, b in itertools.product(range(L.size), repeat=2):
        j, m = L.join(a, b), L.meet(a, b)
        assert L.leq(a, j) and L.leq(b, j) and L.leq(m, a) and L.leq(m, b)
        for u in range(L.size):
            if L.leq(a, u) and L.leq(b, u):
                assert L.leq(j, u)
            if L.leq(u, a) and L.leq(u, b):
                assert L.leq(u, m)


@pytest.mark.parametrize("L", _lattices(), ids=["B3", "Pi4", "C3", "C2xC1"])
def test_covers_and_rank(L):
    # covers regenerate the order
    M = Lattice.from_covers(L.labels, L.covers())
    assert M.down == L.down
    r = L.rank_function()
    assert all(r[b] == r[a] + 1 for a, b in L.covers())
    assert set(L.atoms()) <= set(L.join_irreducibles())


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(1, 4)), st.sets(st.integers(1, 4)))
def test_boolean_join_is_union(a, b):
    B4 = boolean_lattice(4)
    x, y = B4.index(frozenset(a)), B4.index(frozenset(b))
    assert B4.objects[B4.join(x, y)] == frozenset(a | b)
    assert B4.objects[B4.meet(x, y)] == frozenset(a & b)
