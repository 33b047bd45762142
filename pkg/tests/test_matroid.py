import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nestex.errors import ExchangeFailure, RankZeroTruncation
from nestex.matroid import (Matroid, boolean, complete_graph_edges, direct_sum, dual,
                            free_coextension, from_bases, graphic, is_geometric,
                            lattice_of_flats, nbc_bases, restrict_to_atoms, truncation, uniform)
from nestex.poset import boolean_lattice, partition_lattice, poset_isomorphic


def mobius_bottom_top(L):
    """mu(0, 1) by the defining recursion."""
    mu = {L.bottom: 1}
    for x in range(1, L.size):
        mu[x] = -sum(mu[y] for y in range(x) if L.less(y, x))
    return mu[L.top]


def brute_flats(M):
    """Closed sets from the rank function, by brute force over all subsets."""
    E = M.ground
    out = set()
    for k in range(len(E) + 1):
        for X in itertools.combinations(E, k):
            r = M.rank_of(M.mask(X))
            if all(M.rank_of(M.mask(X + (y,))) > r for y in E if y not in X):
                out.add(frozenset(X))
    return out


def test_uniform_and_from_bases():
    M = uniform(3, 4)
    assert len(M.bases) == 4 and M.r == 3
    assert from_bases(["1", "2"], [["1"], ["2"]]) == uniform(1, 2)


def test_k4_has_cayley_many_trees():
    K4 = graphic(complete_graph_edges(4))
    assert K4.r == 3
    assert len(K4.bases) == 4 ** (4 - 2)


def test_spanning_tree_count_by_enumeration():
    # independent oracle: edge subsets of size 3 that connect all 4 vertices
    edges = complete_graph_edges(4)
    count = 0
    for T in itertools.combinations(edges, 3):
        seen = {1}
        changed = True
        while changed:
            changed = False
            for u, v in T:
                if (u in seen) != (v in seen):
                    seen |= {u, v}
                    changed = True
        count += len(seen) == 4
    assert count == len(graphic(edges).bases)


def test_exchange_failure():
    with pytest.raises(ExchangeFailure):
        Matroid(["1", "2", "3", "4"], [["1", "2"], ["3", "4"]])


def test_flats_counts():
    K4 = lattice_of_flats(graphic(complete_graph_edges(4))).lattice
    assert K4.size == 15
    assert poset_isomorphic(K4, partition_lattice(4)) is not None
    assert lattice_of_flats(uniform(3, 4)).lattice.size == 12
    assert poset_isomorphic(lattice_of_flats(boolean(3)).lattice, boolean_lattice(3)) is not None


@pytest.mark.parametrize("M", [uniform(2, 3), uniform(3, 5), graphic(complete_graph_edges(4)),
                               direct_sum(uniform(1, 2), uniform(1, 1))],
                         ids=["U23", "U35", "K4", "U12+U11"])
def test_flats_match_brute_force(M):
    assert set(map(frozenset, (M.labels_of(f) for f in M.flats()))) == brute_flats(M)
    GL = lattice_of_flats(M)
    L = GL.lattice
    assert L.rank() == M.r
    assert is_geometric(L)
    for x in range(L.size):
        assert M.closure(GL.flat_of[x]) == GL.flat_of[x]


def test_dual_truncation_sum():
    assert dual(uniform(1, 3)) == uniform(2, 3)
    assert truncation(uniform(3, 4)) == uniform(2, 4)
    assert direct_sum(uniform(1, 1), uniform(1, 1)) == boolean(2)
    with pytest.raises(RankZeroTruncation):
        truncation(uniform(0, 2))


def test_free_coextension():
    Mp, e = free_coextension(uniform(2, 3))
    assert Mp.relabel({e: "4"}) == uniform(3, 4)
    assert free_coextension(uniform(0, 1))[0].r == 1
    # flats of M' are F u e for flats F of M, plus independent sets of M
    M = uniform(2, 3)
    got = {frozenset(Mp.labels_of(f)) for f in Mp.flats()}
    want = {frozenset(M.labels_of(f)) | {e} for f in M.flats()}
    want |= {frozenset(M.labels_of(i)) for i in M.independent_sets()}
    assert got == want
    assert len(got) == 5 + 7


def test_circuits_and_nbc():
    M = uniform(3, 4)
    assert M.circuits() == [frozenset("1234")]
    assert M.broken_circuits() == [frozenset("234")]
    assert M.nbc_bases() == [("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4")]
    assert uniform(2, 3).nbc_bases() == [("1", "2"), ("1", "3")]
    assert boolean(4).nbc_bases() == [("1", "2", "3", "4")]


@pytest.mark.parametrize("M", [uniform(2, 3), uniform(2, 4), uniform(3, 4), uniform(3, 5),
                               graphic(complete_graph_edges(4)), boolean(3)],
                         ids=["U23", "U24", "U34", "U35", "K4", "B3"])
def test_nbc_count_is_mobius(M):
    L = lattice_of_flats(M).lattice
    assert len(nbc_bases(L)) == abs(mobius_bottom_top(L))


def test_partition_nbc_count_is_factorial():
    for n, fact in [(3, 2), (4, 6), (5, 24)]:
        assert len(nbc_bases(partition_lattice(n))) == fact


@settings(max_examples=25, deadline=None)
@given(st.permutations(["1", "2", "3", "4", "5"]))
def test_lex_first_basis_is_nbc(order):
    M = uniform(3, 5)
    nbc = M.nbc_bases(order)
    pos = {x: i for i, x in enumerate(order)}
    first = min((tuple(sorted(B, key=pos.get)) for B in M.basis_sets()),
                key=lambda B: [pos[x] for x in B])
    assert nbc[0] == first
    assert len(nbc) == 6  # |mu| of the rank 3 uniform lattice on 5 atoms


def test_dual_involution():
    for M in [uniform(2, 4), graphic(complete_graph_edges(4))]:
        assert dual(dual(M)) == M
        assert len(dual(M).bases) == len(M.bases)


def test_restrict_to_atoms():
    GL = lattice_of_flats(uniform(3, 4))
    L = GL.lattice
    B = restrict_to_atoms(GL, [L.index("1"), L.index("2"), L.index("3")])
    assert poset_isomorphic(B.lattice, boolean_lattice(3)) is not None
    assert restrict_to_atoms(GL, L.atoms()).lattice.size == L.size
    assert restrict_to_atoms(GL, []).lattice.size == 1


def test_json_roundtrip():
    M = graphic(complete_graph_edges(4))
    assert Matroid.from_json(M.to_json()) == M
