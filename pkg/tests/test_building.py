import itertools

import pytest

from nestex.building import (BuiltLattice, all_building_sets, augmented_built_lattice,
                             building_ideal, contract, delete_ideal, maximal_building_set,
                             minimal_building_set, restrict, validate_building_set)
from nestex.errors import MissingJoinIrreducible, NotABuildingSet, NotJoinIrreducible
from nestex.matroid import boolean, lattice_of_flats, uniform
from nestex.poset import boolean_lattice, partition_lattice, poset_isomorphic


def ids(L, labels):
    return [L.index(x) for x in labels]


def boolean_building_sets_oracle(n):
    """Set-system characterization on B_n: singletons present, and unions of
    intersecting members are members."""
    ground = range(1, n + 1)
    big = [frozenset(c) for k in range(2, n + 1) for c in itertools.combinations(ground, k)]
    out = []
    for k in range(len(big) + 1):
        for extra in itertools.combinations(big, k):
            G = {frozenset([i]) for i in ground} | set(extra)
            if all(a | b in G for a in G for b in G if a & b):
                out.append(G)
    return out


def test_section_example_is_valid():
    B3 = boolean_lattice(3)
    BL = validate_building_set(B3, ids(B3, ["1", "2", "3", "12", "23", "123"]))
    assert BL.validated


def test_maximal_is_valid_everywhere():
    for L in [boolean_lattice(3), partition_lattice(4), lattice_of_flats(uniform(3, 4)).lattice]:
        assert maximal_building_set(L).G == list(range(1, L.size))


def test_missing_atom():
    B3 = boolean_lattice(3)
    with pytest.raises(MissingJoinIrreducible) as ei:
        BuiltLattice(B3, ids(B3, ["1", "2", "123"]))
    assert ei.value.element == "3"


def test_structural_failure_names_element():
    B3 = boolean_lattice(3)
    with pytest.raises(NotABuildingSet) as ei:
        BuiltLattice(B3, ids(B3, ["1", "2", "3", "12", "13"]))
    assert ei.value.element == "123"


@pytest.mark.parametrize("n,count", [(2, 2), (3, 12)])
def test_all_building_sets_small(n, count):
    assert len(all_building_sets(boolean_lattice(n))) == count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_building_sets_match_set_system_oracle(n):
    L = boolean_lattice(n)
    got = {frozenset(L.objects[x] for x in G) for G in all_building_sets(L)}
    want = {frozenset(G) for G in boolean_building_sets_oracle(n)}
    assert got == want


def test_minimal_building_sets():
    P4 = partition_lattice(4)
    Gmin = minimal_building_set(P4)
    assert len(Gmin.G) == 11
    for x in Gmin.G:
        assert sum(len(b) > 1 for b in P4.objects[x]) == 1
    B4 = boolean_lattice(4)
    assert minimal_building_set(B4).G == B4.atoms()


def test_factors():
    B3 = boolean_lattice(3)
    BL = BuiltLattice(B3, ids(B3, ["1", "2", "3", "123"]))
    assert BL.labels_of(BL.factors(B3.index("12"))) == ["1", "2"]
    assert BL.factors(B3.bottom) == []
    P4 = partition_lattice(4)
    Gmin = minimal_building_set(P4)
    assert Gmin.labels_of(Gmin.factors(P4.index("12|34"))) == ["12", "34"]
    for g in Gmin.G:
        assert Gmin.factors(g) == [g]


def test_restrict_and_contract_examples():
    P4 = partition_lattice(4)
    Gmin = minimal_building_set(P4)
    R = restrict(Gmin, P4.index("123"))
    assert poset_isomorphic(R.lattice, partition_lattice(3)) is not None
    assert len(R.G) == 4
    C = contract(Gmin, P4.index("12"))
    assert poset_isomorphic(C.lattice, partition_lattice(3)) is not None
    assert len(C.G) == len(minimal_building_set(C.lattice).G)
    B3 = boolean_lattice(3)
    M = maximal_building_set(B3)
    assert restrict(M, B3.top).G == M.G
    assert contract(M, B3.bottom).G == M.G
    assert poset_isomorphic(contract(M, B3.index("1")).lattice, boolean_lattice(2)) is not None


def test_building_ideal_and_deletion():
    B3 = boolean_lattice(3)
    BL = BuiltLattice(B3, ids(B3, ["1", "2", "3", "12", "23", "123"]))
    assert sorted(B3.labels[x] for x in building_ideal(BL, "3").members) == ["13", "3"]
    D = delete_ideal(BL, "3")
    assert D.lattice.labels == ["∅", "1", "2", "12", "23", "123"]
    assert D.gset_labels() == ["1", "2", "12", "23", "123"]
    M = maximal_building_set(B3)
    assert building_ideal(M, "1").members == [B3.index("1")]
    with pytest.raises(NotJoinIrreducible):
        delete_ideal(M, "12")


def test_fig4_deletion_chain():
    B4 = boolean_lattice(4)
    BL = BuiltLattice(B4, ids(B4, ["1", "2", "3", "4", "12", "34", "1234"]))
    D1 = delete_ideal(BL, "4")
    D2 = delete_ideal(D1, "34")
    D3 = delete_ideal(D2, "2")
    for D in (D1, D2, D3):
        assert D.validated
        assert D.rank() == 4
    assert D3.gset_labels() == ["1", "3", "12", "1234"]


def test_augmented():
    aug = augmented_built_lattice(uniform(1, 2))
    assert aug.rank() == 2
    aug23 = augmented_built_lattice(uniform(2, 3))
    assert poset_isomorphic(aug23.lattice, lattice_of_flats(uniform(3, 4)).lattice) is not None
    small = augmented_built_lattice(boolean(1))
    assert small.rank() == 2 and small.gset_labels() == ["1", "e", "1e"]


def test_factorization_lemma(small_corpus):
    """factors(H) is the disjoint union of factors(H meet F_i) over factors F_i of F."""
    for inst in small_corpus:
        BL = inst.built
        L = BL.lattice
        if L.size > 16:
            continue
        for F in range(L.size):
            fac = BL.factors(F)
            assert L.join_of_set(fac) == F
            for H in range(L.size):
                if not L.leq(H, F):
                    continue
                parts = [BL.factors(L.meet(H, Fi)) for Fi in fac]
                flat = [x for p in parts for x in p]
                assert len(flat) == len(set(flat))
                assert sorted(flat) == sorted(BL.factors(H))


def test_restrict_contract_stay_valid(small_corpus):
    for inst in small_corpus:
        BL = inst.built
        L = BL.lattice
        if L.size > 16:
            continue
        for F in range(1, L.size):
            validate_building_set(restrict(BL, F).lattice, restrict(BL, F).G)
        for F in range(L.size - 1):
            validate_building_set(contract(BL, F).lattice, contract(BL, F).G)
