import pytest
from hypothesis import given, settings, strategies as st

from nestex.building import maximal_building_set, minimal_building_set
from nestex.complexes import SimplicialComplex, simplex
from nestex.ears import (Ear, EarDecomposition, convex_ear_decomposition, facet_basis_check,
                         nested_word, shelling_check, shelling_failure, shelling_h_vector,
                         verify_ced, label_set)
from nestex.labeling import atom_order_map, edge_labels, omega_table
from nestex.nested import maximal_nested_sets, nested_complex
from nestex.poset import boolean_lattice, partition_lattice

from conftest import by_key


def test_u34_gmax_has_three_ears():
    BL = by_key("U34:max").built
    ed = convex_ear_decomposition(BL)
    assert [e.basis for e in ed] == [("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4")]
    assert [len(e.delta.facets) for e in ed] == [6, 4, 2]
    assert verify_ced(nested_complex(BL), ed.ears)


def test_u23_gmax_ears():
    BL = by_key("U23:max").built
    ed = convex_ear_decomposition(BL)
    assert len(ed) == 2
    assert ed.ears[0].delta.facet_set() == {frozenset(["1"]), frozenset(["2"])}
    assert ed.ears[1].delta.facet_set() == {frozenset(["3"])}


def test_boolean_single_ear():
    B3 = boolean_lattice(3)
    for BL in [maximal_building_set(B3), by_key("B3[1,2,3,12,23,123]").built]:
        ed = convex_ear_decomposition(BL)
        assert len(ed) == 1
        assert ed.ears[0].delta == nested_complex(BL)


def test_petersen_ears():
    BL = minimal_building_set(partition_lattice(4))
    N = nested_complex(BL)
    ed = convex_ear_decomposition(BL)
    assert len(ed) == 6
    union = set()
    for e in ed:
        union |= e.delta.facet_set()
    assert union == N.facet_set()
    assert verify_ced(N, ed.ears)


def test_dropping_a_facet_breaks_the_boundary():
    BL = minimal_building_set(partition_lattice(4))
    N = nested_complex(BL)
    ed = convex_ear_decomposition(BL)
    e = ed.ears[2]
    kept = e.shelling[:-1]
    delta = SimplicialComplex(kept, reduce=False)
    bad = ed.ears[:2] + [Ear(e.basis, e.sigma, delta, kept, delta.boundary())] + ed.ears[3:]
    rep = verify_ced(N, bad)
    assert not rep
    clauses = {c for c, _ in rep.failures}
    assert "c" in clauses and "a" in clauses


def test_nonsphere_first_ear_is_rejected():
    BL = by_key("U34:max").built
    N = nested_complex(BL)
    ed = convex_ear_decomposition(BL)
    swapped = [ed.ears[1], ed.ears[0], ed.ears[2]]
    assert not verify_ced(N, swapped)


def test_shelling_examples():
    tri = simplex([1, 2, 3]).boundary()
    for order in [tri.facets, tri.facets[::-1]]:
        assert shelling_check(tri, order)
    bowtie = SimplicialComplex([[1, 2, 3], [3, 4, 5]])
    assert not shelling_check(bowtie, bowtie.facets)
    assert shelling_failure([[1, 2, 3], [3, 4, 5]]) == 1
    square = [[1, 2], [3, 4], [2, 3], [4, 1]]
    assert shelling_failure(square) == 1
    assert shelling_failure([[1, 2], [2, 3], [3, 4], [4, 1]]) is None
    assert shelling_h_vector([[1, 2], [2, 3], [3, 4], [4, 1]]) == (1, 2, 1)


def test_word_of_a_chain_reads_bottom_to_top():
    BL = by_key("U34:max").built
    L = BL.lattice
    om = atom_order_map(L, L.atoms())
    lam = edge_labels(L, om)
    for c in L.maximal_chains():
        word = tuple(lam[(a, b)] for a, b in zip(c, c[1:]))
        assert nested_word(BL, om, c[1:-1]) == word


def test_word_of_the_first_facet():
    # b_3 < b_3 v b_2 < top for the basis 123 gives the word 3 2 1
    BL = by_key("U34:max").built
    L = BL.lattice
    om = atom_order_map(L, L.atoms())
    assert nested_word(BL, om, [L.index("3"), L.index("23")]) == (3, 2, 1)


@pytest.mark.parametrize("key", ["Pi4:min", "Pi5:min", "U35:min", "aug-U23", "K4:max"])
def test_words_use_the_labels(key):
    BL = by_key(key).built
    L = BL.lattice
    om = atom_order_map(L, L.atoms())
    w = omega_table(L, om)
    for S in maximal_nested_sets(BL):
        word = nested_word(BL, om, S, w)
        assert len(word) == len(S) + 1
        assert frozenset(word) == label_set(BL, om, S, w)


@settings(max_examples=12, deadline=None)
@given(st.permutations(["1", "2", "3", "4", "5"]))
def test_any_atom_order_gives_a_ced(order):
    BL = by_key("U35:min").built
    ed = convex_ear_decomposition(BL, order)
    assert verify_ced(nested_complex(BL), ed.ears)
    assert len(ed) == 6


def test_facet_labels_are_nbc_bases(small_corpus):
    for inst in small_corpus:
        assert facet_basis_check(inst.built) == [], inst.key


def test_json_roundtrip():
    BL = by_key("U34:max").built
    ed = convex_ear_decomposition(BL)
    back = EarDecomposition.from_json(ed.to_json())
    assert back.to_json() == ed.to_json()
    assert verify_ced(nested_complex(BL), back.ears)


def test_corpus_ceds(small_corpus):
    for inst in small_corpus:
        BL = inst.built
        ed = convex_ear_decomposition(BL)
        assert verify_ced(nested_complex(BL), ed.ears), inst.key
