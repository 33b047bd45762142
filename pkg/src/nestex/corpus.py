"""Named collections of built lattices used by the property suites and the
batch verifier."""

from .building import (BuiltLattice, all_building_sets, augmented_built_lattice,
                       minimal_building_set, maximal_building_set)
from .errors import UnknownCorpus
from .matroid import lattice_of_flats, uniform, graphic, complete_graph_edges
from .poset import boolean_lattice, partition_lattice


class Instance:
    """One corpus entry: a built lattice plus how it was made."""

    def __init__(self, key, built, geometric=True, family=""):
        self.key = key
        self.built = built
        self.geometric = geometric
        self.family = family
        built.name = key

    def __repr__(self):
        return f"<Instance {self.key}>"


def _gkey(BL):
    return "[" + ",".join(BL.gset_labels()) + "]"


def boolean_instances(n):
    L = boolean_lattice(n)
    out = []
    for G in all_building_sets(L):
        BL = BuiltLattice(L, G)
        out.append(Instance(f"B{n}{_gkey(BL)}", BL, family="boolean"))
    return out


def _min_max(prefix, L, family):
    return [Instance(f"{prefix}:min", minimal_building_set(L), family=family),
            Instance(f"{prefix}:max", maximal_building_set(L), family=family)]


def partition_instances(n):
    return _min_max(f"Pi{n}", partition_lattice(n), "partition")


def uniform_instances(r, n):
    return _min_max(f"U{r}{n}", lattice_of_flats(uniform(r, n)).lattice, "uniform")


def k4_instances():
    M = graphic(complete_graph_edges(4))
    return _min_max("K4", lattice_of_flats(M).lattice, "graphic")


def augmented_instance(r, n):
    return Instance(f"aug-U{r}{n}", augmented_built_lattice(uniform(r, n)), family="augmented")


def small():
    out = []
    for n in range(1, 5):
        out += boolean_instances(n)
    for n in range(3, 6):
        out += partition_instances(n)
    for r, n in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        out += uniform_instances(r, n)
    out += k4_instances()
    out.append(augmented_instance(1, 2))
    out.append(augmented_instance(2, 3))
    return out


def tiny():
    """A quick subset for smoke runs."""
    keep = {"Pi4:min", "B3[1,2,3,12,23,123]", "U34:max", "aug-U12"}
    return [i for i in small() if i.key in keep]


CORPORA = {"small": small, "tiny": tiny}


def corpus(name="small"):
    if name not in CORPORA:
        raise UnknownCorpus(f"unknown corpus {name!r}; known: {', '.join(sorted(CORPORA))}")
    return CORPORA[name]()


def find(key, name="small"):
    for inst in corpus(name):
        if inst.key == key:
            return inst
    raise KeyError(key)
