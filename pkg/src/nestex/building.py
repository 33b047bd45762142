"""Building sets, G-factors, restriction, contraction and building ideals."""

from itertools import combinations

from .errors import MissingJoinIrreducible, NotABuildingSet, NotJoinIrreducible
from .poset import iter_bits, bits, mask_of
from .matroid import free_coextension, lattice_of_flats


def _interval_size_pairs(L, mask):
    # number of elements and of comparable pairs (x <= y) inside an interval
    pairs = 0
    for y in iter_bits(mask):
        pairs += (L.down[y] & mask).bit_count()
    return mask.bit_count(), pairs


def join_map_is_iso(L, parts, F):
    """Is the join map prod [0, p] -> [0, F] an order isomorphism?"""
    target = L.down[F]
    images = {L.bottom}
    n_pairs = 1
    for p in parts:
        below = bits(L.down[p])
        new = set()
        J = L.join_table
        for x in images:
            Jx = J[x]
            for y in below:
                new.add(Jx[y])
        if len(new) != len(images) * len(below):
            return False
        images = new
        n_pairs *= _interval_size_pairs(L, L.down[p])[1]
    if len(images) != target.bit_count():
        return False
    # a bijective order-preserving map is an iso iff it has as many comparable pairs
    return n_pairs == _interval_size_pairs(L, target)[1]


class BuiltLattice:
    """A lattice with a building set ``G`` (sorted element ids).

    ``embedding`` (optional) maps element ids to ids of a parent lattice."""

    def __init__(self, lattice, gset, validate=True, embedding=None, name=None):
        self.lattice = lattice
        L = lattice
        ids = sorted({L.index(g) for g in gset})
        self.G = ids
        self.gmask = mask_of(ids)
        self.embedding = embedding
        self.name = name
        self.validated = False
        self._factors = {}
        if validate:
            validate_building_set(self)

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<BuiltLattice{nm}: {self.lattice.size} elements, |G|={len(self.G)}>"

    @property
    def L(self):
        return self.lattice

    def in_G(self, x):
        return (self.gmask >> x) & 1 == 1

    def factors(self, F):
        """max G_{<=F}, as a sorted list of ids."""
        f = self._factors.get(F)
        if f is None:
            f = self.lattice.max_elements(self.gmask & self.lattice.down[F])
            self._factors[F] = f
        return f

    def max_G(self):
        return self.factors(self.lattice.top)

    def is_irreducible(self):
        return self.in_G(self.lattice.top)

    def rank(self):
        return self.lattice.rank()

    def label(self, x):
        return self.lattice.labels[x]

    def labels_of(self, xs):
        return [self.lattice.labels[x] for x in xs]

    def gset_labels(self):
        return self.labels_of(self.G)


def validate_building_set(BL_or_L, G=None):
    """Check the building set axioms; returns the validated BuiltLattice."""
    if G is not None:
        return BuiltLattice(BL_or_L, G, validate=True)
    BL = BL_or_L
    L = BL.lattice
    if BL.in_G(L.bottom):
        raise NotABuildingSet(L.labels[L.bottom])
    for j in L.join_irreducibles():
        if not BL.in_G(j):
            raise MissingJoinIrreducible(L.labels[j])
    for F in range(1, L.size):
        if BL.in_G(F):
            continue
        fac = BL.factors(F)
        if not join_map_is_iso(L, fac, F):
            raise NotABuildingSet(L.labels[F])
    BL.validated = True
    return BL


def is_building_set(L, G):
    try:
        BuiltLattice(L, G)
    except NotABuildingSet:
        return False
    return True


def is_product_irreducible(L, G):
    """True if [0, G] is not the product of two nontrivial lower intervals."""
    if G == L.bottom:
        return False
    inside = [x for x in iter_bits(L.down[G]) if x != G and x != L.bottom]
    seen = set()
    for a in inside:
        for b in inside:
            if b <= a or L.join(a, b) != G or L.meet(a, b) != L.bottom:
                continue
            if (a, b) in seen:
                continue
            seen.add((a, b))
            if join_map_is_iso(L, [a, b], G):
                return False
    return True


def minimal_building_set(L, name=None):
    G = [x for x in range(1, L.size) if is_product_irreducible(L, x)]
    return BuiltLattice(L, G, name=name)


def maximal_building_set(L, name=None):
    return BuiltLattice(L, list(range(1, L.size)), name=name)


def factors(BL, F):
    return BL.factors(BL.lattice.index(F))


def restrict(BL, F):
    """(L^F, G^F): the interval [0, F] with G restricted to it."""
    L = BL.lattice
    F = L.index(F)
    sub, emb = L.sub(L.down[F])
    G = [i for i, o in enumerate(emb) if BL.in_G(o)]
    out = BuiltLattice(sub, G, validate=False, embedding=emb)
    out.validated = BL.validated
    return out


def contract(BL, F):
    """(L_F, G_F): the interval [F, 1] with building set {F v G} minus F."""
    L = BL.lattice
    F = L.index(F)
    sub, emb = L.sub(L.up[F])
    pos = {o: i for i, o in enumerate(emb)}
    G = {pos[L.join(F, g)] for g in BL.G} - {pos[F]}
    out = BuiltLattice(sub, sorted(G), validate=False, embedding=emb)
    out.validated = BL.validated
    return out


class BuildingIdeal:
    def __init__(self, generator, members):
        self.generator = generator
        self.members = sorted(members)
        self.mask = mask_of(members)

    def __contains__(self, x):
        return (self.mask >> x) & 1 == 1

    def __repr__(self):
        return f"<BuildingIdeal ({self.generator}) with {len(self.members)} members>"


def building_ideal(BL, g):
    L = BL.lattice
    g = L.index(g)
    members = [F for F in iter_bits(L.up[g]) if g in BL.factors(F)]
    return BuildingIdeal(g, members)


def delete_ideal(BL, g):
    """(L minus (g), G minus g) for a join-irreducible g."""
    L = BL.lattice
    g = L.index(g)
    if not L.is_join_irreducible(g):
        raise NotJoinIrreducible(L.labels[g])
    ideal = building_ideal(BL, g)
    keep = ((1 << L.size) - 1) & ~ideal.mask
    sub, emb = L.sub(keep)
    G = [i for i, o in enumerate(emb) if BL.in_G(o) and o != g]
    out = BuiltLattice(sub, G, validate=False, embedding=emb)
    validate_building_set(out)
    return out


def augmented_built_lattice(M, name=None):
    """Augmented building set on the lattice of flats of the free coextension.

    Consists of the flats F u e for F a flat of M plus all atoms."""
    Mp, e = free_coextension(M)
    GL = lattice_of_flats(Mp)
    L = GL.lattice
    G = set(L.atoms())
    for x in range(L.size):
        if e in GL.flat_of[x]:
            F = GL.flat_of[x] - {e}
            if M.closure(F) == F:
                G.add(x)
    BL = BuiltLattice(L, sorted(G), name=name)
    BL.geometric = GL
    return BL


def all_building_sets(L):
    """Every building set of L, as sorted id lists (exhaustive filter)."""
    ji = set(L.join_irreducibles())
    free = [x for x in range(1, L.size) if x not in ji]
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            G = sorted(ji | set(extra))
            if is_building_set(L, G):
                out.append(G)
    out.sort(key=lambda G: (len(G), G))
    return out


def resolve_building_set(L, selector):
    """Building set from a selector: "min", "max" or a list of labels."""
    if selector == "min":
        return minimal_building_set(L)
    if selector == "max":
        return maximal_building_set(L)
    if isinstance(selector, str):
        selector = [s for s in selector.split(",") if s]
    return BuiltLattice(L, [L.index(x) for x in selector])
