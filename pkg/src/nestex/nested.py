"""Nested sets, nested set complexes, local intervals and composition.

Nested sets are handled as sets of element ids of the built lattice; the
complexes produced here carry element labels as vertices so they can be
compared across restrictions, contractions and deletions.
"""

from .building import restrict, contract
from .complexes import SimplicialComplex, join_all
from .errors import NotInContraction, NotNestedInput
from .poset import mask_of


def _extend(BL, antichains, v):
    """Antichain list of S + v, or None if S + v is not nested."""
    L = BL.lattice
    comp = L.down[v] | L.up[v]
    new = []
    for A, j in antichains:
        if A & comp:
            continue
        jj = L.join_table[j][v]
        if A and BL.in_G(jj):
            return None
        new.append((A | (1 << v), jj))
    return antichains + new


def is_nested(BL, S):
    S = [BL.lattice.index(x) for x in S]
    if any(not BL.in_G(x) for x in S):
        return False
    ac = [(0, BL.lattice.bottom)]
    for v in sorted(set(S)):
        ac = _extend(BL, ac, v)
        if ac is None:
            return False
    return True


def nested_faces(BL, vertices):
    """All nested subsets of ``vertices`` (ids), as frozensets of ids."""
    L = BL.lattice
    try:
        r = L.rank_function()
        key = lambda x: (r[x], x)
    except Exception:
        key = lambda x: x
    V = sorted(vertices, key=key)
    out = []

    def go(start, S, ac):
        out.append(frozenset(S))
        for k in range(start, len(V)):
            v = V[k]
            nac = _extend(BL, ac, v)
            if nac is not None:
                S.append(v)
                go(k + 1, S, nac)
                S.pop()
    go(0, [], [(0, L.bottom)])
    return out


def _facets_from_faces(faces):
    fs = set(faces)
    covered = set()
    for f in fs:
        for v in f:
            covered.add(f - {v})
    return [f for f in fs if f not in covered]


def _complex(BL, vertices):
    faces = nested_faces(BL, vertices)
    lab = BL.lattice.labels
    facets = [frozenset(lab[x] for x in f) for f in _facets_from_faces(faces)]
    C = SimplicialComplex(facets, vertices=[lab[x] for x in vertices], reduce=False)
    C._faces = {frozenset(lab[x] for x in f) for f in faces}
    return C


def nested_vertices(BL):
    mx = set(BL.max_G())
    return [g for g in BL.G if g not in mx]


def nested_complex(BL):
    """N(L, G): nested sets avoiding the maximal elements of G."""
    return _complex(BL, nested_vertices(BL))


def cone_nested_complex(BL):
    """cN(L, G): nested sets using all of G."""
    return _complex(BL, BL.G)


def maximal_nested_sets(BL):
    """Facets of N(L, G) as sorted id tuples, in a deterministic order."""
    faces = nested_faces(BL, nested_vertices(BL))
    fs = [tuple(sorted(f)) for f in _facets_from_faces(faces)]
    fs.sort()
    return fs


def ids_of(BL, S):
    return frozenset(BL.lattice.index(x) for x in S)


def expected_dimension(BL):
    """rank - |max G| - 1, which is rank - 2 for irreducible BL."""
    return BL.rank() - len(BL.max_G()) - 1


def purity_check(BL, complex_=None):
    """(is pure of the expected dimension, dimension)."""
    C = nested_complex(BL) if complex_ is None else complex_
    d = C.dim
    return C.is_pure() and d == expected_dimension(BL), d


# tree structure

def roots(BL):
    """Roots of the forest of a nested set: the maximal elements of G."""
    return list(BL.max_G())


def parent(BL, S, G):
    """min of (S u max G)_{>G}; None for a root."""
    L = BL.lattice
    cands = [x for x in set(S) | set(roots(BL)) if L.less(G, x)]
    if not cands:
        return None
    mins = L.min_elements(mask_of(cands))
    if len(mins) != 1:
        raise NotNestedInput("nested set is not a forest at " + L.labels[G])
    return mins[0]


def below_join(BL, S, G):
    """J^G = join of the elements of S strictly below G."""
    L = BL.lattice
    return L.join_of_set([x for x in S if L.less(x, G)])


class LocalInterval:
    """Local interval of S at a node G: ([J^G, G], contracted building set).

    ``built.embedding`` maps its ids into the parent lattice."""

    def __init__(self, base, node, J, built):
        self.base = base
        self.node = node
        self.J = J
        self.built = built

    def rank(self):
        return self.built.rank()

    def __repr__(self):
        L = self.built.lattice
        return f"<LocalInterval [{L.labels[0]}, {L.labels[-1]}]>"


def local_interval(BL, S, G):
    S = ids_of(BL, S)
    J = below_join(BL, S, G)
    R = restrict(BL, G)
    pos = {o: i for i, o in enumerate(R.embedding)}
    C = contract(R, pos[J])
    C.embedding = [R.embedding[i] for i in C.embedding]
    return LocalInterval(S, G, J, C)


def local_intervals(BL, S):
    """One local interval per node of S u {1} (in id order, top last)."""
    S = ids_of(BL, S)
    nodes = sorted(S | {BL.lattice.top})
    return [local_interval(BL, S, G) for G in nodes]


def quotient(BL, F, G):
    """G/F: the unique G-factor of G which is not a G-factor of F."""
    L = BL.lattice
    F, G = L.index(F), L.index(G)
    if not L.less(F, G):
        raise NotInContraction(f"{L.labels[G]} is not above {L.labels[F]}")
    new = [x for x in BL.factors(G) if x not in set(BL.factors(F))]
    if len(new) != 1:
        raise NotInContraction(f"{L.labels[G]} has {len(new)} new factors over {L.labels[F]}")
    return new[0]


def compose(BL, S, parts):
    """S o (S_G)_G where ``parts`` maps nodes G of S u {1} to sets of
    elements of [J^G, G] (parent ids); missing nodes count as empty."""
    L = BL.lattice
    S = set(ids_of(BL, S))
    if not is_nested(BL, S):
        raise NotNestedInput("base set is not nested")
    out = set(S)
    for G, SG in parts.items():
        G = L.index(G)
        if G != L.top and G not in S:
            raise NotNestedInput(f"{L.labels[G]} is not a node")
        J = below_join(BL, S, G)
        for Gp in SG:
            Gp = L.index(Gp)
            if not (L.less(J, Gp) and L.leq(Gp, G)):
                raise NotNestedInput(f"{L.labels[Gp]} is outside its local interval")
            out.add(quotient(BL, J, Gp))
    return frozenset(out)


def decompose(BL, T, S):
    """Inverse of compose: find (S_G) with S o (S_G) = T, for T containing S."""
    L = BL.lattice
    T, S = ids_of(BL, T), ids_of(BL, S)
    if not S <= T:
        raise NotNestedInput("T must contain S")
    nodes = sorted(S | {L.top})
    parts = {G: set() for G in nodes}
    for H in sorted(T - S):
        above = [x for x in nodes if L.less(H, x)]
        mins = L.min_elements(mask_of(above))
        if len(mins) != 1:
            raise NotNestedInput("not a tree")
        G = mins[0]
        J = below_join(BL, S, G)
        parts[G].add(L.join(J, H))
    return {G: frozenset(v) for G, v in parts.items()}


def link_decomposition(BL, S):
    return [li.built for li in local_intervals(BL, S)]


def link_via_local_intervals(BL, S):
    """Join of the N of the local intervals, pushed into N(L, G) by quotients.

    Returns (complex on labels of L, vertex map is injective)."""
    L = BL.lattice
    S = ids_of(BL, S)
    pieces = []
    images = {}
    for li in local_intervals(BL, S):
        B = li.built
        N = nested_complex(B)
        emb = B.embedding
        tagged = N.relabel(lambda lab, li=li, B=B: (li.node, emb[B.lattice.index(lab)]))
        for v in tagged.vertices:
            images[v] = quotient(BL, li.J, v[1])
        pieces.append(tagged)
    joined = join_all(pieces)
    injective = len(set(images.values())) == len(images)
    return joined.relabel(lambda v: L.labels[images[v]]), injective


def chain_composition(BL, chain):
    """{F_1} o {F_2} o ... o {F_{n-1}} for a maximal chain 0 < F_1 < ... < 1."""
    L = BL.lattice
    S = frozenset()
    for F in chain[1:-1]:
        F = L.index(F)
        S = compose(BL, S, {L.top: {F}})
    return S
