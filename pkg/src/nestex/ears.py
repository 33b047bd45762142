"""Convex ear decompositions of nested set complexes of geometric lattices,
plus shelling checks.

Ears are indexed by the nbc-bases B_1 < ... < B_m (lexicographic for the
atom order).  Sigma_i is the nested set complex of the sub-join-lattice
generated by B_i, and Delta_i keeps the facets S of Sigma_i whose label set
{lambda(G) : G in S u max G} is exactly B_i.  Each Delta_i is shelled by
sorting the words w(S) in decreasing lexicographic order.
"""

from .building import BuiltLattice
from .complexes import SimplicialComplex
from .errors import NotMaximal
from .labeling import node_labels, omega_table, atom_order_map
from .matroid import nbc_bases, join_closure_mask
from .nested import nested_complex, ids_of, maximal_nested_sets
from .poset import mask_of


def label_set(BL, omega, S, table=None):
    return frozenset(node_labels(BL, omega, S, table).values())


def nested_word(BL, omega, S, table=None):
    """w(S): repeatedly read off the leaf with the largest label.

    Labels are fixed by S (all local intervals must have rank 1)."""
    L = BL.lattice
    S = ids_of(BL, S)
    lam = node_labels(BL, omega, S, table)
    remaining = set(lam)
    word = []
    while remaining:
        leaves = L.min_elements(mask_of(remaining))
        g = max(leaves, key=lambda x: lam[x])
        word.append(lam[g])
        remaining.discard(g)
    return tuple(word)


class Ear:
    def __init__(self, basis, sigma, delta, shelling, boundary):
        self.basis = basis          # atom labels, increasing for the order
        self.sigma = sigma          # SimplicialComplex
        self.delta = delta          # SimplicialComplex
        self.shelling = shelling    # facets of delta in shelling order
        self.boundary = boundary    # SimplicialComplex (ridge-count boundary)

    def __repr__(self):
        return f"<Ear {''.join(self.basis)}: {len(self.delta.facets)}/{len(self.sigma.facets)} facets>"


class EarDecomposition:
    def __init__(self, order, ears):
        self.order = order
        self.ears = ears

    def __len__(self):
        return len(self.ears)

    def __iter__(self):
        return iter(self.ears)

    def to_json(self):
        def fl(fs):
            return [sorted(f) for f in fs]
        return {"order": list(self.order),
                "ears": [{"basis": list(e.basis),
                          "sigma_facets": sorted(fl(e.sigma.facets)),
                          "delta_facets": sorted(fl(e.delta.facets)),
                          "shelling": fl(e.shelling)} for e in self.ears]}

    @classmethod
    def from_json(cls, data):
        ears = []
        for e in data["ears"]:
            delta = SimplicialComplex(e["delta_facets"])
            ears.append(Ear(tuple(e["basis"]), SimplicialComplex(e["sigma_facets"]),
                            delta, [frozenset(f) for f in e["shelling"]], delta.boundary()))
        return cls(data["order"], ears)


def restricted_built_lattice(BL, B):
    """(L_|B, G_|B) for a set of atoms B (ids)."""
    L = BL.lattice
    sub, emb = L.sub(join_closure_mask(L, B))
    G = [i for i, o in enumerate(emb) if BL.in_G(o)]
    return BuiltLattice(sub, G, embedding=emb)


def convex_ear_decomposition(BL, order=None):
    L = BL.lattice
    if order is None:
        order = L.atoms()
    order = [L.index(a) for a in order]
    omega = atom_order_map(L, order)
    w = omega_table(L, omega)
    letter = {omega[L.labels[a]]: a for a in order}
    ears = []
    for B in nbc_bases(L, order):
        R = restricted_built_lattice(BL, B)
        sigma = nested_complex(R)
        target = frozenset(omega[L.labels[b]] for b in B)
        keep = []
        for f in sigma.facets:
            S = ids_of(BL, f)
            if label_set(BL, omega, S, w) == target:
                keep.append((nested_word(BL, omega, S, w), f))
        keep.sort(key=lambda t: t[0], reverse=True)
        delta = SimplicialComplex([f for _, f in keep], reduce=False)
        ears.append(Ear(tuple(L.labels[b] for b in B), sigma, delta,
                        [f for _, f in keep], delta.boundary()))
    ed = EarDecomposition([L.labels[a] for a in order], ears)
    ed.letters = {k: L.labels[a] for k, a in letter.items()}
    return ed


def shelling_failure(facets):
    """Index of the first facet breaking the shelling condition, or None."""
    facets = [frozenset(f) for f in facets]
    if len({len(f) for f in facets}) > 1:
        return 0
    for k in range(1, len(facets)):
        Fk = facets[k]
        inter = {Fk & facets[j] for j in range(k)}
        maxi = [s for s in inter if not any(s < t for t in inter)]
        if any(len(s) != len(Fk) - 1 for s in maxi):
            return k
    return None


def shelling_check(C, order=None):
    facets = C.facets if order is None else order
    if isinstance(C, SimplicialComplex) and order is not None:
        if set(map(frozenset, order)) != C.facet_set():
            return False
    return shelling_failure(facets) is None


def shelling_h_vector(facets):
    """h-vector from restriction sizes of a shelling order."""
    facets = [frozenset(f) for f in facets]
    if not facets:
        return ()
    d = len(facets[0])
    h = [0] * (d + 1)
    for k, F in enumerate(facets):
        earlier = facets[:k]
        R = {v for v in F if any(F - {v} <= E for E in earlier)}
        h[len(R)] += 1
    return tuple(h)


class CEDReport:
    def __init__(self):
        self.failures = []
        self.checks = {}

    def fail(self, clause, msg):
        self.failures.append((clause, msg))

    def __bool__(self):
        return not self.failures

    def __repr__(self):
        if not self.failures:
            return "<CEDReport ok>"
        return f"<CEDReport failed: {self.failures[:3]}>"


def _faces(facets):
    return SimplicialComplex(facets).faces() if facets else set()


def sigma_boundary(ear):
    """Faces of Delta_i lying in a facet of Sigma_i outside Delta_i."""
    outside = [f for f in ear.sigma.facets if f not in ear.delta.facet_set()]
    fo = _faces(outside)
    return {s for s in ear.delta.faces() if s in fo}


def verify_ced(C, ears):
    """Check every clause of a convex ear decomposition of C.

    Spheres and balls are checked by proxy: pure, ridges in exactly two
    facets (sphere) or at most two (ball), Euler characteristic, and for
    balls an explicit shelling order."""
    rep = CEDReport()
    ears = list(ears)
    if not ears:
        rep.fail("a", "no ears")
        return rep
    union = set()
    for e in ears:
        union |= set(e.delta.facets)
    if union != set(C.facets):
        rep.fail("a", "union of ears differs from the complex")
    d = C.dim
    first = ears[0]
    if first.delta.facet_set() != first.sigma.facet_set():
        rep.fail("b", "Delta_1 != Sigma_1")
    D1 = first.delta
    if not D1.is_pure() or D1.dim != d:
        rep.fail("b", "Delta_1 not pure of full dimension")
    if any(c != 2 for c in D1.ridges().values()):
        rep.fail("b", "Delta_1 has a ridge not in exactly two facets")
    if D1.reduced_euler_characteristic() != (-1) ** d:
        rep.fail("b", "Delta_1 Euler characteristic is not that of a sphere")
    seen = set(D1.faces())
    for i, e in enumerate(ears[1:], start=2):
        D = e.delta
        if not D.facets:
            rep.fail("c", f"ear {i} is empty")
            continue
        if not (D.facet_set() < e.sigma.facet_set()):
            rep.fail("c", f"ear {i} is not a proper subcomplex of Sigma_{i}")
        if not D.is_pure() or D.dim != d:
            rep.fail("c", f"ear {i} not pure of full dimension")
        if set(map(frozenset, e.shelling)) != D.facet_set():
            rep.fail("c", f"ear {i}: shelling order does not list its facets")
        k = shelling_failure(e.shelling)
        if k is not None:
            rep.fail("c", f"ear {i}: shelling fails at position {k}")
        elif shelling_h_vector(e.shelling) != D.h_vector():
            rep.fail("c", f"ear {i}: shelling h-vector mismatch")
        if any(c > 2 for c in D.ridges().values()):
            rep.fail("c", f"ear {i} has a ridge in more than two facets")
        if D.reduced_euler_characteristic() != 0:
            rep.fail("c", f"ear {i} Euler characteristic is not that of a ball")
        bd = D.boundary().faces() if D.boundary().facets else set()
        glued = D.faces() & seen
        if bd != glued:
            rep.fail("c", f"ear {i}: boundary differs from intersection with earlier ears")
        if bd != sigma_boundary(e):
            rep.fail("d", f"ear {i}: the two boundary descriptions differ")
        seen |= D.faces()
    return rep


def facet_basis_check(BL, order=None):
    """Every facet's label set is an nbc-basis; returns offending facets."""
    L = BL.lattice
    if order is None:
        order = L.atoms()
    order = [L.index(a) for a in order]
    omega = atom_order_map(L, order)
    w = omega_table(L, omega)
    nbc = {frozenset(omega[L.labels[b]] for b in B) for B in nbc_bases(L, order)}
    bad = []
    for S in maximal_nested_sets(BL):
        try:
            if label_set(BL, omega, S, w) not in nbc:
                bad.append(S)
        except NotMaximal:
            bad.append(S)
    return bad
