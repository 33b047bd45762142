"""Vertex decomposition certificates for nested set complexes.

The certificate is built by following the shedding recursion on built
lattices (reduce to irreducible pieces, strip a cone when the heaviest
join-irreducible is the top, otherwise shed the heaviest join-irreducible).
Complex hashes are attached afterwards from the actual complexes, and
``verify_vd`` re-checks everything from scratch.
"""

from functools import lru_cache

from .building import restrict, contract, delete_ideal
from .complexes import SimplicialComplex
from .errors import NotAdmissible, SizeLimit
from .labeling import omega_table, is_admissible
from .nested import nested_complex, quotient


class VDNode:
    """Shedding tree node; ``vertex is None`` marks a simplex leaf."""

    __slots__ = ("vertex", "delete", "link", "hash")

    def __init__(self, vertex=None, delete=None, link=None, hash=None):
        self.vertex = vertex
        self.delete = delete
        self.link = link
        self.hash = hash

    @property
    def is_leaf(self):
        return self.vertex is None

    def to_json(self):
        if self.is_leaf:
            return {"simplex": True, "hash": self.hash}
        return {"vertex": self.vertex, "hash": self.hash,
                "delete": self.delete.to_json(), "link": self.link.to_json()}

    @classmethod
    def from_json(cls, data):
        if data == "simplex":
            return cls()
        if "simplex" in data:
            return cls(hash=data.get("hash"))
        return cls(data["vertex"], cls.from_json(data["delete"]),
                   cls.from_json(data["link"]), data.get("hash"))

    def count(self):
        if self.is_leaf:
            return 1
        return 1 + self.delete.count() + self.link.count()

    def leaves(self):
        if self.is_leaf:
            return 1
        return self.delete.leaves() + self.link.leaves()

    def spine(self):
        """Shedding vertices along the deletion branch from the root."""
        out = []
        n = self
        while not n.is_leaf:
            out.append(n.vertex)
            n = n.delete
        return out


LEAF = VDNode()


def tree_join(A, B):
    if A.is_leaf:
        return B
    return VDNode(A.vertex, tree_join(A.delete, B), tree_join(A.link, B))


def tree_relabel(T, mapping):
    if T.is_leaf:
        return T
    return VDNode(mapping[T.vertex], tree_relabel(T.delete, mapping),
                  tree_relabel(T.link, mapping))


class VDCertificate:
    def __init__(self, root, complex_hash=None):
        self.root = root
        self.complex_hash = complex_hash

    def to_json(self):
        return self.root.to_json()

    @classmethod
    def from_json(cls, data):
        root = VDNode.from_json(data)
        return cls(root, root.hash)

    def __repr__(self):
        return f"<VDCertificate with {self.root.count()} nodes>"


def contraction_map(BL, F, omega):
    """omega'(J) = min omega(I) over join-irreducibles I of L with F v I = J."""
    L = BL.lattice
    w = omega_table(L, omega)
    best = {}
    for I in L.join_irreducibles():
        J = L.join(F, I)
        if J == F:
            continue
        lab = L.labels[J]
        if lab not in best or w[I] < best[lab]:
            best[lab] = w[I]
    return best


def deletion_map(BL, D, g, omega):
    """omega on L minus (g): old values kept, new join-irreducibles get
    omega(g) + 1, omega(g) + 2, ... in id order."""
    L = BL.lattice
    old = set(L.labels[x] for x in L.join_irreducibles())
    top = omega[L.labels[g]]
    out = {}
    k = 0
    for x in D.lattice.join_irreducibles():
        lab = D.lattice.labels[x]
        if lab in old:
            out[lab] = omega[lab]
        else:
            k += 1
            out[lab] = top + k
    return out


def _check_injective(L, omega):
    w = [v for v in omega_table(L, omega) if v is not None]
    if len(set(w)) != len(w):
        raise NotAdmissible("admissible map must be injective")


def shedding_tree(BL, omega, check_admissible=False):
    """Shedding choices (labels of BL's vertices) without hashes."""
    L = BL.lattice
    L.rank_function()  # fails early on ungraded input
    _check_injective(L, omega)
    if check_admissible and not is_admissible(L, omega):
        raise NotAdmissible("map is not admissible on a recursion step")
    mx = BL.max_G()
    if len(mx) > 1 or mx[0] != L.top:
        T = LEAF
        for g in mx:
            T = tree_join(T, shedding_tree(restrict(BL, g), omega, check_admissible))
        return T
    if L.rank() <= 1:
        return LEAF
    w = omega_table(L, omega)
    gmax = max(L.join_irreducibles(), key=lambda x: w[x])
    if gmax == L.top:
        # N(L, G) equals cN of the restriction below the unique coatom
        F = L.lower_covers[L.top][0]
        R = restrict(BL, F)
        T = LEAF
        for g in R.max_G():
            T = tree_join(T, shedding_tree(restrict(R, g), omega, check_admissible))
        return T
    C = contract(BL, gmax)
    wc = contraction_map(BL, gmax, omega)
    tc = shedding_tree(C, wc, check_admissible)
    qmap = {C.lattice.labels[v]: L.labels[quotient(BL, gmax, C.embedding[v])]
            for v in C.G if v != C.lattice.top}
    link_tree = tree_join(tree_relabel(tc, qmap),
                          shedding_tree(restrict(BL, gmax), omega, check_admissible))
    D = delete_ideal(BL, gmax)
    del_tree = shedding_tree(D, deletion_map(BL, D, gmax, omega), check_admissible)
    return VDNode(L.labels[gmax], del_tree, link_tree)


def _attach(T, C):
    h = C.canonical_hash()
    if T.is_leaf:
        return VDNode(hash=h)
    v = T.vertex
    return VDNode(v, _attach(T.delete, C.delete_vertex(v)), _attach(T.link, C.link([v])), h)


def vertex_decomposition(BL, omega=None, check_admissible=False):
    from .labeling import default_admissible_map
    if omega is None:
        omega = default_admissible_map(BL.lattice)
    T = shedding_tree(BL, omega, check_admissible)
    C = nested_complex(BL)
    root = _attach(T, C)
    return VDCertificate(root, root.hash)


class VDReport:
    def __init__(self, ok, reason="", path=()):
        self.ok = ok
        self.reason = reason
        self.path = tuple(path)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "<VDReport ok>"
        return f"<VDReport failed at {'/'.join(self.path) or 'root'}: {self.reason}>"


def verify_vd(C, cert):
    """Independent check of a shedding certificate against complex C."""
    root = cert.root if isinstance(cert, VDCertificate) else cert
    return _verify(C, root, [])


def _verify(C, node, path):
    if node.hash is not None and node.hash != C.canonical_hash():
        return VDReport(False, "complex hash mismatch", path)
    if C.is_void():
        return VDReport(False, "void complex", path)
    if not C.is_pure():
        return VDReport(False, "complex is not pure", path)
    if node.is_leaf:
        if not C.is_simplex():
            return VDReport(False, "leaf is not a simplex", path)
        return VDReport(True)
    v = node.vertex
    if v not in C.vertices:
        return VDReport(False, f"{v} is not a vertex", path)
    D = C.delete_vertex(v)
    K = C.link([v])
    facets = C.facet_set()
    if not all(f in facets for f in D.facets):
        return VDReport(False, f"{v} is not a shedding vertex", path)
    if D.dim != C.dim:
        return VDReport(False, "deletion dimension drops", path)
    if K.dim != C.dim - 1:
        return VDReport(False, "link dimension is wrong", path)
    r = _verify(D, node.delete, path + [f"-{v}"])
    if not r:
        return r
    return _verify(K, node.link, path + [f"lk{v}"])


MAX_BRUTE_VERTICES = 14


def brute_force_vd(C):
    """Exhaustive (memoized) vertex decomposability test for small complexes."""
    if len(C.vertices) > MAX_BRUTE_VERTICES:
        raise SizeLimit(f"{len(C.vertices)} vertices exceed {MAX_BRUTE_VERTICES}")
    return _bf(frozenset(C.facets))


@lru_cache(maxsize=None)
def _bf(facets):
    if len(facets) == 1:
        return True
    if not facets:
        return False
    if len({len(f) for f in facets}) != 1:
        return False
    verts = sorted(set().union(*facets), key=str)
    for v in verts:
        D = SimplicialComplex([f - {v} for f in facets])
        if not all(f in facets for f in D.facets):
            continue
        K = frozenset(f - {v} for f in facets if v in f)
        if _bf(frozenset(D.facets)) and _bf(K):
            return True
    return False


def shedding_vertices(C):
    """Vertices v whose deletion keeps only facets of C (no recursion)."""
    facets = C.facet_set()
    out = []
    for v in C.vertices:
        D = C.delete_vertex(v)
        if D.facets and all(f in facets for f in D.facets):
            out.append(v)
    return out
