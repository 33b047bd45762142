"""Matroids given by explicit basis lists, and their lattices of flats."""

from itertools import combinations

from .errors import ExchangeFailure, RankZeroTruncation
from .poset import build_lattice, iter_bits, bits, set_label


def _lab(x):
    return str(x)


class Matroid:
    """Matroid on an ordered ground set of string labels.

    Bases are stored as bitmasks over ground positions."""

    def __init__(self, ground, bases, check=True):
        self.ground = [_lab(g) for g in ground]
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("ground labels must be distinct")
        self._pos = {g: i for i, g in enumerate(self.ground)}
        bm = set()
        for B in bases:
            if isinstance(B, int):
                bm.add(B)
            else:
                m = 0
                for x in B:
                    m |= 1 << self._pos[_lab(x)]
                bm.add(m)
        if not bm:
            raise ValueError("a matroid needs at least one basis")
        self.bases = sorted(bm)
        ranks = {b.bit_count() for b in self.bases}
        if len(ranks) != 1:
            raise ValueError("bases of different sizes")
        self.r = ranks.pop()
        self._base_set = frozenset(self.bases)
        if check:
            self.check_exchange()

    @property
    def n(self):
        return len(self.ground)

    def __repr__(self):
        return f"<Matroid rank {self.r} on {self.n} elements, {len(self.bases)} bases>"

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return set(self.ground) == set(other.ground) and \
            self.basis_sets() == other.basis_sets()

    def __hash__(self):
        return hash(frozenset(self.basis_sets()))

    def mask(self, X):
        m = 0
        for x in X:
            m |= 1 << self._pos[_lab(x)]
        return m

    def labels_of(self, mask):
        return frozenset(self.ground[i] for i in iter_bits(mask))

    def basis_sets(self):
        return {self.labels_of(b) for b in self.bases}

    def check_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in iter_bits(b1 & ~b2):
                    base = b1 & ~(1 << x)
                    if not any((base | (1 << y)) in self._base_set
                               for y in iter_bits(b2 & ~b1)):
                        raise ExchangeFailure(sorted(self.labels_of(b1)),
                                              sorted(self.labels_of(b2)), self.ground[x])

    def rank_of(self, X):
        m = X if isinstance(X, int) else self.mask(X)
        return max((b & m).bit_count() for b in self.bases)

    def is_independent(self, X):
        m = X if isinstance(X, int) else self.mask(X)
        return any(b & m == m for b in self.bases)

    def closure_mask(self, m):
        r = self.rank_of(m)
        out = m
        for i in range(self.n):
            if not (m >> i) & 1 and self.rank_of(m | (1 << i)) == r:
                out |= 1 << i
        return out

    def closure(self, X):
        return self.labels_of(self.closure_mask(self.mask(X)))

    def flats(self):
        """All flats as bitmasks, sorted by (rank, mask)."""
        start = self.closure_mask(0)
        seen = {start}
        todo = [start]
        while todo:
            F = todo.pop()
            for i in range(self.n):
                if not (F >> i) & 1:
                    G = self.closure_mask(F | (1 << i))
                    if G not in seen:
                        seen.add(G)
                        todo.append(G)
        return sorted(seen, key=lambda m: (self.rank_of(m), m))

    def independent_sets(self):
        out = set()
        for b in self.bases:
            s = b
            while True:
                out.add(s)
                if s == 0:
                    break
                s = (s - 1) & b
        return sorted(out, key=lambda m: (m.bit_count(), m))

    def circuits(self):
        """Minimal dependent sets, as frozensets of labels."""
        ind = set(self.independent_sets())
        out = []
        for k in range(1, self.r + 2):
            for c in combinations(range(self.n), k):
                m = 0
                for i in c:
                    m |= 1 << i
                if m in ind:
                    continue
                if all((m & ~(1 << i)) in ind for i in c):
                    out.append(m)
        return [self.labels_of(m) for m in out]

    def _order_key(self, order):
        if order is None:
            order = self.ground
        order = [_lab(x) for x in order]
        return {x: k for k, x in enumerate(order)}

    def broken_circuits(self, order=None):
        rk = self._order_key(order)
        return [frozenset(C - {min(C, key=rk.__getitem__)}) for C in self.circuits()]

    def nbc_bases(self, order=None):
        """nbc-bases in lexicographic order with respect to ``order``."""
        rk = self._order_key(order)
        bc = [self.mask(C) for C in self.broken_circuits(order)]
        good = [b for b in self.bases if not any(c & b == c for c in bc)]
        words = [sorted(self.labels_of(b), key=rk.__getitem__) for b in good]
        words.sort(key=lambda w: [rk[x] for x in w])
        return [tuple(w) for w in words]

    def relabel(self, mapping):
        new = [mapping.get(g, g) for g in self.ground]
        return Matroid(new, [[new[i] for i in iter_bits(b)] for b in self.bases], check=False)

    def restriction(self, X):
        """M|X: bases are the maximal independent subsets of X."""
        m = self.mask(X)
        r = self.rank_of(m)
        bs = {b & m for b in self.bases if (b & m).bit_count() == r}
        keep = bits(m)
        return Matroid([self.ground[i] for i in keep],
                       [[self.ground[i] for i in iter_bits(b)] for b in bs], check=False)

    def to_json(self):
        order = {g: i for i, g in enumerate(self.ground)}
        return {"ground": list(self.ground),
                "bases": [sorted(self.labels_of(b), key=order.__getitem__) for b in self.bases]}

    @classmethod
    def from_json(cls, data):
        return cls(data["ground"], data["bases"])


def from_bases(ground, bases):
    return Matroid(ground, bases)


def uniform(r, n):
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    ground = [str(i) for i in range(1, n + 1)]
    return Matroid(ground, [list(c) for c in combinations(ground, r)], check=False)


def boolean(n):
    return uniform(n, n)


def edge_label(u, v):
    a, b = str(u), str(v)
    if len(a) == 1 and len(b) == 1:
        return a + b
    return a + "," + b


def graphic(edges, vertices=None):
    """Cycle matroid of a graph; edge (u, v) gets label "uv"."""
    edges = [tuple(e) for e in edges]
    if vertices is None:
        vertices = sorted({x for e in edges for x in e}, key=str)
    vid = {v: i for i, v in enumerate(vertices)}
    labels = [edge_label(u, v) for u, v in edges]

    def forest(es):
        parent = list(range(len(vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for k in es:
            u, v = edges[k]
            a, b = find(vid[u]), find(vid[v])
            if a == b:
                return False
            parent[a] = b
        return True

    # rank = |V| - #components
    parent = {v: v for v in vertices}

    def f(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for u, v in edges:
        a, b = f(u), f(v)
        if a != b:
            parent[a] = b
    comps = len({f(v) for v in vertices})
    r = len(vertices) - comps
    bases = [[labels[k] for k in c] for c in combinations(range(len(edges)), r) if forest(c)]
    return Matroid(labels, bases, check=False)


def complete_graph_edges(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def dual(M):
    full = (1 << M.n) - 1
    return Matroid(M.ground, [full & ~b for b in M.bases], check=False)


def truncation(M):
    if M.r == 0:
        raise RankZeroTruncation("cannot truncate a rank 0 matroid")
    bs = set()
    for b in M.bases:
        for i in iter_bits(b):
            bs.add(b & ~(1 << i))
    return Matroid(M.ground, sorted(bs), check=False)


def direct_sum(M, N):
    """Direct sum; ground labels are renumbered 1..n+m if the two grounds clash."""
    if set(M.ground) & set(N.ground):
        g1 = [str(i) for i in range(1, M.n + 1)]
        g2 = [str(i) for i in range(M.n + 1, M.n + N.n + 1)]
    else:
        g1, g2 = M.ground, N.ground
    bases = []
    for b in M.bases:
        for c in N.bases:
            bases.append([g1[i] for i in iter_bits(b)] + [g2[i] for i in iter_bits(c)])
    return Matroid(g1 + g2, bases, check=False)


def free_coextension(M, new_label="e"):
    """(Tr(M* + U_{1,1}))*, with the new element named ``new_label``."""
    e = Matroid([new_label], [[new_label]], check=False)
    Mp = dual(truncation(direct_sum(dual(M), e)))
    return Mp, new_label


class GeometricLattice:
    """A lattice of flats together with its flat/closure correspondence.

    ``flat_of[x]`` is the frozenset of ground labels of element x.  When the
    instance comes from restricting another one, ``embedding[x]`` gives the
    id of x in the parent lattice."""

    def __init__(self, lattice, matroid, flat_of, embedding=None):
        self.lattice = lattice
        self.matroid = matroid
        self.flat_of = list(flat_of)
        self._by_flat = {f: i for i, f in enumerate(self.flat_of)}
        self.embedding = embedding

    def closure(self, X):
        F = self.matroid.closure(X)
        return self._by_flat[F]

    def atoms(self):
        return self.lattice.atoms()

    def __repr__(self):
        return f"<GeometricLattice with {self.lattice.size} flats>"


def lattice_of_flats(M):
    flats = M.flats()
    sets = [M.labels_of(f) for f in flats]
    order = {g: i for i, g in enumerate(M.ground)}

    def lab(F):
        items = sorted(F, key=order.__getitem__)
        if not items:
            return "∅"
        if all(len(s) == 1 for s in items):
            return "".join(items)
        return ",".join(items)
    L = build_lattice(sets, lambda a, b: a <= b, labels=lab)
    return GeometricLattice(L, M, list(L.objects))


def is_atomistic(L):
    atoms = L.atoms()
    for x in range(L.size):
        if L.join_of_set([a for a in atoms if L.leq(a, x)]) != x:
            return False
    return True


def is_semimodular(L):
    r = L.rank_function()
    for a in range(L.size):
        for b in range(a + 1, L.size):
            if r[a] + r[b] < r[L.join(a, b)] + r[L.meet(a, b)]:
                return False
    return True


def is_geometric(L):
    return L.is_graded() and is_atomistic(L) and is_semimodular(L)


class AtomMatroid:
    """The simple matroid on the atoms of a geometric lattice, with atom ids
    as ground elements.  Independence: rank(join A) = |A|."""

    def __init__(self, L):
        self.L = L
        self.atoms = L.atoms()
        self.r = L.rank()

    def is_independent(self, A):
        return self.L.rank(self.L.join_of_set(A)) == len(A)

    def bases(self):
        top = self.L.top
        return [c for c in combinations(self.atoms, self.r)
                if self.L.join_of_set(c) == top and self.is_independent(c)]

    def circuits(self):
        out = []
        for k in range(2, self.r + 2):
            for c in combinations(self.atoms, k):
                if not self.is_independent(c) and \
                        all(self.is_independent(c[:i] + c[i + 1:]) for i in range(k)):
                    out.append(frozenset(c))
        return out

    def broken_circuits(self, order):
        rk = {a: k for k, a in enumerate(order)}
        return [C - {min(C, key=rk.__getitem__)} for C in self.circuits()]

    def nbc_bases(self, order):
        """nbc-bases as tuples sorted along ``order``, in lexicographic order."""
        rk = {a: k for k, a in enumerate(order)}
        bc = self.broken_circuits(order)
        out = []
        for B in self.bases():
            s = frozenset(B)
            if any(c <= s for c in bc):
                continue
            out.append(tuple(sorted(B, key=rk.__getitem__)))
        out.sort(key=lambda w: [rk[a] for a in w])
        return out


def nbc_bases(L, order=None):
    """nbc-bases of a geometric lattice, over atom ids (default order: by id)."""
    if isinstance(L, GeometricLattice):
        L = L.lattice
    if order is None:
        order = L.atoms()
    return AtomMatroid(L).nbc_bases(order)


def join_closure_mask(L, S):
    """Bitmask of all joins of subsets of S."""
    elems = {L.bottom}
    for a in S:
        elems |= {L.join(x, a) for x in elems}
    m = 0
    for x in elems:
        m |= 1 << x
    return m


def restrict_to_atoms(GL, S):
    """Sub-join-lattice generated by the atoms S.

    Accepts a GeometricLattice (returns one) or a plain Lattice (returns the
    pair ``(lattice, embedding)``)."""
    if isinstance(GL, GeometricLattice):
        sub, emb = GL.lattice.sub(join_closure_mask(GL.lattice, S))
        X = set()
        for a in S:
            X |= GL.flat_of[a]
        M = GL.matroid.restriction(X) if GL.matroid is not None else None
        flats = [frozenset(GL.flat_of[o] & X) for o in emb]
        return GeometricLattice(sub, M, flats, embedding=emb)
    return GL.sub(join_closure_mask(GL, S))


def geometric_from_lattice(L):
    """Wrap a geometric lattice, using its atoms as the ground set."""
    atoms = L.atoms()
    ground = [L.labels[a] for a in atoms]
    am = AtomMatroid(L)
    M = Matroid(ground, [[L.labels[a] for a in B] for B in am.bases()], check=False)
    flats = [frozenset(L.labels[a] for a in atoms if L.leq(a, x)) for x in range(L.size)]
    return GeometricLattice(L, M, flats)


def graph_from_json(data):
    return graphic(data["edges"], data.get("vertices"))


__all__ = [
    "Matroid", "from_bases", "uniform", "boolean", "graphic", "dual", "truncation",
    "direct_sum", "free_coextension", "GeometricLattice", "lattice_of_flats",
    "restrict_to_atoms", "nbc_bases", "AtomMatroid", "is_geometric",
    "complete_graph_edges", "geometric_from_lattice", "set_label",
]
