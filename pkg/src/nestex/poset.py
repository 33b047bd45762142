"""Finite posets and lattices on dense integer ids with bitmask order data.

Every lattice keeps its element ids in a linear extension of the order
(``a < b`` implies ``id(a) < id(b)``), so the least element of an up-set is
its lowest set bit and the greatest element of a down-set its highest bit.
"""

from itertools import combinations, product as _iproduct

from .errors import NotALattice, NotAPartialOrder, NotGraded, NotComparable


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask):
    return list(iter_bits(mask))


def mask_of(ids):
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def set_label(items):
    """Compact label for a finite set: ``{1,2}`` -> "12", ``{}`` -> "∅"."""
    items = sorted(items)
    if not items:
        return "∅"
    strs = [str(x) for x in items]
    if all(len(s) == 1 for s in strs):
        return "".join(strs)
    return ",".join(strs)


def partition_label(blocks):
    big = sorted((sorted(b) for b in blocks if len(b) > 1))
    if not big:
        return "∅"
    return "|".join(set_label(b) for b in big)


class Lattice:
    """A finite lattice.

    ``down[i]`` / ``up[i]`` are bitmasks of the principal ideal / filter of i
    (both include i).  ``objects`` is an optional payload per element, e.g. the
    underlying set or partition.
    """

    def __init__(self, down, labels=None, objects=None):
        m = len(down)
        self.size = m
        self.down = list(down)
        up = [0] * m
        for b in range(m):
            for a in iter_bits(down[b]):
                up[a] |= 1 << b
        self.up = up
        self.labels = [str(i) for i in range(m)] if labels is None else list(labels)
        self.objects = list(objects) if objects is not None else list(self.labels)
        self._index = {}
        for i, lab in enumerate(self.labels):
            self._index.setdefault(lab, i)
        for i, ob in enumerate(self.objects):
            try:
                self._index.setdefault(ob, i)
            except TypeError:
                pass
        # lower covers: maximal elements of the strict down-set
        lower = []
        for b in range(m):
            strict = down[b] & ~(1 << b)
            cov = []
            seen = 0
            for a in sorted(iter_bits(strict), reverse=True):
                if not (seen >> a) & 1:
                    cov.append(a)
                    seen |= down[a]
            cov.sort()
            lower.append(cov)
        self.lower_covers = lower
        upper = [[] for _ in range(m)]
        for b in range(m):
            for a in lower[b]:
                upper[a].append(b)
        self.upper_covers = upper
        self._build_tables()
        self._rank = None

    def _build_tables(self):
        m = self.size
        up, down = self.up, self.down
        J = [[0] * m for _ in range(m)]
        M = [[0] * m for _ in range(m)]
        for a in range(m):
            J[a][a] = a
            M[a][a] = a
            for b in range(a + 1, m):
                U = up[a] & up[b]
                if not U:
                    raise NotALattice(self.labels[a], self.labels[b])
                j = (U & -U).bit_length() - 1
                if up[j] != U:
                    raise NotALattice(self.labels[a], self.labels[b])
                J[a][b] = J[b][a] = j
                D = down[a] & down[b]
                if not D:
                    raise NotALattice(self.labels[a], self.labels[b], "infimum")
                k = D.bit_length() - 1
                if down[k] != D:
                    raise NotALattice(self.labels[a], self.labels[b], "infimum")
                M[a][b] = M[b][a] = k
        self.join_table = J
        self.meet_table = M
        if m == 0:
            raise NotALattice(None, None, "bottom")
        self.bottom = 0
        self.top = m - 1
        if self.down[self.top] != (1 << m) - 1 or self.up[0] != (1 << m) - 1:
            raise NotALattice(self.labels[0], self.labels[-1])

    # basic queries
    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<Lattice with {self.size} elements>"

    def index(self, x):
        """Element id from an id, a label, or a payload object."""
        if isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.size:
            return x
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise KeyError(f"unknown element {x!r}") from None

    def leq(self, a, b):
        return (self.down[b] >> a) & 1 == 1

    def less(self, a, b):
        return a != b and self.leq(a, b)

    def join(self, a, b):
        return self.join_table[a][b]

    def meet(self, a, b):
        return self.meet_table[a][b]

    def join_of_set(self, S):
        j = self.bottom
        for x in S:
            j = self.join_table[j][x]
        return j

    def meet_of_set(self, S):
        j = self.top
        for x in S:
            j = self.meet_table[j][x]
        return j

    def atoms(self):
        return list(self.upper_covers[self.bottom])

    def is_atom(self, x):
        return self.lower_covers[x] == [self.bottom]

    def covers_of(self, x):
        """Elements covering x."""
        return list(self.upper_covers[x])

    def covered_by(self, x):
        """Elements covered by x."""
        return list(self.lower_covers[x])

    def covers(self):
        return [(a, b) for b in range(self.size) for a in self.lower_covers[b]]

    def join_irreducibles(self):
        return [x for x in range(self.size) if len(self.lower_covers[x]) == 1]

    def is_join_irreducible(self, x):
        return len(self.lower_covers[x]) == 1

    def rank_function(self):
        if self._rank is None:
            self._rank = _rank(self)
        return self._rank

    def rank(self, x=None):
        r = self.rank_function()
        return r[self.top] if x is None else r[x]

    def is_graded(self):
        try:
            self.rank_function()
        except NotGraded:
            return False
        return True

    def ideal(self, x):
        return self.down[x]

    def filter(self, x):
        return self.up[x]

    def interval_mask(self, a, b):
        return self.up[a] & self.down[b]

    def interval(self, a, b):
        """Induced lattice on [a, b]; returns (lattice, embedding list)."""
        if not self.leq(a, b):
            raise NotComparable(f"{self.labels[a]} is not below {self.labels[b]}")
        return self.sub(self.interval_mask(a, b))

    def sub(self, mask):
        """Induced subposet on a bitmask of ids, which must be a lattice.

        Returns ``(lattice, emb)`` where ``emb[new_id] = old_id``."""
        emb = bits(mask)
        pos = {old: i for i, old in enumerate(emb)}
        downs = []
        for old in emb:
            d = 0
            for o in iter_bits(self.down[old] & mask):
                d |= 1 << pos[o]
            downs.append(d)
        return (Lattice(downs, [self.labels[o] for o in emb],
                        [self.objects[o] for o in emb]), emb)

    def max_elements(self, mask):
        """Maximal elements of the subset given by mask."""
        out = []
        seen = 0
        for a in sorted(iter_bits(mask), reverse=True):
            if not (seen >> a) & 1:
                out.append(a)
            seen |= self.down[a]
        return sorted(out)

    def min_elements(self, mask):
        out = []
        seen = 0
        for a in iter_bits(mask):
            if not (seen >> a) & 1:
                out.append(a)
            seen |= self.up[a]
        return out

    def maximal_chains(self, a=None, b=None):
        a = self.bottom if a is None else a
        b = self.top if b is None else b
        res = []

        def go(x, acc):
            if x == b:
                res.append(list(acc))
                return
            for y in self.upper_covers[x]:
                if self.leq(y, b):
                    acc.append(y)
                    go(y, acc)
                    acc.pop()
        go(a, [a])
        return res

    def leq_pairs(self):
        return [(a, b) for b in range(self.size) for a in iter_bits(self.down[b])]

    # serialization
    def to_json(self):
        return {"labels": list(self.labels), "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data):
        return cls.from_covers(data["labels"], data["covers"])

    @classmethod
    def from_covers(cls, labels, covers, objects=None):
        """Lattice from covering pairs (transitive closure is taken)."""
        n = len(labels)
        objects = list(labels) if objects is None else list(objects)
        ups = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in covers:
            ups[a].append(b)
            indeg[b] += 1
        # topological order, smallest index first
        import heapq
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            x = heapq.heappop(heap)
            order.append(x)
            for y in ups[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(heap, y)
        if len(order) != n:
            raise NotAPartialOrder("cover relation has a cycle")
        pos = {old: i for i, old in enumerate(order)}
        downs = [1 << i for i in range(n)]
        lows = [[] for _ in range(n)]
        for a, b in covers:
            lows[pos[b]].append(pos[a])
        for i in range(n):
            for a in lows[i]:
                downs[i] |= downs[a]
        L = cls(downs, [labels[o] for o in order], [objects[o] for o in order])
        given = sorted((pos[a], pos[b]) for a, b in covers)
        if given != sorted(L.covers()):
            raise NotAPartialOrder("cover list is not a transitive reduction")
        return L


def _rank(L):
    rank = [0] * L.size
    chain = [[L.bottom]] + [None] * (L.size - 1)
    for x in range(1, L.size):
        lc = L.lower_covers[x]
        r0 = rank[lc[0]]
        for c in lc[1:]:
            if rank[c] != r0:
                raise NotGraded([L.labels[i] for i in chain[lc[0]] + [x]],
                                [L.labels[i] for i in chain[c] + [x]])
        rank[x] = r0 + 1
        chain[x] = chain[lc[0]] + [x]
    return rank


def build_lattice(elements, leq, labels=None):
    """Lattice on ``elements`` ordered by ``leq``.

    ``leq`` is either a callable ``leq(x, y)`` or a collection of pairs
    ``(x, y)`` meaning x <= y (reflexive pairs may be omitted; the relation is
    not closed transitively, it must already be a partial order)."""
    elements = list(elements)
    n = len(elements)
    if callable(leq):
        rel = [[bool(leq(x, y)) for y in elements] for x in elements]
    else:
        idx = {e: i for i, e in enumerate(elements)}
        rel = [[i == j for j in range(n)] for i in range(n)]
        for x, y in leq:
            rel[idx[x]][idx[y]] = True
    for i in range(n):
        if not rel[i][i]:
            raise NotAPartialOrder(f"not reflexive at {elements[i]!r}")
    down = [0] * n
    for j in range(n):
        d = 0
        for i in range(n):
            if rel[i][j]:
                d |= 1 << i
        down[j] = d
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise NotAPartialOrder(f"not antisymmetric: {elements[i]!r}, {elements[j]!r}")
    for j in range(n):
        for i in iter_bits(down[j]):
            if down[i] & ~down[j]:
                raise NotAPartialOrder(f"not transitive below {elements[j]!r}")
    # stable sort by ideal size gives a linear extension
    order = sorted(range(n), key=lambda i: down[i].bit_count())
    pos = {old: k for k, old in enumerate(order)}
    newdown = []
    for old in order:
        d = 0
        for i in iter_bits(down[old]):
            d |= 1 << pos[i]
        newdown.append(d)
    if labels is None:
        labs = [_default_label(elements[o]) for o in order]
    elif callable(labels):
        labs = [labels(elements[o]) for o in order]
    else:
        labs = [labels[o] for o in order]
    return Lattice(newdown, labs, [elements[o] for o in order])


def _default_label(x):
    if isinstance(x, (frozenset, set)):
        if all(isinstance(b, frozenset) for b in x) and x:
            return partition_label(x)
        return set_label(x)
    return str(x)


# standard families

def chain(n):
    """Chain 0 < 1 < ... < n (n covering steps)."""
    return Lattice([(1 << (i + 1)) - 1 for i in range(n + 1)],
                   [str(i) for i in range(n + 1)], list(range(n + 1)))


def boolean_lattice(n_or_ground):
    ground = list(range(1, n_or_ground + 1)) if isinstance(n_or_ground, int) else list(n_or_ground)
    subsets = [frozenset(c) for k in range(len(ground) + 1) for c in combinations(ground, k)]
    return build_lattice(subsets, lambda a, b: a <= b)


def set_partitions(ground):
    ground = list(ground)
    if not ground:
        yield []
        return
    first, rest = ground[0], ground[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def partition_lattice(n_or_ground):
    """Set partitions ordered by refinement (finer is smaller)."""
    ground = list(range(1, n_or_ground + 1)) if isinstance(n_or_ground, int) else sorted(n_or_ground)
    parts = [frozenset(frozenset(b) for b in p) for p in set_partitions(ground)]
    parts.sort(key=lambda p: (-len(p), sorted(sorted(b) for b in p if len(b) > 1)))
    where = []
    for p in parts:
        w = {}
        for k, b in enumerate(p):
            for x in b:
                w[x] = k
        where.append(w)

    def leq(i, j):
        wj = where[j]
        for b in parts[i]:
            it = iter(b)
            k = wj[next(it)]
            for x in it:
                if wj[x] != k:
                    return False
        return True
    L = build_lattice(range(len(parts)), leq, labels=lambda i: partition_label(parts[i]))
    L.objects = [parts[i] for i in L.objects]
    for i, ob in enumerate(L.objects):
        L._index.setdefault(ob, i)
    return L


def product(P, Q):
    """Cartesian product lattice with componentwise order."""
    pairs = list(_iproduct(range(P.size), range(Q.size)))
    L = build_lattice(pairs, lambda x, y: P.leq(x[0], y[0]) and Q.leq(x[1], y[1]),
                      labels=lambda x: f"({P.labels[x[0]]},{Q.labels[x[1]]})")
    return L


def product_of(lattices):
    if not lattices:
        return chain(0)
    out = lattices[0]
    for L in lattices[1:]:
        out = product(out, L)
    return out


def poset_isomorphic(P, Q):
    """Order isomorphism P -> Q as a list ``phi[p] = q``, or None."""
    n = P.size
    if n != Q.size:
        return None

    def sig(L, x):
        return (L.down[x].bit_count(), L.up[x].bit_count(),
                len(L.lower_covers[x]), len(L.upper_covers[x]))
    sp = [sig(P, x) for x in range(n)]
    sq = [sig(Q, x) for x in range(n)]
    if sorted(sp) != sorted(sq):
        return None
    cands = [[y for y in range(n) if sq[y] == sp[x]] for x in range(n)]
    phi = [-1] * n
    used = [False] * n

    def ok(x, y):
        # compare relation with previously mapped elements (ids < x)
        for z in range(x):
            w = phi[z]
            if P.leq(z, x) != Q.leq(w, y) or P.leq(x, z) != Q.leq(y, w):
                return False
        return True

    def go(x):
        if x == n:
            return True
        for y in cands[x]:
            if not used[y] and ok(x, y):
                phi[x] = y
                used[y] = True
                if go(x + 1):
                    return True
                used[y] = False
        phi[x] = -1
        return False
    return list(phi) if go(0) else None
