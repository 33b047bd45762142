"""Admissible maps, the edge labeling they induce, and descents of maximal
nested sets.

An admissible map ``omega`` is a dict from element labels of join-irreducibles
to integers.  Keying by label keeps it meaningful on sublattices.
"""

from .poset import iter_bits
from .errors import NoGenerator, NotMaximal, NotAdmissible
from .nested import maximal_nested_sets, parent, below_join, ids_of, compose, quotient


def omega_table(L, omega):
    """Per-id list of omega values (None off the join-irreducibles)."""
    out = [None] * L.size
    for x in L.join_irreducibles():
        lab = L.labels[x]
        if lab not in omega:
            raise NotAdmissible(f"omega undefined on {lab}")
        out[x] = omega[lab]
    return out


def edge_label(L, omega, a, b, table=None):
    """min omega(I) over join-irreducibles I with a v I = b."""
    a, b = L.index(a), L.index(b)
    w = omega_table(L, omega) if table is None else table
    J = L.join_table[a]
    best = None
    for I in L.join_irreducibles():
        if J[I] == b:
            v = w[I]
            if best is None or v < best:
                best = v
    if best is None:
        raise NoGenerator(f"no join-irreducible generates {L.labels[a]} < {L.labels[b]}")
    return best


def edge_labels(L, omega):
    """Dict (a, b) -> label over all covering pairs."""
    w = omega_table(L, omega)
    return {(a, b): edge_label(L, omega, a, b, w) for a, b in L.covers()}


def increasing_chain_counts(L, omega):
    """cnt[a][b] = number of saturated chains a -> b with weakly increasing labels."""
    lam = edge_labels(L, omega)
    m = L.size
    cnt = [[0] * m for _ in range(m)]
    for a in range(m):
        # state[x]: dict last label -> count of increasing chains a -> x
        state = {a: {None: 1}}
        for y in _bits_above(L, a):
            if y == a:
                continue
            acc = {}
            for x in L.lower_covers[y]:
                st = state.get(x)
                if not st:
                    continue
                l = lam[(x, y)]
                tot = sum(c for k, c in st.items() if k is None or k <= l)
                if tot:
                    acc[l] = acc.get(l, 0) + tot
            state[y] = acc
        for x, st in state.items():
            cnt[a][x] = sum(st.values())
    return cnt


def _bits_above(L, a):
    return list(iter_bits(L.up[a]))


def admissibility_witness(L, omega):
    """None if admissible, else (a, b, number of increasing chains)."""
    cnt = increasing_chain_counts(L, omega)
    for a in range(L.size):
        for b in _bits_above(L, a):
            if cnt[a][b] != 1:
                return (L.labels[a], L.labels[b], cnt[a][b])
    return None


def is_admissible(L, omega):
    return admissibility_witness(L, omega) is None


def default_admissible_map(L):
    """Join-irreducibles numbered 1, 2, ... in id order."""
    if hasattr(L, "lattice"):
        L = L.lattice
    return {L.labels[x]: k for k, x in enumerate(L.join_irreducibles(), start=1)}


def atom_order_map(L, order):
    """omega from a total order on atoms (list of labels or ids, increasing)."""
    return {L.labels[L.index(a)]: k for k, a in enumerate(order, start=1)}


def stirling_atom_order(L):
    """omega(|ij|) ordered lexicographically by (i, j), for a partition lattice."""
    atoms = L.atoms()

    def key(a):
        blk = [b for b in L.objects[a] if len(b) == 2][0]
        return tuple(sorted(blk))
    return {L.labels[a]: k for k, a in enumerate(sorted(atoms, key=key), start=1)}


class DescentData:
    def __init__(self, S, labels, parents, descents):
        self.S = S
        self.labels = labels      # node -> lambda(node)
        self.parents = parents    # node -> parent node or None
        self.descents = descents  # set of nodes

    @property
    def number(self):
        return len(self.descents)

    def __repr__(self):
        return f"<DescentData des={self.number}>"


def node_labels(BL, omega, S, table=None):
    """lambda(G) = lambda(J^G, G) for G in S u max G; NotMaximal unless every
    local interval has rank 1."""
    L = BL.lattice
    S = ids_of(BL, S)
    w = omega_table(L, omega) if table is None else table
    r = L.rank_function()
    out = {}
    for G in sorted(S | set(BL.max_G())):
        J = below_join(BL, S, G)
        if r[G] - r[J] != 1:
            raise NotMaximal(f"local interval at {L.labels[G]} has rank {r[G] - r[J]}")
        out[G] = edge_label(L, omega, J, G, w)
    top = L.top
    if top not in out:
        J = L.join_of_set(BL.max_G())
        if J != top:
            raise NotMaximal("top local interval is not trivial")
    return out


def descent_data(BL, omega, S, table=None):
    S = ids_of(BL, S)
    lam = node_labels(BL, omega, S, table)
    parents = {G: parent(BL, S, G) for G in lam}
    des = {G for G, p in parents.items() if p is not None and lam[G] > lam[p]}
    return DescentData(S, lam, parents, des)


def descent_number(BL, omega, S):
    return descent_data(BL, omega, S).number


def descent_h_polynomial(BL, omega, facets=None):
    """sum over maximal nested sets of t^des, lowest degree first."""
    L = BL.lattice
    w = omega_table(L, omega)
    facets = maximal_nested_sets(BL) if facets is None else facets
    if not facets:
        return []
    d = max(len(S) for S in facets)
    coeffs = [0] * (d + 1)
    for S in facets:
        coeffs[descent_data(BL, omega, S, w).number] += 1
    return coeffs


def label_compatibility_check(BL, omega, S, G, SG):
    """Compare the label of every rank-1 local interval of S_G (inside the
    local interval at G) with the label of its image in S o S_G."""
    L = BL.lattice
    S = ids_of(BL, S)
    G = L.index(G)
    SG = ids_of(BL, SG)
    r = L.rank_function()
    J = below_join(BL, S, G)
    T = compose(BL, S, {G: SG})
    w = omega_table(L, omega)
    for Gp in sorted(SG | {G}):
        Jp = L.join(J, L.join_of_set([x for x in SG if L.less(x, Gp)]))
        if r[Gp] - r[Jp] != 1:
            continue
        img = Gp if Gp == G else quotient(BL, J, Gp)
        Jimg = below_join(BL, T, img)
        if r[img] - r[Jimg] != 1:
            return False
        if edge_label(L, omega, Jp, Gp, w) != edge_label(L, omega, Jimg, img, w):
            return False
    return True


def chain_descents(labels):
    return sum(1 for a, b in zip(labels, labels[1:]) if a > b)
