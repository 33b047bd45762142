"""Simplicial complexes given by facets, and integer vector utilities."""

import hashlib
import json
from itertools import combinations
from math import comb

from .errors import NotAFace, NonNegativeRequired


def _maximal(sets):
    sets = sorted(set(sets), key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s <= t for t in out):
            out.append(s)
    return out


def _vkey(v):
    # sort vertices of mixed types deterministically
    return (str(type(v)), str(v))


class SimplicialComplex:
    """Finite simplicial complex stored by its facets (frozensets of vertices).

    ``SimplicialComplex([])`` is the void complex; ``SimplicialComplex([()])``
    is the complex {∅} with one empty face."""

    def __init__(self, facets, vertices=None, reduce=True):
        fs = [frozenset(f) for f in facets]
        if reduce:
            fs = _maximal(fs)
        self.facets = sorted(fs, key=lambda f: (len(f), sorted(map(_vkey, f))))
        self._facet_set = frozenset(self.facets)
        vs = set()
        for f in self.facets:
            vs |= f
        if vertices is not None:
            vs |= set(vertices)
        self.vertices = sorted(vs, key=_vkey)
        self._faces = None

    def __repr__(self):
        return f"<SimplicialComplex dim {self.dim} with {len(self.facets)} facets>"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facet_set == other._facet_set

    def __hash__(self):
        return hash(self._facet_set)

    def facet_set(self):
        return self._facet_set

    @property
    def dim(self):
        if not self.facets:
            return -2  # void complex
        return max(len(f) for f in self.facets) - 1

    def is_void(self):
        return not self.facets

    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    def is_simplex(self):
        return len(self.facets) == 1

    def faces(self):
        if self._faces is None:
            out = set()
            for f in self.facets:
                fl = sorted(f, key=_vkey)
                for k in range(len(fl) + 1):
                    for c in combinations(fl, k):
                        out.add(frozenset(c))
            self._faces = out
        return self._faces

    def is_face(self, F):
        F = frozenset(F)
        return any(F <= f for f in self.facets)

    def f_vector(self):
        """(f_{-1}, f_0, ..., f_dim) where f_i counts faces of dimension i."""
        if not self.facets:
            return ()
        fv = [0] * (self.dim + 2)
        for s in self.faces():
            fv[len(s)] += 1
        return tuple(fv)

    def h_vector(self):
        return h_from_f(self.f_vector())

    def h_polynomial(self):
        return list(self.h_vector())

    def g_vector(self):
        return g_from_h(self.h_vector())

    def complementary_vector(self):
        return complementary_from_h(self.h_vector())

    def reduced_euler_characteristic(self):
        return sum((-1) ** (i - 1) * x for i, x in enumerate(self.f_vector()))

    # operations
    def link(self, F):
        F = frozenset(F)
        if not self.is_face(F):
            raise NotAFace(f"{sorted(F, key=_vkey)} is not a face")
        return SimplicialComplex([f - F for f in self.facets if F <= f])

    def star(self, F):
        F = frozenset(F)
        return SimplicialComplex([f for f in self.facets if F <= f])

    def delete_vertex(self, v):
        return SimplicialComplex([f - {v} for f in self.facets])

    def delete_face(self, F):
        """Faces not containing F."""
        F = frozenset(F)
        out = []
        for f in self.facets:
            if F <= f:
                out.extend(f - {v} for v in F)
            else:
                out.append(f)
        return SimplicialComplex(out)

    def cone(self, apex):
        if apex in self.vertices:
            raise ValueError("apex already a vertex")
        return SimplicialComplex([f | {apex} for f in self.facets])

    def ridges(self):
        """Map ridge -> number of facets containing it (pure complexes)."""
        cnt = {}
        for f in self.facets:
            for v in f:
                r = f - {v}
                cnt[r] = cnt.get(r, 0) + 1
        return cnt

    def boundary(self):
        """Complex generated by ridges lying in exactly one facet."""
        return SimplicialComplex([r for r, c in self.ridges().items() if c == 1])

    def is_pseudomanifold(self, with_boundary=False):
        if not self.is_pure():
            return False
        for c in self.ridges().values():
            if c > 2 or (c == 1 and not with_boundary):
                return False
        return True

    def relabel(self, mapping):
        m = mapping if callable(mapping) else mapping.__getitem__
        return SimplicialComplex([frozenset(m(v) for v in f) for f in self.facets])

    def restrict_to(self, vertices):
        """Induced subcomplex on a vertex set."""
        V = frozenset(vertices)
        return SimplicialComplex([f & V for f in self.facets])

    def canonical_hash(self):
        data = sorted(sorted(str(v) for v in f) for f in self.facets)
        return hashlib.sha256(json.dumps(data).encode()).hexdigest()

    def to_json(self):
        verts = [str(v) for v in self.vertices]
        pos = {v: i for i, v in enumerate(self.vertices)}
        facets = sorted(sorted(pos[v] for v in f) for f in self.facets)
        return {"vertices": verts, "facets": facets}

    @classmethod
    def from_json(cls, data):
        V = data["vertices"]
        return cls([[V[i] for i in f] for f in data["facets"]], vertices=V)


def simplex(vertices):
    return SimplicialComplex([frozenset(vertices)])


def join_complex(A, B):
    if set(A.vertices) & set(B.vertices):
        raise ValueError("join needs disjoint vertex sets")
    return SimplicialComplex([f | g for f in A.facets for g in B.facets])


def join_all(complexes):
    out = SimplicialComplex([frozenset()])
    for c in complexes:
        out = join_complex(out, c)
    return out


def h_from_f(fv):
    """h-vector from (f_{-1}, ..., f_{d-1}); d = len(fv) - 1."""
    d = len(fv) - 1
    return tuple(sum((-1) ** (k - i) * comb(d - i, k - i) * fv[i] for i in range(k + 1))
                 for k in range(d + 1))


def f_from_h(hv):
    d = len(hv) - 1
    return tuple(sum(comb(d - i, k - i) * hv[i] for i in range(k + 1)) for k in range(d + 1))


def g_from_h(hv):
    d = len(hv) - 1
    out = [hv[0]] if hv else []
    for i in range(1, d // 2 + 1):
        out.append(hv[i] - hv[i - 1])
    return tuple(out)


def complementary_from_h(hv):
    d = len(hv) - 1
    return tuple(hv[d - i] - hv[i] for i in range(d // 2 + 1))


def _check_nonneg(v):
    if any(x < 0 for x in v):
        raise NonNegativeRequired(f"negative entry in {tuple(v)}")


def macaulay_representation(a, i):
    """Coefficients a_i > a_{i-1} > ... > a_j >= j >= 1 with
    a = sum C(a_k, k)."""
    rep = []
    k = i
    while a > 0 and k >= 1:
        n = k
        while comb(n + 1, k) <= a:
            n += 1
        rep.append((n, k))
        a -= comb(n, k)
        k -= 1
    return rep


def macaulay_bound(a, i):
    """a^<i>: the largest possible next entry of an M-vector after a in degree i."""
    return sum(comb(n + 1, k + 1) for n, k in macaulay_representation(a, i))


def is_m_vector(v):
    v = list(v)
    _check_nonneg(v)
    if not v or v[0] != 1:
        return False
    for i in range(1, len(v) - 1):
        if v[i + 1] > macaulay_bound(v[i], i):
            return False
    return True


def is_flawless(v):
    _check_nonneg(v)
    d = len(v) - 1
    return all(v[i] <= v[d - i] for i in range(d // 2 + 1))


def is_strongly_flawless(v):
    _check_nonneg(v)
    d = len(v) - 1
    half = d // 2
    return all(v[i] <= v[i + 1] for i in range(half)) and is_flawless(v)


def poly_str(coeffs, var="t"):
    """Lowest degree first: "1 + 3t + t^2"."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mon = var if k == 1 else f"{var}^{k}"
        coef = "" if c == 1 else ("-" if c == -1 else str(c))
        terms.append(coef + mon)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def poly_str_desc(coeffs, var="x"):
    """Highest degree first, no spaces: "6x^2+8x+1"."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            s = str(c)
        else:
            mon = var if k == 1 else f"{var}^{k}"
            s = ("" if c == 1 else ("-" if c == -1 else str(c))) + mon
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def strip_trailing_zeros(coeffs):
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c
