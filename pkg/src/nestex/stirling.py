"""Stirling permutations, second Eulerian polynomials, and the bijection with
maximal nested sets of partition lattices under the minimal building set.

Elements of the minimal building set of a partition lattice are identified
with their unique nonsingleton block, so nested sets here are sets of
frozensets of integers.
"""

from fractions import Fraction
from math import comb

from .errors import NotMaximal, NotStirling, ZeroPolynomial


# permutations

def stirling_permutations(I):
    """All Stirling permutations on the multiset {i, i : i in I}, sorted."""
    words = [()]
    for v in sorted(I):
        # v exceeds everything placed so far, so "v v" may sit in any gap
        words = [w[:k] + (v, v) + w[k:] for w in words for k in range(len(w) + 1)]
    words.sort()
    return words


def is_stirling(word):
    word = list(word)
    pos = {}
    for k, x in enumerate(word):
        pos.setdefault(x, []).append(k)
    for x, ps in pos.items():
        if len(ps) != 2:
            return False
        a, b = ps
        if any(word[k] <= x for k in range(a + 1, b)):
            return False
    return True


def descents(word):
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def word_str(word):
    if all(0 <= x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def parse_word(s):
    s = s.strip()
    if "," in s:
        return tuple(int(x) for x in s.split(","))
    return tuple(int(c) for c in s)


def double_factorial_odd(n):
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


# second Eulerian polynomials

def second_eulerian_recurrence(n):
    """Coefficients (lowest first) from Q_{n+1,k} = (k+1)Q_{n,k} + (2n+1-k)Q_{n,k-1}."""
    if n < 1:
        raise ValueError("n >= 1")
    q = [1]
    for m in range(1, n):
        new = [0] * (m + 1)
        for k in range(m + 1):
            a = (k + 1) * q[k] if k < len(q) else 0
            b = (2 * m + 1 - k) * q[k - 1] if 1 <= k <= len(q) else 0
            new[k] = a + b
        q = new
    return q


def count_by_descents_enumerated(n):
    c = [0] * n
    for w in stirling_permutations(range(1, n + 1)):
        c[descents(w)] += 1
    return c


def second_eulerian(n, method="recurrence"):
    if method == "enumerate":
        return count_by_descents_enumerated(n)
    return second_eulerian_recurrence(n)


def count_by_descents(n, method="recurrence"):
    return second_eulerian(n, method)


def stirling2(n, k):
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(k + 1)) // _fact(k)


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def check_top_heavy(n, counts=None):
    """h_i <= h_{d-i} and h_0 <= ... <= h_{floor(d/2)} for d = n - 1."""
    c = second_eulerian(n) if counts is None else list(counts)
    d = len(c) - 1
    half = d // 2
    if any(c[k] > c[d - k] for k in range(half + 1)):
        return False
    return all(c[k] <= c[k + 1] for k in range(half))


# the bijection

def _min_block_containing(S, m, top):
    cands = [G for G in S if m in G] + [top]
    G0 = min(cands, key=len)
    for G in cands:
        if not G0 <= G:
            raise NotMaximal("blocks containing the minimum do not form a chain")
    return G0


def psi(S, I):
    """Stirling permutation on I minus min I attached to a maximal nested set
    S (a set of blocks, the top block I excluded)."""
    I = frozenset(I)
    S = {frozenset(G) for G in S}
    if len(I) < 2:
        raise ValueError("|I| >= 2 required")
    if len(S) != len(I) - 2:
        raise NotMaximal(f"expected {len(I) - 2} blocks, got {len(S)}")
    m = min(I)
    G0 = _min_block_containing(S, m, I)
    Gt = G0 - {m}
    a = min(Gt)
    if len(Gt) >= 2:
        if Gt not in S:
            raise NotMaximal("local interval below the minimal block has rank > 1")
        inner = psi({G for G in S if G < Gt}, Gt)
    else:
        inner = ()
    if G0 == I:
        rest = ()
    else:
        star = m - 1
        sub = set()
        for G in S:
            if G0 < G:
                sub.add((G - G0) | {star})
            elif not (G & G0):
                sub.add(G)
            elif not G <= G0:
                raise NotMaximal("not nested")
        rest = psi(sub, (I - G0) | {star})
    return (a,) + inner + (a,) + rest


def phi(sigma, I):
    """Inverse of psi: blocks of the maximal nested set for sigma."""
    I = frozenset(I)
    sigma = tuple(sigma)
    m = min(I)
    if sorted(set(sigma)) != sorted(I - {m}) or not is_stirling(sigma):
        raise NotStirling(f"{sigma} is not a Stirling permutation on {sorted(I - {m})}")
    alpha = sigma[0]
    j = sigma.index(alpha, 1)
    s1, s2 = sigma[1:j], sigma[j + 1:]
    Gt = frozenset(s1) | {alpha}
    G0 = Gt | {m}
    out = set()
    if len(Gt) >= 2:
        out.add(Gt)
        out |= phi(s1, Gt)
    if G0 != I:
        out.add(G0)
        star = m - 1
        for B in phi(s2, (I - G0) | {star}):
            out.add((B - {star}) | G0 if star in B else B)
    return frozenset(out)


def partition_block(L, x):
    """The nonsingleton block of a partition with exactly one of them."""
    big = [b for b in L.objects[x] if len(b) > 1]
    if len(big) != 1:
        raise ValueError(f"{L.labels[x]} is not connected")
    return big[0]


def nested_to_blocks(BL, S):
    return frozenset(partition_block(BL.lattice, BL.lattice.index(x)) for x in S)


def blocks_to_nested(BL, blocks):
    """Element ids of the partitions with the given single nonsingleton blocks."""
    L = BL.lattice
    ground = frozenset().union(*L.objects[L.top])
    out = []
    for b in blocks:
        p = frozenset([frozenset(b)] + [frozenset([x]) for x in ground - set(b)])
        out.append(L.index(p))
    return frozenset(out)


def ground_of(BL):
    L = BL.lattice
    return frozenset().union(*L.objects[L.top])


def psi_nested(BL, S):
    return psi(nested_to_blocks(BL, S), ground_of(BL))


def phi_nested(BL, sigma):
    return blocks_to_nested(BL, phi(sigma, ground_of(BL)))


# real roots

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return [k * p[k] for k in range(1, len(p))]


def _rem(a, b):
    a = [Fraction(x) for x in a]
    b = _trim(b)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        if not a:
            break
        f = a[-1] / b[-1]
        sh = len(a) - len(b)
        for k in range(len(b)):
            a[sh + k] -= f * b[k]
        a.pop()
    return _trim(a)


def _div(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        sh = len(a) - len(b)
        q[sh] = f
        for k in range(len(b)):
            a[sh + k] -= f * b[k]
        a = _trim(a)
    return _trim(q)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _rem(a, b)
    return [x / a[-1] for x in a] if a else a


def square_free_part(p):
    p = _trim([Fraction(x) for x in p])
    g = _gcd(p, _deriv(p))
    return _div(p, g) if len(g) > 1 else p


def sturm_sequence(p):
    seq = [_trim([Fraction(x) for x in p]), _deriv(p)]
    seq[1] = _trim(seq[1])
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return seq


def _sign_changes(vals):
    vals = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(vals, vals[1:]) if (a < 0) != (b < 0))


def count_real_roots(p):
    """Number of distinct real roots (Sturm)."""
    p = _trim(p)
    if not p:
        raise ZeroPolynomial("the zero polynomial")
    if len(p) == 1:
        return 0
    seq = sturm_sequence(p)
    at_pos = [q[-1] for q in seq if q]
    at_neg = [q[-1] * (-1) ** (len(q) - 1) for q in seq if q]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def is_real_rooted(p):
    """All complex roots of the integer polynomial p (lowest degree first) real."""
    p = _trim(p)
    if not p:
        raise ZeroPolynomial("the zero polynomial")
    q = square_free_part(p)
    return count_real_roots(q) == len(q) - 1
