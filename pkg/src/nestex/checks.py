"""Invariant checks run per corpus instance by ``nestex verify`` and the
acceptance suite.  Each check returns (ok, detail)."""

import os
from concurrent.futures import ThreadPoolExecutor

from .building import delete_ideal, restrict
from .complexes import (f_from_h, is_m_vector, is_strongly_flawless, join_all)
from .decomp import brute_force_vd, verify_vd, vertex_decomposition
from .ears import convex_ear_decomposition, facet_basis_check, verify_ced
from .labeling import default_admissible_map, descent_h_polynomial, admissibility_witness
from .nested import (cone_nested_complex, link_via_local_intervals, nested_complex,
                     purity_check, ids_of)

BRUTE_LIMIT = 12
LINK_FACE_LIMIT = 3000


def check_purity(inst, N):
    ok, d = purity_check(inst.built, N)
    return ok, f"dim {d}"


def check_admissible(inst, N):
    w = admissibility_witness(inst.built.lattice, default_admissible_map(inst.built.lattice))
    return w is None, "" if w is None else f"{w[2]} increasing chains on [{w[0]}, {w[1]}]"


def check_descents(inst, N):
    BL = inst.built
    got = descent_h_polynomial(BL, default_admissible_map(BL.lattice))
    want = list(N.h_vector())
    return got == want, f"descents {got} vs h {want}"


def check_vd(inst, N):
    cert = vertex_decomposition(inst.built)
    rep = verify_vd(N, cert)
    if not rep:
        return False, repr(rep)
    if len(N.vertices) <= BRUTE_LIMIT and not brute_force_vd(N):
        return False, "brute force disagrees"
    return True, f"{cert.root.leaves()} leaves"


def check_ced(inst, N):
    if not inst.geometric:
        return True, "skipped"
    BL = inst.built
    ed = convex_ear_decomposition(BL)
    rep = verify_ced(N, ed.ears)
    if not rep:
        return False, repr(rep)
    seen = []
    for e in ed.ears:
        seen += list(e.delta.facets)
    if len(seen) != len(set(seen)):
        return False, "a facet lies in two ears"
    bad = facet_basis_check(BL)
    if bad:
        return False, f"{len(bad)} facets whose labels are not an nbc-basis"
    return True, f"{len(ed)} ears"


def check_h_vector(inst, N):
    h = N.h_vector()
    if not is_strongly_flawless(h):
        return False, f"h {h} not strongly flawless"
    if not is_m_vector(N.g_vector()):
        return False, f"g {N.g_vector()} not an M-vector"
    if any(c < 0 for c in N.complementary_vector()):
        return False, f"complementary {N.complementary_vector()} has a negative entry"
    if tuple(f_from_h(h)) != tuple(N.f_vector()):
        return False, "f -> h -> f roundtrip"
    return True, f"h={tuple(h)}"


def check_deletion(inst, N):
    BL = inst.built
    L = BL.lattice
    n = 0
    for g in L.join_irreducibles():
        if g == L.top or not BL.in_G(g) or g in BL.max_G():
            continue
        D = delete_ideal(BL, g)
        if nested_complex(D) != N.delete_vertex(L.labels[g]):
            return False, f"deletion of {L.labels[g]}"
        n += 1
    return True, f"{n} deletions"


def _link_faces(N):
    faces = [f for f in N.faces() if f]
    if len(faces) > LINK_FACE_LIMIT:
        faces = [f for f in faces if len(f) <= 2]
    return sorted(faces, key=lambda f: (len(f), sorted(f)))


def check_link(inst, N):
    BL = inst.built
    faces = _link_faces(N)
    for F in faces:
        joined, injective = link_via_local_intervals(BL, ids_of(BL, F))
        if not injective:
            return False, f"vertex map not injective at {sorted(F)}"
        if joined != N.link(F):
            return False, f"link of {sorted(F)}"
    return True, f"{len(faces)} links"


def check_cone(inst, N):
    BL = inst.built
    L = BL.lattice
    parts = []
    for g in BL.max_G():
        R = restrict(BL, g)
        parts.append(nested_complex(R).cone(L.labels[g]))
    if join_all(parts) != cone_nested_complex(BL):
        return False, "cone decomposition"
    return True, ""


CHECKS = {
    "purity": check_purity,
    "admissible": check_admissible,
    "descents": check_descents,
    "vd": check_vd,
    "ced": check_ced,
    "hvector": check_h_vector,
    "deletion": check_deletion,
    "link": check_link,
    "cone": check_cone,
}


def run_instance(inst, names=None):
    names = list(CHECKS) if names is None else names
    N = nested_complex(inst.built)
    out = {}
    for nm in names:
        try:
            out[nm] = CHECKS[nm](inst, N)
        except Exception as exc:  # report, do not abort the batch
            out[nm] = (False, f"{type(exc).__name__}: {exc}")
    return out


def threads():
    try:
        return max(1, int(os.environ.get("NESTEX_THREADS", "1")))
    except ValueError:
        return 1


def run_corpus(instances, names=None):
    """{key: {check: (ok, detail)}} sorted by instance key."""
    n = threads()
    if n == 1:
        res = [run_instance(i, names) for i in instances]
    else:
        with ThreadPoolExecutor(n) as ex:
            res = list(ex.map(lambda i: run_instance(i, names), instances))
    return dict(sorted(zip((i.key for i in instances), res)))


def failures(report):
    return [(k, c, d) for k, r in report.items() for c, (ok, d) in r.items() if not ok]
