"""Command-line front end: ``nestex <verb> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error."""

import argparse
import json
import sys

from . import stirling as st
from .building import augmented_built_lattice, resolve_building_set
from .checks import CHECKS, failures, run_corpus
from .complexes import SimplicialComplex, poly_str, poly_str_desc
from .corpus import corpus as load_corpus
from .decomp import VDCertificate, verify_vd, vertex_decomposition
from .ears import EarDecomposition, convex_ear_decomposition, verify_ced
from .errors import NestexError
from .labeling import default_admissible_map
from .matroid import Matroid, complete_graph_edges, graph_from_json, graphic, lattice_of_flats, uniform
from .nested import cone_nested_complex, nested_complex
from .poset import Lattice, boolean_lattice, chain, partition_lattice


class UsageError(Exception):
    pass


def _dump(data, path):
    text = json.dumps(data, ensure_ascii=False, indent=1, sort_keys=False) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")


# lattice files may carry the matroid they came from

def _lattice_json(L, M=None, kind=None):
    data = L.to_json()
    if kind:
        data["kind"] = kind
    if M is not None:
        data["matroid"] = M.to_json()
    return data


def _read_lattice(path):
    data = _load(path)
    L = Lattice.from_json(data)
    M = Matroid.from_json(data["matroid"]) if "matroid" in data else None
    if M is not None:
        # reuse the flats so labels and objects agree with the matroid
        GL = lattice_of_flats(M)
        if list(GL.lattice.labels) == list(L.labels):
            L = GL.lattice
    return L, M


def _built(args):
    if not args.lattice:
        raise UsageError("-l/--lattice is required")
    L, M = _read_lattice(args.lattice)
    sel = args.building
    if sel == "aug":
        if M is None:
            raise UsageError("-b aug needs a lattice file made from a matroid")
        return augmented_built_lattice(M)
    if sel not in ("min", "max"):
        if sel.startswith("["):
            sel = json.loads(sel)
    return resolve_building_set(L, sel)


def _omega(args, L):
    src = getattr(args, "omega", "default") or "default"
    if src == "default":
        return default_admissible_map(L)
    data = _load(src)
    return {str(k): int(v) for k, v in data.items()}


def _complex_from(args):
    if getattr(args, "complex", None):
        return SimplicialComplex.from_json(_load(args.complex))
    return nested_complex(_built(args))


# verbs

def cmd_lattice(args):
    kind, params = args.kind, args.params
    M = None

    def need(k, as_int=True):
        if len(params) != k:
            raise UsageError(f"lattice {kind} takes {k} argument(s)")
        if not as_int:
            return params
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError("integer arguments expected")
    if kind == "boolean":
        (n,) = need(1)
        L = boolean_lattice(n)
    elif kind == "partition":
        (n,) = need(1)
        if n < 1:
            raise UsageError("n >= 1")
        L = partition_lattice(n)
    elif kind == "chain":
        (n,) = need(1)
        L = chain(n)
    elif kind == "uniform":
        r, n = need(2)
        M = uniform(r, n)
        L = lattice_of_flats(M).lattice
    elif kind == "complete-graph":
        (n,) = need(1)
        M = graphic(complete_graph_edges(n))
        L = lattice_of_flats(M).lattice
    elif kind == "graphic":
        (p,) = need(1, False)
        M = graph_from_json(_load(p))
        L = lattice_of_flats(M).lattice
    elif kind == "matroid":
        (p,) = need(1, False)
        M = Matroid.from_json(_load(p))
        L = lattice_of_flats(M).lattice
    else:
        raise UsageError(f"unknown lattice kind {kind}")
    _dump(_lattice_json(L, M, kind), args.output)
    return 0


def cmd_complex(args):
    BL = _built(args)
    C = cone_nested_complex(BL) if args.cone else nested_complex(BL)
    _dump(C.to_json(), args.output)
    return 0


def cmd_hvec(args):
    if args.path:
        C = SimplicialComplex.from_json(_load(args.path))
    else:
        C = _complex_from(args)
    f, h = C.f_vector(), C.h_vector()
    if args.json:
        _dump({"f": list(f), "h": list(h), "g": list(C.g_vector()),
               "complementary": list(C.complementary_vector()),
               "h_polynomial": poly_str(h)}, "-")
    else:
        print(f"f=({','.join(map(str, f))}) h=({','.join(map(str, h))})")
    return 0


def cmd_vd(args):
    if args.verify:
        cert = VDCertificate.from_json(_load(args.verify))
        C = _complex_from(args)
        rep = verify_vd(C, cert)
        print("ok" if rep else f"FAIL {'/'.join(rep.path) or 'root'}: {rep.reason}")
        return 0 if rep else 1
    BL = _built(args)
    cert = vertex_decomposition(BL, _omega(args, BL.lattice))
    _dump(cert.to_json(), args.output)
    return 0


def cmd_ced(args):
    if args.verify:
        ed = EarDecomposition.from_json(_load(args.verify))
        C = _complex_from(args)
        rep = verify_ced(C, ed.ears)
        if rep:
            print(f"ok ({len(ed)} ears)")
            return 0
        for clause, msg in rep.failures:
            print(f"FAIL ({clause}) {msg}")
        return 1
    BL = _built(args)
    order = args.atom_order.split(",") if args.atom_order else None
    ed = convex_ear_decomposition(BL, order)
    _dump(ed.to_json(), args.output)
    return 0


def cmd_stirling(args):
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.counts:
        print(" ".join(map(str, st.count_by_descents(n, args.method))))
    elif args.bijection_check:
        return _bijection_check(n)
    elif args.list:
        for w in st.stirling_permutations(range(1, n + 1)):
            print(st.word_str(w))
    else:
        print(poly_str_desc(st.second_eulerian(n, args.method)))
    return 0


def _bijection_check(n):
    from .building import minimal_building_set
    from .labeling import stirling_atom_order, descent_number
    from .nested import maximal_nested_sets
    BL = minimal_building_set(partition_lattice(n + 1))
    om = stirling_atom_order(BL.lattice)
    seen = set()
    bad = 0
    for S in maximal_nested_sets(BL):
        w = st.psi_nested(BL, S)
        if not st.is_stirling(w) or st.phi_nested(BL, w) != frozenset(S) \
                or st.descents(w) != descent_number(BL, om, S):
            bad += 1
        seen.add(w)
    expect = st.double_factorial_odd(n)
    ok = bad == 0 and len(seen) == expect
    print(f"{'ok' if ok else 'FAIL'}: {len(seen)} permutations, {expect} expected, {bad} mismatches")
    return 0 if ok else 1


def cmd_corpus(args):
    for inst in load_corpus(args.name):
        BL = inst.built
        print(f"{inst.key}\t{BL.lattice.size} elements\t|G|={len(BL.G)}")
    return 0


def cmd_verify(args):
    if not args.all and not args.check:
        raise UsageError("give --all or --check NAME")
    names = None if args.all else args.check
    for c in names or []:
        if c not in CHECKS:
            raise UsageError(f"unknown check {c}; known: {', '.join(CHECKS)}")
    insts = load_corpus(args.corpus)
    if args.instance:
        insts = [i for i in insts if i.key in set(args.instance)]
    report = run_corpus(insts, names)
    bad = failures(report)
    if args.output:
        _dump({k: {c: {"ok": ok, "detail": d} for c, (ok, d) in r.items()}
               for k, r in report.items()}, args.output)
    for k, c, d in bad:
        print(f"FAIL {k} {c}: {d}")
    total = sum(len(r) for r in report.values())
    print(f"{len(report)} instances, {total} checks, {len(bad)} failures")
    return 0 if not bad else 1


def _add_built(p):
    p.add_argument("-l", "--lattice", help="lattice JSON file")
    p.add_argument("-b", "--building", default="min",
                   help="min | max | aug | comma-separated element labels")


def parser():
    ap = argparse.ArgumentParser(prog="nestex", description="Nested set complexes of built lattices.")
    ap.add_argument("--seed", help="accepted and ignored; nothing is random")
    sub = ap.add_subparsers(dest="verb")

    p = sub.add_parser("lattice", help="write a lattice JSON file")
    p.add_argument("kind", help="boolean | partition | chain | uniform | complete-graph | graphic | matroid")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("complex", help="write the nested set complex")
    _add_built(p)
    p.add_argument("--cone", action="store_true", help="cN instead of N")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("hvec", help="print f- and h-vectors")
    p.add_argument("path", nargs="?", help="complex JSON file")
    _add_built(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hvec)

    p = sub.add_parser("vd", help="build or verify a vertex decomposition")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--build", action="store_true")
    g.add_argument("--verify", metavar="CERT")
    _add_built(p)
    p.add_argument("--complex", help="complex JSON to verify against")
    p.add_argument("--omega", default="default", help="default | JSON file label -> int")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_vd)

    p = sub.add_parser("ced", help="build or verify a convex ear decomposition")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--build", action="store_true")
    g.add_argument("--verify", metavar="EARS")
    _add_built(p)
    p.add_argument("--complex", help="complex JSON to verify against")
    p.add_argument("--atom-order", help="atom labels, increasing, comma-separated")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ced)

    p = sub.add_parser("stirling", help="second Eulerian polynomials and the bijection")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--poly", action="store_true")
    g.add_argument("--counts", action="store_true")
    g.add_argument("--bijection-check", action="store_true")
    g.add_argument("--list", action="store_true")
    p.add_argument("--method", choices=["recurrence", "enumerate"], default="recurrence")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("corpus", help="list a named corpus")
    p.add_argument("--name", default="small")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("verify", help="run the invariant checks over a corpus")
    p.add_argument("--all", action="store_true")
    p.add_argument("--check", action="append", help="run only this check (repeatable)")
    p.add_argument("--corpus", default="small")
    p.add_argument("--instance", action="append", help="restrict to instance keys")
    p.add_argument("-o", "--output", help="JSON report")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if not getattr(args, "func", None):
        ap.print_help(sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"nestex: {exc}", file=sys.stderr)
        return 2
    except NestexError as exc:
        print(f"nestex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
