"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 when the
input cannot be read.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import absolutes as ab
from . import checks
from . import completion as cp
from . import duality as du
from . import serialize as ser
from . import topo
from .ba import MAX_ATOMS, Powerset, check_boolean_laws, pi_weight_poset
from .contact import check_axioms, find_lca_isomorphism, minimal_base, product
from .errors import ArtifactError, MembershipError, SizeError, StructureError
from .lba import LbaMorphism, classify_pair

EXHAUSTIVE_LAWS = 64
INPUT_ERRORS = (StructureError, MembershipError, SizeError, json.JSONDecodeError, OSError)


class UsageError(Exception):
    pass


def _expect(kind, obj, *allowed):
    if kind not in allowed:
        raise UsageError(f"expected a {' or '.join(allowed)} file, got a {kind}")
    return obj


def _enc(A, a):
    return ser.dump_element(A, a)


def _space_report(D) -> dict:
    return ser.dump_space(D.space if hasattr(D, "space") else D)


# -- subcommands ------------------------------------------------------------
# each returns (report, ok, dot-or-None)


def cmd_check(kind, obj):
    if kind == "triple":
        rep = check_axioms(obj)
        fails = {k: {"reason": v.reason, "witness": ser.to_jsonable(v.witness)}
                 for k, v in rep.failures().items()}
        return {"kind": kind, "axioms": rep.summary(), "failures": fails}, rep.lca, None
    if kind == "pair":
        rep = classify_pair(obj.algebra, obj.ideal)
        return {"kind": kind, "flags": rep.flags(), "witnesses": rep.witnesses}, rep.lba, None
    if kind == "algebra":
        # the cubic law check is only run on small algebras; bitmask powersets
        # are Boolean by construction
        exhaustive = obj.finite and len(obj) <= EXHAUSTIVE_LAWS
        v = check_boolean_laws(obj) if exhaustive else None
        ok = v is None or bool(v)
        return {"kind": kind, "boolean_laws": ok, "exhaustive": exhaustive,
                "witness": None if ok else v.witness}, ok, None
    if kind == "space":
        X = obj
        rep = {
            "kind": kind, "points": X.n, "opens": len(X.opens),
            "zero_dimensional": topo.is_zero_dimensional(X),
            "semiregular": topo.is_semiregular(X),
            "pi_semiregular": topo.is_pi_semiregular(X),
            "extremally_disconnected": topo.is_extremally_disconnected(X),
        }
        return rep, True, X.to_dot()
    if kind == "map":
        flags = topo.classify_map(obj)
        return {"kind": kind, "flags": flags.names(), "witnesses": flags.witnesses}, flags.continuous, None
    if kind == "morphism":
        m: LbaMorphism = obj
        return {"kind": kind, "lba": m.lba, "plba": m.plba, "witnesses": m.witnesses}, m.lba, None
    raise UsageError(f"nothing to check in a {kind}")


def cmd_dualize(kind, obj):
    if kind == "pair":
        D = du.theta_a(obj.algebra, obj.ideal)
        if isinstance(D, du.CountableDiscrete):
            uf = D.ultrafilters
            rep = {"dual": "countable discrete space",
                   "principal_points": ser.to_jsonable(uf.indices), "cofinite_point": uf.cofinite}
            return rep, True, None
        A = obj.algebra
        rep = {"dual": _space_report(D),
               "points": [[_enc(A, a) for a in A.sort(u)] for u in D.points],
               "witness": {"lambda": [[_enc(A, a), topo.bits(D.lam[a])] for a in A.sort(A.elements)]}}
        return rep, True, D.space.to_dot("dual")
    if kind == "triple":
        D = du.psi_a(obj)
        A = obj.algebra
        rep = {"dual": _space_report(D),
               "points": [[_enc(A, a) for a in A.sort(s)] for s in D.points],
               "witness": D.certificates}
        return rep, True, D.space.to_dot("dual")
    if kind == "space":
        pair = du.theta_t(obj)
        T = du.psi_t(obj)
        rep = {"theta_t": {"clopen": [topo.bits(U) for U in pair.algebra.elements],
                           "compact_clopen": [topo.bits(U) for U in pair.ideal]},
               "psi_t": {"regular_closed": [topo.bits(F) for F in T.algebra.elements],
                         "contact_pairs": len(T.pairs)}}
        return rep, True, obj.to_dot()
    raise UsageError(f"cannot dualize a {kind}")


def cmd_roundtrip(kind, obj):
    if kind == "pair":
        lam = du.counit_lambda(obj.algebra, obj.ideal)
        D = du.theta_a(obj.algebra, obj.ideal)
        t = du.unit_tx(D.space)
        rep = {"lambda_iso": lam.iso, "lambda_certificates": lam.certificates,
               "t_homeomorphism": t.iso, "t_points": list(t.forward.points)}
        return rep, lam.iso and t.iso, None
    if kind == "space":
        t = du.unit_tx(obj)
        rep = {"t_homeomorphism": t.iso, "t_points": list(t.forward.points),
               "certificates": t.certificates}
        return rep, t.iso, None
    if kind == "triple":
        # T -> dual space -> RC contact algebra; an iso back needs a CLCA
        D = du.psi_a(obj)
        back = du.psi_t(D.space)
        iso = find_lca_isomorphism(obj, back)
        rep = {"dual_points": D.space.n, "clca": check_axioms(obj).clca, "lca_isomorphism": iso is not None}
        return rep, iso is not None, None
    raise UsageError(f"no round trip for a {kind}")


def cmd_complete(kind, obj):
    T = _expect(kind, obj, "triple")
    c = cp.lca_completion(T)
    if isinstance(c, cp.SymbolicCompletion):
        return {"original": ser.dump_triple(T), "certificates": dict(c.certificates)}, True, None
    A = T.algebra
    rep = {
        "original": ser.dump_triple(T),
        "dual_space": _space_report(c.dual),
        "completed": {"regular_closed": [topo.bits(F) for F in c.target.algebra.elements],
                      "contact": "nonempty intersection"},
        "embedding": [[_enc(A, a), topo.bits(c.embedding(a))] for a in A.sort(A.elements)],
        "certificates": c.certificates,
    }
    return rep, all(c.certificates.values()), c.dual.space.to_dot("dual")


def cmd_absolute(kind, obj):
    X = _expect(kind, obj, "space")
    w = ab.absolute_space(X)
    rep = {"Y": ser.dump_space(w.Y),
           "rc_iso": [[topo.bits(F), topo.bits(w.rc_iso(F))] for F in w.rc_iso.source.elements],
           "extremally_disconnected": w.extremally_disconnected,
           "certificates": w.certificates}
    return rep, w.extremally_disconnected, w.Y.to_dot("absolute")


def cmd_product(items):
    Ts = [_expect(k, o, "triple") for k, o in items]
    P = product(Ts)
    w = du.product_sum_check(Ts)
    rep = {"product": ser.dump_triple(P) if isinstance(P.algebra, Powerset) else repr(P),
           "sum_homeomorphic": w.iso, "map": list(w.forward.points), "certificates": w.certificates}
    return rep, w.iso, w.forward.target.to_dot("dual")


def cmd_classify_map(kind, obj):
    f = _expect(kind, obj, "map")
    flags = topo.classify_map(f)
    rep = {k: getattr(flags, k) for k in
           ("continuous", "closed", "perfect", "onto", "irreducible", "pi", "quasi_pi", "mr",
            "skeletal", "dense_image")}
    rep["witnesses"] = flags.witnesses
    return rep, flags.continuous, None


def cmd_weight(kind, obj):
    if kind == "triple":
        base = minimal_base(obj)
        A = obj.algebra
        return {"weight": len(base), "base": [_enc(A, b) for b in base]}, True, None
    if kind == "space":
        return {"weight": topo.space_weight(obj), "pi_weight": topo.space_pi_weight(obj),
                "pi_semiregular": topo.is_pi_semiregular(obj)}, True, None
    if kind == "algebra":
        return {"pi_weight": pi_weight_poset(obj)}, True, None
    if kind == "pair":
        return {"pi_weight": pi_weight_poset(obj.algebra)}, True, None
    raise UsageError(f"no weight for a {kind}")


def cmd_invariants(selected):
    results = [checks.run_criterion(i) for i in selected]
    rep = {"criteria": [{"number": r.number, "title": r.title, "ok": r.ok, "cases": r.cases,
                         "detail": r.detail, "witness": r.witness} for r in results]}
    return rep, all(r.ok for r in results), None


# -- output -----------------------------------------------------------------


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v, sort_keys=True)}")
    else:
        lines.append(pad + json.dumps(doc))
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcaduality", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--max-atoms", type=int, default=MAX_ATOMS)
    p.add_argument("--seed", type=int, default=None,
                   help="order in which corpus members are visited")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check", "dualize", "roundtrip", "complete", "absolute", "classify-map", "weight"):
        s = sub.add_parser(name)
        s.add_argument("file")
    s = sub.add_parser("product")
    s.add_argument("files", nargs="+")
    s = sub.add_parser("invariants")
    s.add_argument("--criteria", default="", help="comma-separated numbers, default all")
    return p


SINGLE = {
    "check": cmd_check, "dualize": cmd_dualize, "roundtrip": cmd_roundtrip,
    "complete": cmd_complete, "absolute": cmd_absolute, "classify-map": cmd_classify_map,
    "weight": cmd_weight,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    checks.SEED = args.seed
    try:
        if args.command == "invariants":
            nums = [int(x) for x in args.criteria.split(",") if x.strip()] or \
                list(range(1, len(checks.CRITERIA) + 1))
            if any(not 1 <= n <= len(checks.CRITERIA) for n in nums):
                raise UsageError(f"criteria are numbered 1..{len(checks.CRITERIA)}")
            report, ok, dot = cmd_invariants(nums)
        elif args.command == "product":
            items = [ser.load_file(f, args.max_atoms) for f in args.files]
            report, ok, dot = cmd_product(items)
        else:
            kind, obj = ser.load_file(args.file, args.max_atoms)
            report, ok, dot = SINGLE[args.command](kind, obj)
    except (UsageError, *INPUT_ERRORS) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ArtifactError as e:
        report = {"error": str(e), "witness": e.witness}
        ok, dot = False, None
    report = {"command": args.command, "ok": ok, **ser.to_jsonable(report)}
    if args.format == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    elif args.format == "dot":
        if dot is None:
            print("error: this command has no DOT rendering", file=sys.stderr)
            return 2
        out.write(dot + "\n")
    else:
        out.write(render_text(report) + "\n")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())

