"""JSON structure files.

    algebra   {"kind": "powerset", "atoms": 3} or {"kind": "fincofin"}
    element   sorted atom array, or {"cofinite_of": [...]} over fincofin
    ideal     {"members": [...]}, {"generators": [...]} or {"named": "fin" | "all"}
    pair      {"algebra": ..., "ideal": ...}
    triple    {"algebra": ..., "rho": ..., "bounded": ...}; rho is
              {"rho_pairs": [[a, b], ...]}, {"atom_relation": [[i, j], ...]} or "overlap"
    space     {"points": n, "opens": [[...], ...]}
    map       {"source": space, "target": space, "points": [...]}
    morphism  {"source": pair, "target": pair, "atom_map": [...]}

The kind of a document is read off its keys.
"""

from __future__ import annotations

import json
from typing import Any

from .ba import (
    FC,
    FinCofin,
    Ideal,
    Powerset,
    StructMap,
    fin_ideal,
    ideal_generated,
    ideal_of,
    make_algebra,
    whole,
)
from .contact import ContactTriple, from_atom_relation, from_pairs, rho_s
from .errors import StructureError, Verdict
from .lba import LbaMorphism, LocalPair, hom_from_atom_map
from .topo import FinSpace, SpaceMap, bits, mask


# -- reading ----------------------------------------------------------------


def load_algebra(doc, max_atoms: int | None = None):
    if max_atoms is None:
        return make_algebra(doc)
    return make_algebra(doc, max_atoms)


def load_element(A, doc):
    if isinstance(A, FinCofin):
        if isinstance(doc, dict):
            if set(doc) != {"cofinite_of"}:
                raise StructureError("unknown element form", doc)
            return A.wrap(FC.cofinite_of(*map(int, doc["cofinite_of"])))
        return A.wrap(FC.of(*map(int, doc)))
    if not isinstance(doc, list):
        raise StructureError("finite elements are atom arrays", doc)
    return A.require(Powerset.element(int(i) for i in doc))


def load_ideal(A, doc) -> Ideal:
    if doc is None or doc == "all":
        return whole(A)
    if doc == "fin":
        doc = {"named": "fin"}
    if not isinstance(doc, dict):
        raise StructureError("unknown ideal form", doc)
    if "named" in doc:
        if doc["named"] == "all":
            return whole(A)
        if doc["named"] == "fin" and isinstance(A, FinCofin):
            return fin_ideal(A)
        raise StructureError("unknown named ideal", doc["named"])
    if "generators" in doc:
        return ideal_generated(A, [load_element(A, g) for g in doc["generators"]])
    if "members" in doc:
        return ideal_of(A, [load_element(A, m) for m in doc["members"]])
    raise StructureError("ideal needs members, generators or named", doc)


def load_pair(doc, max_atoms=None) -> LocalPair:
    A = load_algebra(doc["algebra"], max_atoms)
    return LocalPair(A, load_ideal(A, doc.get("ideal")))


def load_triple(doc, max_atoms=None) -> ContactTriple:
    A = load_algebra(doc["algebra"], max_atoms)
    bounded = load_ideal(A, doc.get("bounded"))
    rho = doc.get("rho", "overlap")
    if rho == "overlap":
        return rho_s(A, bounded)
    if not isinstance(rho, dict):
        raise StructureError("unknown contact form", rho)
    if "atom_relation" in rho:
        return from_atom_relation(A, rho["atom_relation"], bounded)
    if "rho_pairs" in rho:
        pairs = [(load_element(A, a), load_element(A, b)) for a, b in rho["rho_pairs"]]
        return from_pairs(A, pairs, bounded)
    raise StructureError("contact needs rho_pairs, atom_relation or overlap", rho)


def load_space(doc) -> FinSpace:
    return FinSpace.make(int(doc["points"]), [mask(U) for U in doc["opens"]])


def load_map(doc) -> SpaceMap:
    return SpaceMap(load_space(doc["source"]), load_space(doc["target"]),
                    tuple(int(p) for p in doc["points"]))


def load_morphism(doc, max_atoms=None) -> LbaMorphism:
    src, dst = load_pair(doc["source"], max_atoms), load_pair(doc["target"], max_atoms)
    if not (isinstance(src.algebra, Powerset) and isinstance(dst.algebra, Powerset)):
        raise StructureError("morphism files need powerset carriers", doc)
    g = [int(i) for i in doc["atom_map"]]
    if len(g) != dst.algebra.n or any(not 0 <= i < src.algebra.n for i in g):
        raise StructureError("atom_map must send each target atom to a source atom", g)
    return LbaMorphism.make(src, dst, hom_from_atom_map(src.algebra, dst.algebra, g))


def kind_of(doc) -> str:
    if not isinstance(doc, dict):
        raise StructureError("a structure file holds a JSON object", type(doc).__name__)
    if "atom_map" in doc:
        return "morphism"
    if "source" in doc and "points" in doc:
        return "map"
    if "opens" in doc:
        return "space"
    if "rho" in doc or "bounded" in doc:
        return "triple"
    if "algebra" in doc:
        return "pair"
    if "kind" in doc:
        return "algebra"
    raise StructureError("cannot tell what this document describes", sorted(doc))


def load(doc, max_atoms=None) -> tuple[str, Any]:
    k = kind_of(doc)
    if k == "morphism":
        return k, load_morphism(doc, max_atoms)
    if k == "map":
        return k, load_map(doc)
    if k == "space":
        return k, load_space(doc)
    if k == "triple":
        return k, load_triple(doc, max_atoms)
    if k == "pair":
        return k, load_pair(doc, max_atoms)
    return k, load_algebra(doc, max_atoms)


def load_file(path, max_atoms=None) -> tuple[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise StructureError(f"invalid JSON: {e}") from e
    return load(doc, max_atoms)


# -- writing ----------------------------------------------------------------


def dump_algebra(A) -> dict:
    if isinstance(A, FinCofin):
        return {"kind": "fincofin"}
    if isinstance(A, Powerset):
        return {"kind": "powerset", "atoms": A.n}
    raise StructureError("only powerset and fincofin carriers serialize", repr(A))


def dump_element(A, a):
    if isinstance(A, FinCofin):
        fc = A.unwrap(a)
        xs = sorted(fc.atoms)
        return {"cofinite_of": xs} if fc.cofinite else xs
    return Powerset.indices(a)


def dump_ideal(I: Ideal) -> dict:
    A = I.carrier
    if I.members is None:
        if I.kind == "principal":
            return {"generators": [dump_element(A, I.generator)]}
        return {"named": I.kind}
    return {"members": [dump_element(A, a) for a in A.sort(I.members)]}


def dump_pair(p: LocalPair) -> dict:
    return {"algebra": dump_algebra(p.algebra), "ideal": dump_ideal(p.ideal)}


def dump_triple(T: ContactTriple) -> dict:
    A = T.algebra
    if not A.finite:
        rho: Any = "overlap"
    else:
        R = T.atom_relation
        generated = from_atom_relation(A, R, T.bounded, close=False)
        # loading closes atom relations, so only closed ones round-trip that way
        closed = all((j, i) in R for i, j in R) and all((i, i) in R for i in range(len(A.atoms)))
        if closed and all(generated.rho(a, b) == T.rho(a, b) for a in A.elements for b in A.elements):
            rho = {"atom_relation": [list(p) for p in sorted(R)]}
        else:
            rho = {"rho_pairs": [[dump_element(A, a), dump_element(A, b)]
                                 for a, b in sorted(T.pairs, key=lambda p: (A.key(p[0]), A.key(p[1])))]}
    return {"algebra": dump_algebra(A), "rho": rho, "bounded": dump_ideal(T.bounded)}


def dump_space(X: FinSpace) -> dict:
    return {"points": X.n, "opens": [bits(U) for U in X.open_list]}


def dump_map(f: SpaceMap) -> dict:
    return {"source": dump_space(f.source), "target": dump_space(f.target), "points": list(f.points)}


def dump_table(f: StructMap, encode=lambda x: x) -> list:
    """[[a, f(a)], ...] in the source's canonical order."""
    A = f.source
    return [[encode(a), encode(f(a))] for a in A.sort(A.elements)]


def to_jsonable(x):
    """Best-effort conversion of witnesses and reports."""
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, Verdict):
        return {"ok": x.ok, "reason": x.reason, "witness": to_jsonable(x.witness)}
    if isinstance(x, FC):
        return {"cofinite_of": sorted(x.atoms)} if x.cofinite else sorted(x.atoms)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        items = [to_jsonable(v) for v in x]
        return sorted(items, key=json.dumps)
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return repr(x)


def dumps(doc) -> str:
    return json.dumps(to_jsonable(doc), indent=2, sort_keys=True)
