"""Absolutes, co-absoluteness, the adjoint pair of a skeletal map, Ponomarev's
embedding conditions, and sigma-disjoint dense families at finite scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import topo
from .ba import (
    FiniteAlgebra,
    StructMap,
    find_isomorphism,
    generated_subalgebra,
    hom_check,
    is_dense_subset,
    pi_weight_poset,
    whole,
)
from .contact import rho_s
from .duality import DualSpace, match_dual_spaces, psi_a, stone_dual
from .errors import InvariantError, PreconditionError
from .topo import FinSpace, SpaceMap


@dataclass
class AbsoluteWitness:
    X: FinSpace
    Y: FinSpace
    dual: DualSpace
    rc_iso: StructMap
    extremally_disconnected: bool
    certificates: dict = field(default_factory=dict)


def absolute_space(X: FinSpace) -> AbsoluteWitness:
    """Y = Stone dual of RC(X), cross-checked against the cluster space of rho_s on RC(X)."""
    RC = topo.rc_algebra(X)
    D = stone_dual(RC)
    Y = D.space
    iso = find_isomorphism(topo.rc_algebra(Y), RC)
    if iso is None or not hom_check(iso):
        raise InvariantError("RC(Y) is not isomorphic to RC(X)", X)
    ed = topo.is_extremally_disconnected(Y)
    if not ed:
        raise InvariantError("absolute is not extremally disconnected", Y)
    via_clusters = psi_a(rho_s(RC, whole(RC)))
    h = match_dual_spaces(D, via_clusters)
    if h is None:
        raise InvariantError("the two absolute constructions disagree", X)
    cert = {"points": Y.n, "rc_atoms": len(RC.atoms), "constructions_agree": True}
    return AbsoluteWitness(X, Y, D, iso, ed, cert)


def coabsolute(X: FinSpace, Y: FinSpace) -> tuple[bool, StructMap | None]:
    """Co-absolute, read as: RC(X) and RC(Y) are isomorphic."""
    iso = topo.rc_isomorphism(X, Y)
    return iso is not None, iso


# -- adjoint pair of a skeletal map -----------------------------------------


@dataclass
class AdjointPair:
    psi: StructMap
    phi: StructMap
    psi_iso: bool
    certificates: dict = field(default_factory=dict)


def adjoint_pair(f: SpaceMap) -> AdjointPair:
    """psi(F) = cl f(F) and phi(G) = cl f^-1(int G) between RC(X) and RC(Y)."""
    flags = topo.classify_map(f)
    if not flags.skeletal:
        raise PreconditionError("map is not skeletal", f.points)
    X, Y = f.source, f.target
    RCX, RCY = topo.rc_algebra(X), topo.rc_algebra(Y)
    psi = StructMap(RCX, RCY, lambda F: Y.closure(f.image(F)), "psi")
    phi = StructMap(RCY, RCX, lambda G: X.closure(f.preimage(Y.interior(G))), "phi")
    for F in RCX.elements:
        if psi(F) not in RCY:
            raise InvariantError("cl f(F) is not regular closed", F)
        if not RCX.le(F, phi(psi(F))):
            raise InvariantError("F is not below phi(psi(F))", F)
    for G in RCY.elements:
        if phi(G) not in RCX:
            raise InvariantError("cl f^-1(int G) is not regular closed", G)
        if not RCY.le(psi(phi(G)), G):
            raise InvariantError("psi(phi(G)) is not below G", G)
    iso = bool(hom_check(psi)) and len(psi.image()) == len(RCX) == len(RCY)
    if flags.mr and not iso:
        raise InvariantError("psi of an MR-map is not an isomorphism", f.points)
    return AdjointPair(psi, phi, iso, {"mr": flags.mr, "skeletal": True})


# -- Ponomarev's conditions -------------------------------------------------


def ponomarev_embedding_check(phi: StructMap) -> dict:
    """Report the three conditions and, when they hold, what follows from them."""
    A, B = phi.source, phi.target
    E = list(A.elements)
    report: dict[str, Any] = {}
    joins = next(((a, b) for a in E for b in E if phi(A.join(a, b)) != B.join(phi(a), phi(b))), None)
    report["joins"] = joins is None
    bounds = phi(A.zero) == B.zero and [a for a in E if phi(a) == B.one] == [A.one]
    report["bounds"] = bool(bounds)
    dense = is_dense_subset(B, {phi(a) for a in E})
    report["dense"] = bool(dense)
    if not dense:
        report["witness"] = dense.witness
    elif joins is not None:
        report["witness"] = joins
    if not (report["joins"] and report["bounds"] and report["dense"]):
        report["conclusion"] = None
        return report
    if not hom_check(phi):
        raise InvariantError("conditions hold but phi is not a homomorphism", phi.name)
    if len(phi.image()) != len(A):
        raise InvariantError("conditions hold but phi is not injective", phi.name)
    pw = (pi_weight_poset(A), pi_weight_poset(B))
    if pw[0] != pw[1]:
        raise InvariantError("conditions hold but pi-weights differ", pw)
    report["pi_weights"] = pw
    # a finite algebra is complete, so phi must be onto
    if len(phi.image()) != len(B):
        raise InvariantError("complete source but phi is not onto", phi.name)
    report["conclusion"] = "isomorphism"
    return report


# -- sigma-disjoint families ------------------------------------------------


def sigma_disjoint_dense(A: FiniteAlgebra) -> list[tuple]:
    """A dense subset split into levels of pairwise disjoint elements: the atoms."""
    if A.trivial:
        return []
    levels = [tuple(A.atoms)]
    _check_levels(levels, lambda a, b: A.meet(a, b) == A.zero)
    if not is_dense_subset(A, levels[0]):
        raise InvariantError("atoms are not dense", A)
    return levels


def sigma_disjoint_pi_base(X: FinSpace) -> list[tuple]:
    """The minimal nonempty open sets: pairwise disjoint and a pi-base."""
    if X.n == 0:
        return []
    nonempty = [U for U in X.open_list if U]
    minimal = tuple(U for U in nonempty if not any(V != U and V & ~U == 0 for V in nonempty))
    levels = [minimal]
    _check_levels(levels, lambda U, V: U & V == 0)
    if not topo.is_pi_base(X, minimal):
        raise InvariantError("minimal open sets are not a pi-base", X)
    return levels


def _check_levels(levels, disjoint):
    for level in levels:
        for i, a in enumerate(level):
            for b in level[i + 1:]:
                if not disjoint(a, b):
                    raise InvariantError("level is not pairwise disjoint", (a, b))


@dataclass
class DenseSubsetReport:
    tau: int
    exists: bool
    dense: tuple = ()
    subalgebra: Any = None
    space: FinSpace | None = None
    rc_iso: StructMap | None = None
    reason: str = ""


def dense_subset_criterion(A: FiniteAlgebra, tau: int) -> DenseSubsetReport:
    """Find a dense subset of size tau, its generated subalgebra, the Stone dual X
    of that subalgebra, and an isomorphism RC(X) -> A."""
    pw = pi_weight_poset(A)
    if tau < pw:
        return DenseSubsetReport(tau, False, reason=f"pi-weight is {pw}")
    if tau > len(A):
        return DenseSubsetReport(tau, False, reason=f"A has only {len(A)} elements")
    S = list(A.atoms)
    for a in A.elements:
        if len(S) >= tau:
            break
        if a not in S:
            S.append(a)
    S = tuple(S[:tau])
    if not is_dense_subset(A, S):
        raise InvariantError("enlarged atom set is not dense", S)
    sub = generated_subalgebra(A, S)
    X = stone_dual(sub).space
    iso = find_isomorphism(topo.rc_algebra(X), A)
    if iso is None or not hom_check(iso):
        raise InvariantError("RC(X) is not isomorphic to A", S)
    return DenseSubsetReport(tau, True, S, sub, X, iso)
