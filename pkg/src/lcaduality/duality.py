"""Dual spaces of local Boolean algebras and local contact algebras, the
algebras of a space, and the unit/counit comparisons between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from . import topo
from .ba import (
    FC,
    Ideal,
    StructMap,
    SymbolicUltrafilters,
    bounded_ultrafilters,
    hom_check,
)
from .contact import ContactTriple, bounded_clusters, product, rho_s
from .errors import InvariantError, PreconditionError, UnsupportedError
from .lba import LbaMorphism, LocalPair, classify_pair
from .topo import FinSpace, SpaceMap, mask


@dataclass(frozen=True, eq=False)
class DualSpace:
    """A finite space whose points are filters or clusters of an algebra.

    `lam[a]` is the bitmask of points containing `a`.
    """

    space: FinSpace
    points: tuple
    lam: dict
    certificates: dict = field(default_factory=dict)

    def index(self, point) -> int:
        return self.points.index(point)


@dataclass(frozen=True)
class CountableDiscrete:
    """The dual of (FinCofin, I): a discrete space on the listed ultrafilters."""

    ultrafilters: SymbolicUltrafilters

    def isolating_set(self, n: int) -> FC:
        """The basic open set containing only the point n."""
        if not self.ultrafilters.has_principal(n):
            raise PreconditionError("no such point", n)
        return FC.of(n)

    def lam(self, a: FC, n: int) -> bool:
        return n in a


def _generate(n: int, family, close_union=True) -> frozenset:
    """Smallest family containing `family`, 0 and the full set, closed under
    intersections and (optionally) unions."""
    full = (1 << n) - 1
    S = set(family) | {0, full}
    grew = True
    while grew:
        new = {U & V for U in S for V in S}
        if close_union:
            new |= {U | V for U in S for V in S}
        new -= S
        grew = bool(new)
        S |= new
    return frozenset(S)


# -- spaces to pairs --------------------------------------------------------


def theta_t(X: FinSpace) -> LocalPair:
    """(CO(X), CK(X)); every clopen subset of a finite space is compact."""
    CO = topo.co_algebra(X)
    pair = LocalPair(CO, Ideal(CO, frozenset(topo.ck_family(X))))
    rep = classify_pair(pair.algebra, pair.ideal)
    if not rep.zlba:
        raise InvariantError("clopen algebra of a space is not a ZLBA", rep.witnesses)
    return pair


def theta_t_mor(f: SpaceMap) -> LbaMorphism:
    """G -> preimage of G, from Theta^t(Y) to Theta^t(X)."""
    if not f.continuous:
        raise PreconditionError("map is not continuous", f.points)
    src, dst = theta_t(f.target), theta_t(f.source)
    phi = StructMap(src.algebra, dst.algebra, f.preimage, "f^-1")
    m = LbaMorphism.make(src, dst, phi)
    if not m.lba:
        raise InvariantError("preimage map fails the local condition", m.witnesses)
    if topo.classify_map(f).perfect and not m.plba:
        raise InvariantError("perfect map whose preimage map is not proper", m.witnesses)
    return m


# -- pairs to spaces --------------------------------------------------------


def theta_a(B, I: Ideal):
    """Bounded ultrafilters with the topology generated by {lam(a) : a in I}."""
    rep = classify_pair(B, I)
    if not rep.lba:
        raise PreconditionError("not a local Boolean algebra", rep.witnesses)
    if not B.finite:
        return CountableDiscrete(bounded_ultrafilters(B, I))
    pts = tuple(bounded_ultrafilters(B, I))
    lam = {a: mask(i for i, u in enumerate(pts) if a in u) for a in B.elements}
    opens = _generate(len(pts), [lam[a] for a in I])
    return DualSpace(FinSpace(len(pts), opens), pts, lam)


def theta_a_mor(m: LbaMorphism) -> SpaceMap:
    """u' -> preimage of u' under phi, from Theta^a(target) to Theta^a(source)."""
    A, B = m.source.algebra, m.target.algebra
    if not (A.finite and B.finite):
        raise UnsupportedError("morphism duals are computed for finite pairs")
    if not m.lba:
        raise PreconditionError("morphism fails the local condition", m.witnesses)
    XA = theta_a(A, m.source.ideal)
    XB = theta_a(B, m.target.ideal)
    phi = m.map
    pts = []
    for u in XB.points:
        pre = frozenset(a for a in A.elements if phi(a) in u)
        if pre not in XA.points:
            raise InvariantError("preimage of a bounded ultrafilter is not one", pre)
        pts.append(XA.index(pre))
    f = SpaceMap(XB.space, XA.space, tuple(pts))
    # continuity witness: f(lam_B(phi(a))) is inside lam_A(a)
    for a in m.source.ideal:
        if f.image(XB.lam[phi(a)]) & ~XA.lam[a]:
            raise InvariantError("image of a basic set escapes", a)
    if not f.continuous:
        raise InvariantError("dual map is not continuous", f.points)
    return f


# -- unit and counit --------------------------------------------------------


@dataclass
class DualityWitness:
    forward: Any
    backward: Any = None
    iso: bool = False
    certificates: dict = field(default_factory=dict)


def unit_tx(X: FinSpace) -> DualityWitness:
    """x -> the clopen sets containing x, from X to Theta^a(Theta^t(X))."""
    pair = theta_t(X)
    D = theta_a(pair.algebra, pair.ideal)
    pts = []
    for x in range(X.n):
        u = frozenset(G for G in pair.algebra.elements if G >> x & 1)
        pts.append(D.index(u))
    t = SpaceMap(X, D.space, tuple(pts))
    iso = topo.is_homeomorphism(t)
    cert = {"continuous": t.continuous, "onto": t.image(X.full) == D.space.full,
            "injective": len(set(pts)) == X.n}
    back = None
    if iso:
        inv = [0] * X.n
        for x, p in enumerate(pts):
            inv[p] = x
        back = SpaceMap(D.space, X, tuple(inv))
    return DualityWitness(t, back, iso, cert)


def counit_lambda(B, I: Ideal) -> DualityWitness:
    """b -> lam(b), from (B, I) to Theta^t(Theta^a(B, I))."""
    D = theta_a(B, I)
    CO = topo.co_algebra(D.space)
    lam = StructMap(B, CO, lambda b: D.lam[b], "lambda")
    v = hom_check(lam)
    if not v:
        raise InvariantError(f"lambda is not a homomorphism: {v}")
    image = lam.image()
    ck = set(topo.ck_family(D.space))
    lam_I = {D.lam[a] for a in I}
    cert = {"lambda(I)=CK": lam_I == ck, "injective": len(image) == len(B)}
    missing = [G for G in CO.elements if G not in image]
    if missing:
        cert["missing_clopen"] = missing[0]
    if not cert["lambda(I)=CK"]:
        raise InvariantError("lambda(I) differs from CK", sorted(ck ^ lam_I))
    iso = not missing and cert["injective"]
    zlba = classify_pair(B, I).zlba
    if iso != zlba:
        raise InvariantError("counit is an isomorphism exactly for ZLBAs", (iso, zlba))
    return DualityWitness(lam, None, iso, cert)


def naturality_check(f: SpaceMap) -> bool:
    """The double dual of f composed with t_X equals t_Y composed with f."""
    tX, tY = unit_tx(f.source).forward, unit_tx(f.target).forward
    ff = theta_a_mor(theta_t_mor(f))
    return all(ff.points[tX.points[x]] == tY.points[f.points[x]] for x in range(f.source.n))


# -- contact algebras and spaces --------------------------------------------


def psi_t(X: FinSpace) -> ContactTriple:
    """(RC(X), nonempty intersection, CR(X))."""
    RC = topo.rc_algebra(X)
    return ContactTriple(RC, lambda F, G: F & G != 0,
                         Ideal(RC, frozenset(topo.cr_family(X))), "rho_X")


def psi_a(T: ContactTriple) -> DualSpace:
    """Bounded clusters; closed sets generated by {lam(a) : a in A}."""
    if not T.finite:
        raise UnsupportedError("cluster spaces are computed for finite triples only")
    A = T.algebra
    cl = bounded_clusters(T)
    pts = tuple(c.members for c in cl)
    n = len(pts)
    full = (1 << n) - 1
    lam = {a: mask(i for i, s in enumerate(pts) if a in s) for a in A.elements}
    closed = _generate(n, lam.values())
    X = FinSpace(n, frozenset(full ^ F for F in closed))
    base = [X.interior(lam[a]) for a in T.bounded]
    cert = {"open_base": topo.is_base(X, base)}
    if not cert["open_base"]:
        raise InvariantError("interiors of bounded lam-sets do not form a base", T)
    return DualSpace(X, pts, lam, cert)


def stone_dual(B) -> DualSpace:
    """Prime filters, found as principal filters that are prime, with the
    topology generated by {F : a in F}."""
    if not B.finite:
        raise UnsupportedError("Stone duals are computed for finite algebras")
    pts = []
    for a in B.elements:
        F = B.up(a)
        if B.zero in F:
            continue
        prime = all(
            x in F or y in F
            for x in B.elements for y in B.elements if B.join(x, y) in F
        )
        if prime:
            pts.append(F)
    pts = tuple(pts)
    lam = {a: mask(i for i, F in enumerate(pts) if a in F) for a in B.elements}
    opens = _generate(len(pts), lam.values())
    return DualSpace(FinSpace(len(pts), opens), pts, lam)


def match_dual_spaces(D1: DualSpace, D2: DualSpace) -> SpaceMap | None:
    """Identify points that are the same filter; a homeomorphism if possible."""
    if sorted(map(sorted_key, D1.points)) != sorted(map(sorted_key, D2.points)):
        return None
    f = SpaceMap(D1.space, D2.space, tuple(D2.index(p) for p in D1.points))
    return f if topo.is_homeomorphism(f) else None


def sorted_key(s) -> tuple:
    return tuple(sorted(map(repr, s)))


# -- perfect maps -----------------------------------------------------------


def perfect_duality_check(m: LbaMorphism) -> dict:
    """For a proper morphism: the dual map is perfect and lam_B(phi(a)) is the
    preimage of lam_A(a) for every a in the source ideal."""
    if not m.plba:
        raise PreconditionError("morphism does not map ideal into ideal", m.witnesses.get("plba"))
    f = theta_a_mor(m)
    flags = topo.classify_map(f)
    if not flags.perfect:
        raise InvariantError("dual of a proper morphism is not perfect", f.points)
    XA = theta_a(m.source.algebra, m.source.ideal)
    XB = theta_a(m.target.algebra, m.target.ideal)
    for a in m.source.ideal:
        if XB.lam[m.map(a)] != f.preimage(XA.lam[a]):
            raise InvariantError("lam(phi(a)) differs from f^-1(lam(a))", a)
    return {"perfect": True, "checked": len(m.source.ideal), "map": f.points}


# -- products and sums ------------------------------------------------------


def product_sum_check(Ts: Sequence[ContactTriple]) -> DualityWitness:
    """The dual of a product is the topological sum of the duals."""
    Ts = list(Ts)
    P = product(Ts)
    DP = psi_a(P)
    duals = [psi_a(T) for T in Ts]
    S = topo.sum_space([D.space for D in duals])
    pts = []
    for g, D in enumerate(duals):
        for tau in D.points:
            sigma = frozenset(a for a in P.algebra.elements if P.coords(a)[g] in tau)
            if sigma not in DP.points:
                raise InvariantError("summand point is not a cluster of the product", (g, tau))
            pts.append(DP.index(sigma))
    f = SpaceMap(S, DP.space, tuple(pts))
    iso = topo.is_homeomorphism(f)
    return DualityWitness(f, None, iso, {"points": S.n, "factors": len(Ts)})


def rho_s_dual_matches_theta(B, I: Ideal) -> bool:
    """psi_a of the overlap triple is the bounded-ultrafilter space."""
    D1 = psi_a(rho_s(B, I))
    D2 = theta_a(B, I)
    return match_dual_spaces(D1, D2) is not None


def discrete_round_trip(X: FinSpace) -> SpaceMap | None:
    D = psi_a(psi_t(X))
    return topo.find_homeomorphism(D.space, X)

