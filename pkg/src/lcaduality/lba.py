"""Local Boolean algebras (A, I), their morphisms, and the functors relating
them to generalized Boolean pseudolattices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

from .ba import (
    FINCOFIN,
    Ideal,
    Powerset,
    StructMap,
    fin_ideal,
    hom_check,
    is_dense_subset,
    is_ideal,
    is_prime_ideal,
    is_principal,
    whole,
)
from .errors import PASS, PreconditionError, Verdict, fail
from . import ideals as idl


@dataclass(frozen=True)
class LocalPair:
    algebra: Any
    ideal: Ideal

    @classmethod
    def full(cls, A) -> "LocalPair":
        return cls(A, whole(A))

    def __repr__(self) -> str:
        return f"LocalPair({self.algebra!r}, {self.ideal!r})"


@dataclass
class PairReport:
    ideal: bool
    dense: bool
    lba: bool
    plba: bool
    zlba: bool
    dzlc: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in ("lba", "plba", "zlba", "dzlc")}


def zlba_verdict(A, I: Ideal) -> Verdict:
    """Every simple ideal of I has a join in A."""
    if not A.finite:
        if I.kind == "fin":
            # Fin(S) for S the evens: every cofinite superset of S can lose one more odd point
            assert not idl.fin_join_exists(idl.EVENS)
            return fail("simple ideal without a join", idl.FinIdeal(idl.EVENS))
        if I.kind in ("all", "principal"):
            return PASS
        return fail("unsupported symbolic ideal", I)
    P = idl.Pseudolattice.from_ideal(A, I)
    for J in idl.simple_ideals(P).elements:
        if idl.least_upper_bound(A, J) is None:
            return fail("simple ideal without a join", J)
    return PASS


def classify_pair(A, I: Ideal) -> PairReport:
    from .contact import dzlc_condition, rho_s

    w = {}
    iv = is_ideal(A, I)
    if not iv:
        w["ideal"] = iv.witness
        return PairReport(False, False, False, False, False, False, w)
    dv = is_dense_subset(A, I)
    if not dv:
        w["dense"] = dv.witness
        return PairReport(True, False, False, False, False, False, w)
    prime = bool(is_prime_ideal(A, I))
    plba = prime or I.is_whole
    zv = zlba_verdict(A, I)
    if not zv:
        w["zlba"] = zv.witness
    dz = dzlc_condition(rho_s(A, I))
    if not dz:
        w["dzlc"] = dz.witness
    return PairReport(True, True, True, plba, bool(zv), bool(dz), w)


def is_lba(A, I) -> bool:
    return classify_pair(A, I).lba


@dataclass(frozen=True)
class PrimeDenseReport:
    degenerate: bool
    dense: bool
    non_principal: bool

    @property
    def agree(self) -> bool:
        return self.dense == self.non_principal


def prime_dense_criterion(A, I: Ideal) -> PrimeDenseReport:
    """For a prime ideal, density and non-principality coincide."""
    if I.is_whole and A.trivial:
        return PrimeDenseReport(True, True, False)
    v = is_prime_ideal(A, I)
    if not v:
        raise PreconditionError(f"ideal is not prime: {v.reason}", v.witness)
    rep = PrimeDenseReport(False, bool(is_dense_subset(A, I)), not is_principal(A, I))
    if not rep.agree:
        raise AssertionError(f"prime ideal breaks the density criterion: {rep}")
    return rep


# -- Boolean homomorphisms between powersets --------------------------------


def hom_from_atom_map(A: Powerset, B: Powerset, g) -> StructMap:
    """phi(a) = atoms j of B with g(j) in a; g maps atom indices of B to those of A."""
    g = tuple(g)
    table = {a: sum(1 << j for j in range(B.n) if a >> g[j] & 1) for a in A.elements}
    f = StructMap.from_table(A, B, table, "phi")
    f.evidence["atom_map"] = g
    return f


def enumerate_homs(A: Powerset, B: Powerset) -> list[StructMap]:
    """Every Boolean homomorphism A -> B."""
    return [hom_from_atom_map(A, B, g) for g in product(range(A.n), repeat=B.n)]


# -- morphisms of local pairs -----------------------------------------------


def _sample(A):
    return A.elements if A.finite else A.sample(3)


@dataclass
class LbaMorphism:
    source: LocalPair
    target: LocalPair
    map: StructMap
    lba: bool = False
    plba: bool = False
    witnesses: dict = field(default_factory=dict)

    @classmethod
    def make(cls, source: LocalPair, target: LocalPair, phi: StructMap) -> "LbaMorphism":
        v = hom_check(phi)
        if not v:
            raise PreconditionError(f"not a Boolean homomorphism: {v.reason}", v.witness)
        m = cls(source, target, phi)
        m.lba, m.plba = _lba_condition(m), _plba_condition(m)
        return m

    def compose(self, other: "LbaMorphism") -> "LbaMorphism":
        """self after other."""
        f, g = self.map, other.map
        phi = StructMap(g.source, f.target, lambda a: f(g(a)), f"{f.name}.{g.name}")
        return LbaMorphism.make(other.source, self.target, phi)


def _lba_condition(m: LbaMorphism) -> bool:
    """Every member of the target ideal lies below the image of a source-ideal member."""
    A, B = m.source.algebra, m.target.algebra
    I, J = m.source.ideal, m.target.ideal
    # symbolic carriers: a wider source sample supplies the candidate bounds
    src = list(I) if A.finite else [a for a in A.sample(4) if a in I]
    tgt = list(J) if B.finite else [b for b in B.sample(3) if b in J]
    for b in tgt:
        if not any(B.le(b, m.map(a)) for a in src):
            m.witnesses["lba"] = b
            return False
    return True


def _plba_condition(m: LbaMorphism) -> bool:
    A, B = m.source.algebra, m.target.algebra
    I, J = m.source.ideal, m.target.ideal
    for a in _sample(A):
        if a in I and m.map(a) not in J:
            m.witnesses["plba"] = a
            return False
    return True


def identity_morphism(p: LocalPair) -> LbaMorphism:
    A = p.algebra
    return LbaMorphism.make(p, p, StructMap(A, A, lambda a: a, "id"))


# -- extending ideal isomorphisms -------------------------------------------


def extend_poset_iso(psi: Callable, src: LocalPair, dst: LocalPair) -> StructMap:
    """Extend an order isomorphism J -> I to a Boolean embedding B -> A.

    `src` = (B, J) must be prime local, `dst` = (A, I) local.
    """
    B, J = src.algebra, src.ideal
    A, I = dst.algebra, dst.ideal
    if not (is_prime_ideal(B, J) or J.is_whole):
        raise PreconditionError("source pair is not prime local", J)
    if B.finite:
        Jm = list(J)
        images = [psi(a) for a in Jm]
        outside = [x for x in images if x not in A]
        if outside:
            raise PreconditionError("psi leaves the target algebra", outside[0])
        if sorted(map(A.key, images)) != sorted(map(A.key, I)) or len(set(images)) != len(Jm):
            raise PreconditionError("psi is not a bijection onto I", images)
        for a in Jm:
            for b in Jm:
                if B.le(a, b) != A.le(psi(a), psi(b)):
                    raise PreconditionError("psi is not an order isomorphism", (a, b))
    else:
        S = [a for a in B.sample(3) if a in J]
        for a in S:
            for b in S:
                if B.le(a, b) != A.le(psi(a), psi(b)):
                    raise PreconditionError("psi is not an order isomorphism", (a, b))

    def phi(a):
        if a in J:
            return psi(a)
        return A.comp(psi(B.comp(a)))

    f = StructMap(B, A, phi, "phi")
    v = hom_check(f)
    if not v:
        raise AssertionError(f"extension is not a homomorphism: {v}")
    if B.finite:
        if len(f.image()) != len(B):
            raise AssertionError("extension is not injective")
        image_alg = idl.b_union(A, I) if not I.is_whole else A
        assert f.image() == frozenset(image_alg.elements)
        if isinstance(B, Powerset) and isinstance(A, Powerset):
            agreeing = [
                h for h in enumerate_homs(B, A)
                if all(h(a) == psi(a) for a in J) and len(h.image()) == len(B)
            ]
            if len(agreeing) != 1 or agreeing[0].table != f.table:
                raise AssertionError("extension is not unique")
            f.evidence["unique_among"] = len(A.atoms) ** len(B.atoms) if B.n else 1
    return f


# -- the functors -----------------------------------------------------------


def functor_ez(B, I: Ideal) -> LocalPair:
    """(B, I) -> (B_B(I), I) for a ZLBA."""
    rep = classify_pair(B, I)
    if not rep.zlba:
        raise PreconditionError("not a ZLBA", rep.witnesses)
    A = idl.b_union(B, I)
    if A.finite:
        return LocalPair(A, Ideal(A, I.members))
    return LocalPair(A, I)


def functor_ep(A, I: Ideal) -> tuple[LocalPair, StructMap]:
    """(A, I) -> (Si(I), e_I(I)) realized on B_{Si(I)}(e_I(I)); also returns e_I."""
    rep = classify_pair(A, I)
    if not rep.plba:
        raise PreconditionError("not a prime local pair", rep.witnesses)
    P = functor_el(A, I)
    e = idl.embed_e(P)
    Si = e.target
    image = e.evidence["image"]
    Bsi = idl.b_union(Si, image) if not image.is_whole else Si
    img = image if not Bsi.finite else Ideal(Bsi, image.members)
    return LocalPair(Bsi, img), e


def functor_el(A, I: Ideal):
    """(A, I) -> I as a pseudolattice."""
    if not A.finite:
        if I.kind == "fin":
            return idl.FIN_N
        raise PreconditionError("unsupported symbolic pair", I)
    return idl.Pseudolattice.from_ideal(A, I)


def functor_eg(P) -> tuple[LocalPair, StructMap]:
    """P -> (B_{Si(P)}(e_P(P)), e_P(P)); also returns e_P."""
    e = idl.embed_e(P)
    Si = e.target
    image = e.evidence["image"]
    if Si.finite:
        if image.is_whole:
            return LocalPair(Si, image), e
        B = idl.b_union(Si, image)
        return LocalPair(B, Ideal(B, image.members)), e
    return LocalPair(Si, image), e


def functor_el_mor(m: LbaMorphism) -> StructMap:
    """Restriction of phi to the ideals."""
    if not m.plba:
        raise PreconditionError("morphism does not map ideal into ideal", m.witnesses)
    P, Q = functor_el(m.source.algebra, m.source.ideal), functor_el(m.target.algebra, m.target.ideal)
    return StructMap(P, Q, m.map.fn, "phi|I")


def functor_ep_mor(m: LbaMorphism) -> StructMap:
    """J1 -> the ideal generated by phi(J1), between simple-ideal algebras (finite case)."""
    if not m.plba:
        raise PreconditionError("morphism does not map ideal into ideal", m.witnesses)
    src, _ = functor_ep(m.source.algebra, m.source.ideal)
    dst, _ = functor_ep(m.target.algebra, m.target.ideal)
    Q = functor_el(m.target.algebra, m.target.ideal)
    if not src.algebra.finite:
        raise PreconditionError("symbolic morphism part not supported")

    def phi_prime(J1):
        out = set()
        for a in J1:
            out |= Q.down(m.map(a))
        return frozenset(out)

    f = StructMap(src.algebra, dst.algebra, phi_prime, "phi'")
    v = hom_check(f)
    if not v:
        raise AssertionError(f"phi' is not a homomorphism: {v}")
    return f


def functor_eg_mor(f: StructMap, P, Q) -> StructMap:
    """A pseudolattice map P -> Q induces the principal-ideal map and its
    Boolean extension between the E^g images."""
    (srcp, eP), (dstp, eQ) = functor_eg(P), functor_eg(Q)

    def on_ideal(J):
        a = P.join_all(J)
        return Q.down(f(a))

    psi_src = srcp.ideal
    B, A = srcp.algebra, dstp.algebra

    def phi(J):
        if J in psi_src:
            return on_ideal(J)
        return A.comp(on_ideal(B.comp(J)))

    g = StructMap(B, A, phi, "phi_e")
    v = hom_check(g)
    if not v:
        raise AssertionError(f"phi_e is not a homomorphism: {v}")
    return g


def functor_ez_mor(m: LbaMorphism) -> StructMap:
    src = functor_ez(m.source.algebra, m.source.ideal)
    dst = functor_ez(m.target.algebra, m.target.ideal)
    g = StructMap(src.algebra, dst.algebra, m.map.fn, "phi|B(I)")
    v = hom_check(g)
    if not v:
        raise AssertionError(f"restriction is not a homomorphism: {v}")
    return g


# -- round trips ------------------------------------------------------------


def _check_pair_iso(f: StructMap, src: LocalPair, dst: LocalPair) -> StructMap:
    v = hom_check(f)
    if not v:
        raise AssertionError(f"not a homomorphism: {v}")
    A, B = src.algebra, dst.algebra
    if A.finite:
        if len(f.image()) != len(A) or f.image() != frozenset(B.elements):
            raise AssertionError("not a bijection")
        if frozenset(f(a) for a in src.ideal) != frozenset(dst.ideal):
            raise AssertionError("ideal not carried onto ideal")
    else:
        for a in A.sample(3):
            if (a in src.ideal) != (f(a) in dst.ideal):
                raise AssertionError("ideal not carried onto ideal", a)
    return f


def ez_ep_roundtrip(A, I: Ideal) -> StructMap:
    """E^z(E^p(A, I)) is isomorphic to (A, I) via a -> principal ideal of a."""
    p, e = functor_ep(A, I)
    if p.algebra.finite:
        q = functor_ez(p.algebra, p.ideal)
    else:
        # the full Si(I) is a ZLBA; only its representable part is materialized
        q = LocalPair(idl.b_union(p.algebra, p.ideal), p.ideal)
    f = extend_poset_iso(e.fn, LocalPair(A, I), q)
    return _check_pair_iso(f, LocalPair(A, I), q)


def ep_ez_roundtrip(B, I: Ideal) -> StructMap:
    """E^p(E^z(B, I)) is isomorphic to (B, I) via the join map Sigma."""
    q = functor_ez(B, I)
    p, _ = functor_ep(q.algebra, q.ideal)
    sigma = idl.sigma_zlba(B, I)
    if B.finite:
        table = {J: sigma(J) for J in p.algebra.elements}
        f = StructMap.from_table(p.algebra, B, table, "Sigma")
        return _check_pair_iso(f, p, LocalPair(B, I))
    raise PreconditionError("symbolic pair is not a ZLBA")


def symbolic_ep_roundtrip() -> tuple[StructMap, StructMap]:
    """On (FinCofin, Fin): e and the index map Fin(S) -> S are mutually inverse
    isomorphisms between the pair and its representable E^p image."""
    pair = LocalPair(FINCOFIN, fin_ideal())
    e_ext = ez_ep_roundtrip(FINCOFIN, fin_ideal())
    p, _ = functor_ep(FINCOFIN, fin_ideal())
    back = StructMap(p.algebra, FINCOFIN, lambda J: J.index, "Sigma")
    _check_pair_iso(back, p, pair)
    for a in FINCOFIN.sample(4):
        assert back(e_ext(a)) == a
    for J in p.algebra.sample(4):
        assert e_ext(back(J)) == J
    return e_ext, back


def el_eg_roundtrip(P) -> StructMap:
    """E^l(E^g(P)) is isomorphic to P via e_P."""
    q, e = functor_eg(P)
    Q = functor_el(q.algebra, q.ideal) if q.algebra.finite else None
    if P.finite:
        table = {a: e(a) for a in P.elements}
        assert sorted(map(q.algebra.key, table.values())) == sorted(map(q.algebra.key, Q.elements))
        for a in P.elements:
            for b in P.elements:
                assert table[P.meet(a, b)] == q.algebra.meet(table[a], table[b])
                assert table[P.join(a, b)] == q.algebra.join(table[a], table[b])
    else:
        for a in P.sample(4):
            assert e(a) in q.ideal and e(a).index == a
    return e


def eg_el_roundtrip(A, I: Ideal) -> StructMap:
    """E^g(E^l(A, I)) is isomorphic to (A, I)."""
    P = functor_el(A, I)
    q, e = functor_eg(P)
    f = extend_poset_iso(e.fn, LocalPair(A, I), q)
    return _check_pair_iso(f, LocalPair(A, I), q)
