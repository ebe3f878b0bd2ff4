"""Ideal lattices of distributive {0}-pseudolattices.

Finite pseudolattices are explicit; the finite subsets of the naturals
(`FIN_N`) are handled symbolically, with an ideal Fin(S) described by its
index set S.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Any, Hashable, Iterable

from . import topo
from .ba import (
    FC,
    FINCOFIN,
    FiniteAlgebra,
    FinCofin,
    Ideal,
    StructMap,
    fin_ideal,
    hom_check,
    is_dense_subset,
    is_ideal,
)
from .errors import (
    PASS,
    PreconditionError,
    RepresentabilityError,
    StructureError,
    Verdict,
    fail,
)


class Pseudolattice:
    """A finite distributive lattice-like poset with 0, meets and nonempty joins."""

    finite = True

    def __init__(self, elements: Iterable[Hashable], meet, join, zero, name="P", host=None):
        self.elements = tuple(elements)
        self._index = {a: i for i, a in enumerate(self.elements)}
        self.meet = meet
        self.join = join
        self.zero = zero
        self.name = name
        self.host = host
        if zero not in self._index:
            raise StructureError("pseudolattice must contain its zero")

    @classmethod
    def from_algebra(cls, A: FiniteAlgebra) -> "Pseudolattice":
        return cls(A.elements, A.meet, A.join, A.zero, A.name, host=A)

    @classmethod
    def from_ideal(cls, A: FiniteAlgebra, I: Ideal) -> "Pseudolattice":
        return cls(A.sort(I.members), A.meet, A.join, A.zero, f"I<{A.name}", host=A)

    @classmethod
    def chain(cls, k: int) -> "Pseudolattice":
        """0 < 1 < ... < k-1."""
        return cls(range(k), min, max, 0, f"chain{k}")

    def le(self, a, b) -> bool:
        return self.meet(a, b) == a

    def key(self, a) -> int:
        return self._index[a]

    def sort(self, items) -> list:
        return sorted(items, key=self.key)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        try:
            return a in self._index
        except TypeError:
            return False

    def __repr__(self) -> str:
        return f"<Pseudolattice {self.name} |P|={len(self)}>"

    def down(self, a) -> frozenset:
        return frozenset(b for b in self.elements if self.le(b, a))

    def join_all(self, items):
        return reduce(self.join, items, self.zero)

    @cached_property
    def top(self):
        return self.join_all(self.elements)


class FinN:
    """The finite subsets of the naturals under intersection and union."""

    finite = False
    name = "Fin(N)"
    zero = FC()

    @staticmethod
    def meet(a: FC, b: FC) -> FC:
        return FC(a.atoms & b.atoms)

    @staticmethod
    def join(a: FC, b: FC) -> FC:
        return FC(a.atoms | b.atoms)

    def le(self, a: FC, b: FC) -> bool:
        return a.atoms <= b.atoms

    def __contains__(self, a) -> bool:
        return isinstance(a, FC) and not a.cofinite

    def sample(self, width: int = 4) -> tuple:
        return tuple(a for a in FINCOFIN.sample(width) if not a.cofinite)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinN)

    def __hash__(self) -> int:
        return hash(FinN)

    def __repr__(self) -> str:
        return "<Fin(N)>"


FIN_N = FinN()


@dataclass(frozen=True)
class PeriodicSet:
    """Naturals congruent to one of `residues` modulo `modulus`; e.g. the evens."""

    modulus: int
    residues: frozenset

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.residues

    @property
    def finite_or_cofinite(self) -> bool:
        return not self.residues or len(self.residues) == self.modulus

    def __repr__(self) -> str:
        return f"{{n : n mod {self.modulus} in {sorted(self.residues)}}}"


EVENS = PeriodicSet(2, frozenset({0}))


@dataclass(frozen=True)
class FinIdeal:
    """The ideal Fin(S) of finite subsets of S."""

    index: Any  # FC or PeriodicSet

    def __contains__(self, a: FC) -> bool:
        return not a.cofinite and all(n in self.index for n in a.atoms)

    @property
    def representable(self) -> bool:
        return isinstance(self.index, FC)

    def __repr__(self) -> str:
        return f"Fin({self.index!r})"


class RepSi(FinCofin):
    """The simple ideals Fin(S) of Fin(N) with S finite or cofinite.

    Fin(S) meets, joins and complements exactly as S does in FinCofin.
    """

    name = "Si(Fin(N))_rep"

    def wrap(self, fc: FC) -> FinIdeal:
        return FinIdeal(fc)

    def unwrap(self, a: FinIdeal) -> FC:
        if not isinstance(a, FinIdeal):
            raise TypeError(a)
        if not a.representable:
            raise RepresentabilityError(f"{a!r} is not representable", a)
        return a.index


REP_SI = RepSi()


# -- ideals of a finite pseudolattice ---------------------------------------


def principal_ideal(P, a) -> frozenset | FinIdeal:
    if P is FIN_N or isinstance(P, FinN):
        return FinIdeal(FC(a.atoms))
    return P.down(a)


def down_sets(P: Pseudolattice) -> list[frozenset]:
    """Every down-set of P, by include/exclude along a linear extension."""
    order = sorted(P.elements, key=lambda a: (len(P.down(a)), P.key(a)))
    below = {a: [b for b in P.elements if b != a and P.le(b, a)] for a in order}
    out = []

    def rec(i, chosen):
        if i == len(order):
            out.append(frozenset(chosen))
            return
        a = order[i]
        rec(i + 1, chosen)
        if all(b in chosen for b in below[a]):
            chosen.add(a)
            rec(i + 1, chosen)
            chosen.discard(a)

    rec(0, set())
    return out


def is_pl_ideal(P: Pseudolattice, J: frozenset) -> Verdict:
    if P.zero not in J:
        return fail("does not contain 0", P.zero)
    for a in P.sort(J):
        for b in P.elements:
            if P.le(b, a) and b not in J:
                return fail("not downward closed", (a, b))
        for b in P.sort(J):
            if P.join(a, b) not in J:
                return fail("not closed under join", (a, b))
    return PASS


def all_ideals(P: Pseudolattice) -> list[frozenset]:
    """Every ideal, found by exhausting down-sets; canonical order by size then members."""
    ids = [J for J in down_sets(P) if is_pl_ideal(P, J)]
    return sorted(ids, key=lambda J: (len(J), sorted(P.key(a) for a in J)))


def _require_ideal(P, J):
    if isinstance(P, FinN):
        if not isinstance(J, FinIdeal):
            raise StructureError("ideals of Fin(N) are given as Fin(S)", J)
        return J
    J = frozenset(J.members if isinstance(J, Ideal) else J)
    v = is_pl_ideal(P, J)
    if not v:
        raise StructureError(f"not an ideal: {v.reason}", v.witness)
    return J


def pseudocomplement(P, J):
    """Largest ideal meeting J only in 0."""
    J = _require_ideal(P, J)
    if isinstance(P, FinN):
        idx = J.index
        if isinstance(idx, FC):
            return FinIdeal(FC(idx.atoms, not idx.cofinite))
        return FinIdeal(PeriodicSet(idx.modulus, frozenset(range(idx.modulus)) - idx.residues))
    return frozenset(a for a in P.elements if all(P.meet(a, b) == P.zero for b in J))


def ideal_join(P, J1, J2):
    if isinstance(P, FinN):
        a, b = J1.index, J2.index
        if isinstance(a, FC) and isinstance(b, FC):
            return FinIdeal(FINCOFIN.join(a, b))
        raise RepresentabilityError("join of periodic index sets not supported", (J1, J2))
    return frozenset(
        c for c in P.elements if any(P.le(c, P.join(a, b)) for a in J1 for b in J2)
    )


def ideal_meet(P, J1, J2):
    if isinstance(P, FinN):
        return FinIdeal(FINCOFIN.meet(J1.index, J2.index))
    return frozenset(J1) & frozenset(J2)


def is_simple(P, J) -> bool:
    J = _require_ideal(P, J)
    if isinstance(P, FinN):
        if not J.representable:
            # Fin(S) and Fin(N\S) together generate every finite set
            if not isinstance(J.index, PeriodicSet):
                raise RepresentabilityError("unsupported index set", J)
            return True
        return ideal_join(P, J, pseudocomplement(P, J)) == FinIdeal(FC(frozenset(), True))
    return ideal_join(P, J, pseudocomplement(P, J)) == frozenset(P.elements)


def simple_ideals(P) -> FiniteAlgebra | RepSi:
    """Si(P) as a Boolean algebra (the representable part for Fin(N))."""
    if isinstance(P, FinN):
        return REP_SI
    members = [J for J in all_ideals(P) if is_simple(P, J)]
    return FiniteAlgebra(
        members,
        lambda a, b: ideal_join(P, a, b),
        lambda a, b: a & b,
        lambda a: pseudocomplement(P, a),
        lambda a, b: a <= b,
        name=f"Si({P.name})",
    )


# -- GBPL -------------------------------------------------------------------


def _gbpl_interval(P: Pseudolattice) -> Verdict:
    for c in P.elements:
        for a in P.elements:
            if not P.le(a, c):
                continue
            for b in P.elements:
                if not P.le(b, a):
                    continue
                if not any(P.meet(a, x) == b and P.join(a, x) == c for x in P.elements):
                    return fail("no relative complement", {"a": a, "interval": (b, c)})
    return PASS


def _gbpl_principal(P: Pseudolattice) -> Verdict:
    for a in P.elements:
        if not is_simple(P, P.down(a)):
            return fail("principal ideal is not simple", a)
    return PASS


def is_gbpl(P) -> Verdict:
    """Relative complements in every interval; cross-checked against
    simplicity of every principal ideal."""
    if isinstance(P, FinN):
        # b | (c - a) complements a in [b, c]
        S = P.sample(3)
        for a, b, c in product(S, S, S):
            if b.atoms <= a.atoms <= c.atoms:
                x = FC(b.atoms | (c.atoms - a.atoms))
                assert P.meet(a, x) == b and P.join(a, x) == c
        for a in S:
            assert is_simple(P, principal_ideal(P, a))
        return PASS
    v1 = _gbpl_interval(P)
    v2 = _gbpl_principal(P)
    if bool(v1) != bool(v2):
        raise AssertionError(f"GBPL routes disagree on {P!r}: {v1} vs {v2}")
    return v1


# -- the embedding e_P and B_A(I) --------------------------------------------


def embed_e(P) -> StructMap:
    """a -> the principal ideal of a, into Si(P)."""
    v = is_gbpl(P)
    if not v:
        raise PreconditionError("not a generalized Boolean pseudolattice", v.witness)
    Si = simple_ideals(P)
    e = StructMap(P, Si, lambda a: principal_ideal(P, a), "e")
    if isinstance(P, FinN):
        S = P.sample(3)
        for a in S:
            for b in S:
                assert e(P.meet(a, b)) == Si.meet(e(a), e(b))
                assert e(P.join(a, b)) == Si.join(e(a), e(b))
        assert e(P.zero) == Si.zero
        # Fin(N \ {0}) is simple but not principal
        assert is_simple(P, FinIdeal(FC.cofinite_of(0)))
        image = fin_ideal(Si)
    else:
        table = {a: e(a) for a in P.elements}
        if len(set(table.values())) != len(P):
            raise AssertionError("e is not injective")
        for a in P.elements:
            for b in P.elements:
                assert table[P.meet(a, b)] == Si.meet(table[a], table[b])
                assert table[P.join(a, b)] == Si.join(table[a], table[b])
        assert table[P.zero] == Si.zero
        image = Ideal(Si, frozenset(table.values()))
        assert is_ideal(Si, image), "e(P) is not an ideal of Si(P)"
    assert is_dense_subset(Si, image), "e(P) is not dense in Si(P)"
    e.evidence["image"] = image
    return e


def b_union(A, I: Ideal) -> FiniteAlgebra | FinCofin:
    """I together with the complements of its members, as a subalgebra."""
    if not A.finite:
        if I.kind in ("fin", "all"):
            return A
        raise StructureError("only Fin and the whole algebra are supported symbolically", I)
    members = set(I.members) | {A.comp(a) for a in I.members}
    from .ba import subalgebra

    return subalgebra(A, members, name=f"B({A.name})")


def b_of(A, I: Ideal):
    from .ba import is_prime_ideal

    if I.is_whole:
        raise PreconditionError("ideal must be proper", A.one)
    B = b_union(A, I)
    if B.finite:
        J = Ideal(B, I.members)
        v = is_prime_ideal(B, J)
        if not v:
            raise AssertionError(f"I is not prime in B(I): {v}")
    return B


# -- the join isomorphisms ---------------------------------------------------


def sigma_stone(X: topo.FinSpace) -> StructMap:
    """J -> union of J, from Si(CK(X)) onto CO(X)."""
    CO = topo.co_algebra(X)
    ck = topo.ck_family(X)
    P = Pseudolattice(ck, lambda a, b: a & b, lambda a, b: a | b, 0, "CK(X)", host=CO)
    Si = simple_ideals(P)
    f = StructMap(Si, CO, lambda J: reduce(lambda a, b: a | b, J, 0), "Sigma")
    v = hom_check(f)
    if not v or len(f.image()) != len(Si) or f.image() != frozenset(CO.elements):
        raise AssertionError(f"Sigma is not a Boolean isomorphism: {v}")
    return f


def least_upper_bound(B, J: Iterable):
    J = list(J)
    ubs = [u for u in B.elements if all(B.le(j, u) for j in J)]
    for u in ubs:
        if all(B.le(u, v) for v in ubs):
            return u
    return None


def fin_join_exists(idx) -> bool:
    """Does the union of Fin(S) have a least upper bound in FinCofin?"""
    if isinstance(idx, FC):
        return True
    return idx.finite_or_cofinite


def sigma_zlba(B, I: Ideal) -> StructMap:
    """J -> join of J in B, from Si(I) onto B."""
    if not B.finite:
        if I.kind == "fin":
            assert not fin_join_exists(EVENS)
            raise PreconditionError("not a ZLBA: a simple ideal has no join", FinIdeal(EVENS))
        raise PreconditionError("unsupported symbolic pair", I)
    P = Pseudolattice.from_ideal(B, I)
    Si = simple_ideals(P)
    table = {}
    for J in Si.elements:
        u = least_upper_bound(B, J)
        if u is None:
            raise PreconditionError("not a ZLBA: a simple ideal has no join", J)
        table[J] = u
    f = StructMap.from_table(Si, B, table, "Sigma")
    v = hom_check(f)
    if not v or len(set(table.values())) != len(Si) or set(table.values()) != set(B.elements):
        raise AssertionError(f"Sigma is not a Boolean isomorphism: {v}")
    return f
