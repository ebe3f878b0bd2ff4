"""Contact relations on Boolean algebras and local contact algebras.

A `ContactTriple` holds an algebra, a contact predicate and the ideal of
bounded elements.  The well-inside relation is a << b iff a is not in
contact with the complement of b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import combinations, permutations, product as cartesian
from typing import Any, Callable, Iterable, Sequence

from .ba import (
    FiniteAlgebra,
    Ideal,
    Powerset,
    StructMap,
    hom_check,
    is_dense_subset,
    is_ideal,
    subalgebra,
    whole,
)
from .errors import (
    PASS,
    InvariantError,
    MembershipError,
    PreconditionError,
    SizeError,
    UnsupportedError,
    Verdict,
    fail,
)

MAX_HITTING_CANDIDATES = 32


@dataclass(frozen=True, eq=False)
class ContactTriple:
    algebra: Any
    rel: Callable
    bounded: Ideal
    name: str = "T"

    def rho(self, a, b) -> bool:
        return bool(self.rel(a, b))

    def ll(self, a, b) -> bool:
        return not self.rel(a, self.algebra.comp(b))

    @property
    def finite(self) -> bool:
        return self.algebra.finite

    @cached_property
    def pairs(self) -> frozenset:
        A = self.algebra
        return frozenset((a, b) for a in A.elements for b in A.elements if self.rel(a, b))

    @cached_property
    def atom_relation(self) -> frozenset:
        """Index pairs (i, j) of atoms in contact."""
        at = self.algebra.atoms
        return frozenset(
            (i, j) for i, x in enumerate(at) for j, y in enumerate(at) if self.rel(x, y)
        )

    def __repr__(self) -> str:
        return f"<ContactTriple {self.name} over {self.algebra!r}>"


def from_pairs(A, pairs: Iterable, bounded: Ideal | None = None, name="T") -> ContactTriple:
    ps = frozenset((A.require(a), A.require(b)) for a, b in pairs)
    return ContactTriple(A, lambda a, b: (a, b) in ps, bounded or whole(A), name)


def from_atom_relation(A: FiniteAlgebra, R: Iterable, bounded: Ideal | None = None,
                       close: bool = True, name="T_R") -> ContactTriple:
    """a rho b iff some atom under a is R-related to some atom under b.

    With `close`, R is made reflexive and symmetric first.
    """
    at = A.atoms
    R = {(int(x), int(y)) for x, y in R}
    if close:
        R |= {(y, x) for x, y in R} | {(i, i) for i in range(len(at))}
    for x, y in R:
        if not (0 <= x < len(at) and 0 <= y < len(at)):
            raise MembershipError("atom index out of range", (x, y))
    if isinstance(A, Powerset):
        reach = [0] * len(at)
        for x, y in R:
            reach[x] |= 1 << y

        def rel(a, b):
            while a:
                low = a & -a
                if reach[low.bit_length() - 1] & b:
                    return True
                a ^= low
            return False
    else:
        idx = {x: i for i, x in enumerate(at)}
        below = {a: [idx[x] for x in A.atoms_below(a)] for a in A.elements}

        def rel(a, b):
            return any((x, y) in R for x in below[a] for y in below[b])

    T = ContactTriple(A, rel, bounded or whole(A), name)
    object.__setattr__(T, "_R", frozenset(R))
    return T


def rho_s(A, I: Ideal | None = None) -> ContactTriple:
    """Overlap contact: a rho b iff a and b meet."""
    I = I if I is not None else whole(A)
    v = is_ideal(A, I)
    if not v:
        raise PreconditionError(f"not an ideal: {v.reason}", v.witness)
    v = is_dense_subset(A, I)
    if not v:
        raise PreconditionError("ideal is not dense", v.witness)
    zero = A.zero
    return ContactTriple(A, lambda a, b: A.meet(a, b) != zero, I, "rho_s")


# -- axioms -----------------------------------------------------------------


def _universe(A):
    return A.elements if A.finite else A.sample(3)


def _pool(A):
    # existential witnesses over a symbolic carrier need one more fresh index
    return A.elements if A.finite else A.sample(4)


@dataclass
class AxiomReport:
    verdicts: dict

    def holds(self, *names) -> bool:
        return all(self.verdicts[n].ok for n in names)

    @property
    def contact(self) -> bool:
        return self.holds("C1", "C2", "C3", "C4")

    @property
    def nca(self) -> bool:
        return self.contact and self.holds("interpolation", "extensionality")

    @property
    def lca(self) -> bool:
        return self.contact and self.holds("ideal", "BC1", "BC2", "BC3")

    @property
    def clca(self) -> bool:
        return self.lca and self.holds("complete")

    def summary(self) -> dict:
        return {"contact": self.contact, "nca": self.nca, "lca": self.lca, "clca": self.clca}

    def failures(self) -> dict:
        return {k: v for k, v in self.verdicts.items() if not v.ok}


def check_axioms(T: ContactTriple) -> AxiomReport:
    A, r, ll, B = T.algebra, T.rho, T.ll, T.bounded
    U, W = _universe(A), _pool(A)
    zero = A.zero
    v = {}

    def first(reason, gen):
        for w in gen:
            return fail(reason, w)
        return PASS

    v["C1"] = first("contact with 0", ((a, b) for a in U for b in U
                                       if r(a, b) and (a == zero or b == zero)))
    v["C2"] = first("not symmetric", ((a, b) for a in U for b in U if r(a, b) != r(b, a)))
    v["C3"] = first("contact does not distribute over join",
                    ((a, b, c) for a in U for b in U for c in U
                     if r(a, A.join(b, c)) != (r(a, b) or r(a, c))))
    v["C4"] = first("overlapping elements not in contact",
                    ((a, b) for a in U for b in U if A.meet(a, b) != zero and not r(a, b)))
    v["interpolation"] = first(
        "no interpolant",
        ((a, b) for a in U for b in U if ll(a, b) and not any(ll(a, c) and ll(c, b) for c in W)))
    v["extensionality"] = first(
        "no nonzero element well inside",
        (a for a in U if a != zero and not any(b != zero and ll(b, a) for b in W)))
    iv = is_ideal(A, B)
    v["ideal"] = iv
    Bu = [a for a in U if a in B]
    Bw = [a for a in W if a in B]
    v["BC1"] = first(
        "no bounded interpolant",
        ((a, c) for a in Bu for c in U if ll(a, c) and not any(ll(a, b) and ll(b, c) for b in Bw)))
    v["BC2"] = first(
        "contact not witnessed by a bounded part",
        ((a, c) for a in U for c in U if r(a, c) and not any(A.le(b, c) and r(a, b) for b in Bw)))
    v["BC3"] = first(
        "no nonzero bounded element well inside",
        (a for a in U if a != zero and not any(b != zero and ll(b, a) for b in Bw)))
    v["complete"] = PASS if A.finite else fail("FinCofin is not complete", None)
    return AxiomReport(v)


def dzlc_condition(T: ContactTriple) -> Verdict:
    """For bounded a << b there is a bounded c << c with a <= c <= b."""
    A, B = T.algebra, T.bounded
    U, W = _universe(A), _pool(A)
    Bw = [c for c in W if c in B and T.ll(c, c)]
    for a in U:
        if a not in B:
            continue
        for b in U:
            if T.ll(a, b) and not any(A.le(a, c) and A.le(c, b) for c in Bw):
                return fail("no bounded self-well-inside element between", (a, b))
    return PASS


def is_lca(T: ContactTriple) -> bool:
    return check_axioms(T).lca


# -- derived constructions --------------------------------------------------


def contact_from_dense_subalgebra(A: FiniteAlgebra, A0: Iterable) -> ContactTriple:
    """a << b iff some c in A0 has a <= c <= b; every element is bounded."""
    members = list(A0.elements if isinstance(A0, FiniteAlgebra) else A0)
    try:
        sub = subalgebra(A, members)
    except Exception as exc:
        raise PreconditionError(f"not a subalgebra: {exc}", getattr(exc, "witness", None))
    v = is_dense_subset(A, sub.elements)
    if not v:
        raise PreconditionError("subalgebra is not dense", v.witness)
    S = sub.elements

    def ll(a, b):
        return any(A.le(a, c) and A.le(c, b) for c in S)

    T = ContactTriple(A, lambda a, b: not ll(a, A.comp(b)), whole(A), "rho_A0")
    rep = check_axioms(T)
    if not rep.nca:
        raise AssertionError(f"relation from a dense subalgebra is not normal: {rep.failures()}")
    if set(a_s(T)) != set(S):
        raise AssertionError("self-well-inside elements differ from the subalgebra")
    w = weight(T)
    if w != len(S):
        raise AssertionError(f"weight {w} differs from |A0|={len(S)}")
    return T


def a_s(T: ContactTriple) -> list:
    """Elements well inside themselves."""
    return [a for a in _universe(T.algebra) if T.ll(a, a)]


def is_base(T: ContactTriple, fam: Iterable) -> Verdict:
    """Interpolation of bounded a << c by a member between them (two equivalent forms)."""
    A, B = T.algebra, T.bounded
    fam = list(fam)
    for b in fam:
        if b not in B:
            raise MembershipError("base member is not bounded", b)
    if not A.finite:
        raise UnsupportedError("bases are computed for finite triples only")
    Bm = list(B)
    by_order = by_ll = PASS
    for a in Bm:
        for c in Bm:
            if not T.ll(a, c):
                continue
            if by_order and not any(A.le(a, b) and A.le(b, c) for b in fam):
                by_order = fail("no member between", (a, c))
            if by_ll and not any(T.ll(a, b) and T.ll(b, c) for b in fam):
                by_ll = fail("no member well between", (a, c))
    if bool(by_order) != bool(by_ll) and is_lca(T):
        raise InvariantError("base criteria disagree on an LCA", (fam, by_order, by_ll))
    return by_order


def minimal_base(T: ContactTriple, max_candidates: int = MAX_HITTING_CANDIDATES) -> tuple:
    """Smallest base; ties broken lexicographically in canonical order."""
    A = T.algebra
    if not A.finite:
        raise UnsupportedError("bases are computed for finite triples only")
    Bm = list(T.bounded)
    bit = {b: 1 << i for i, b in enumerate(Bm)}
    constraints = set()
    for a in Bm:
        for c in Bm:
            if T.ll(a, c):
                constraints.add(sum(bit[b] for b in Bm if A.le(a, b) and A.le(b, c)))
    if 0 in constraints:
        raise PreconditionError("some a << c has no bounded element between them")
    forced = 0
    for m in constraints:
        if m & (m - 1) == 0:
            forced |= m
    rest = [m for m in constraints if not m & forced]
    cands = [b for b in Bm if any(bit[b] & m for m in rest)]
    if len(cands) > max_candidates:
        raise SizeError(f"{len(cands)} free candidates exceeds {max_candidates}", len(cands))
    chosen = None
    for k in range(len(cands) + 1):
        for combo in combinations(cands, k):
            acc = sum(bit[b] for b in combo)
            if all(acc & m for m in rest):
                chosen = combo
                break
        if chosen is not None:
            break
    base = tuple(b for b in Bm if bit[b] & forced or b in chosen)
    v = is_base(T, base)
    if not v:
        raise AssertionError(f"hitting set is not a base: {v}")
    return base


def weight(T: ContactTriple) -> int:
    return len(minimal_base(T))


def join_closure(A, fam: Iterable) -> frozenset:
    """Sub-join-pseudolattice generated by `fam`."""
    S = set(fam)
    grew = True
    while grew:
        new = {A.join(a, b) for a in S for b in S} - S
        grew = bool(new)
        S |= new
    return frozenset(S)


def dense_fact_conditions(T: ContactTriple, fam: Iterable) -> tuple:
    """The four equivalent descriptions of a dense subset, evaluated separately."""
    A, B = T.algebra, T.bounded
    fam = list(fam)
    zero = A.zero
    nz = [b for b in fam if b != zero]
    a_ = bool(is_dense_subset(A, fam))
    b_ = all(any(T.ll(b, a) for b in nz) for a in A.elements if a != zero)

    def rebuilt(a):
        return A.join_all(b for b in fam if T.ll(b, a)) == a

    c_ = all(rebuilt(a) for a in B if a != zero)
    d_ = all(rebuilt(a) for a in A.elements if a != zero)
    return a_, b_, c_, d_


# -- products ---------------------------------------------------------------


def product(Ts: Sequence[ContactTriple], verify_up_to: int = 16) -> ContactTriple:
    """Coordinatewise product; contact means contact in some coordinate."""
    Ts = list(Ts)
    if not Ts:
        A = Powerset(0)
        return ContactTriple(A, lambda a, b: False, whole(A), "prod()")
    if all(isinstance(T.algebra, Powerset) for T in Ts):
        sizes = [T.algebra.n for T in Ts]
        offs = [sum(sizes[:i]) for i in range(len(Ts))]
        A = Powerset(sum(sizes))

        def coords(a):
            return [(a >> o) & T.algebra.full for o, T in zip(offs, Ts)]

        def join_coords(cs):
            return sum(c << o for c, o in zip(cs, offs))
    else:
        elems = list(cartesian(*[T.algebra.elements for T in Ts]))
        As = [T.algebra for T in Ts]
        A = FiniteAlgebra(
            elems,
            lambda x, y: tuple(B.join(p, q) for B, p, q in zip(As, x, y)),
            lambda x, y: tuple(B.meet(p, q) for B, p, q in zip(As, x, y)),
            lambda x: tuple(B.comp(p) for B, p in zip(As, x)),
            lambda x, y: all(B.le(p, q) for B, p, q in zip(As, x, y)),
            name="prod",
        )

        def coords(a):
            return list(a)

        def join_coords(cs):
            return tuple(cs)

    def rel(a, b):
        return any(T.rho(x, y) for T, x, y in zip(Ts, coords(a), coords(b)))

    bounded = Ideal(A, frozenset(
        join_coords(cs) for cs in cartesian(*[list(T.bounded) for T in Ts])
    ))
    P = ContactTriple(A, rel, bounded, "prod")
    object.__setattr__(P, "coords", coords)
    object.__setattr__(P, "factors", tuple(Ts))
    if len(A) <= verify_up_to:
        rep = check_axioms(P)
        if all(is_lca(T) for T in Ts) and not rep.lca:
            raise AssertionError(f"product of LCAs is not an LCA: {rep.failures()}")
    return P


# -- Alexandroff extension and clusters -------------------------------------


def alexandroff_extension(T: ContactTriple) -> Callable:
    """rho together with every pair of unbounded elements."""
    if not T.finite:
        raise UnsupportedError("clusters are computed for finite triples only")
    B = T.bounded
    return lambda a, b: T.rho(a, b) or (a not in B and b not in B)


@dataclass(frozen=True)
class Cluster:
    members: frozenset
    bounded: bool

    def __contains__(self, a) -> bool:
        return a in self.members


def is_cluster(A, C: Callable, sigma: frozenset) -> Verdict:
    for a in sigma:
        for b in sigma:
            if not C(a, b):
                return fail("K1: members not in contact", (a, b))
    for a in A.elements:
        for b in A.elements:
            if A.join(a, b) in sigma and a not in sigma and b not in sigma:
                return fail("K2: join splits outside", (a, b))
    for a in A.elements:
        if a not in sigma and all(C(a, b) for b in sigma):
            return fail("K3: missing element in contact with all members", a)
    return PASS


def sigma_of(A, C: Callable, u: Iterable) -> frozenset:
    u = list(u)
    return frozenset(a for a in A.elements if all(C(a, b) for b in u))


def _up_sets(A) -> list[frozenset]:
    from .ideals import Pseudolattice, down_sets

    full = frozenset(A.elements)
    return [full - D for D in down_sets(Pseudolattice.from_algebra(A))]


def clusters(T: ContactTriple, cross_check_up_to: int = 16) -> list[Cluster]:
    A = T.algebra
    C = alexandroff_extension(T)
    found = []
    for x in A.atoms:
        s = sigma_of(A, C, A.up(x))
        if s not in found and is_cluster(A, C, s):
            found.append(s)
    if len(A) <= cross_check_up_to:
        exhaustive = {s for s in _up_sets(A) if is_cluster(A, C, s)}
        if exhaustive != set(found):
            raise InvariantError("cluster enumeration missed a cluster", exhaustive ^ set(found))
    B = T.bounded
    return [Cluster(s, any(a in B for a in s)) for s in found]


def bounded_clusters(T: ContactTriple) -> list[Cluster]:
    return [c for c in clusters(T) if c.bounded]


# -- isomorphisms -----------------------------------------------------------


def _atom_profile(T: ContactTriple, i: int) -> tuple:
    R = T.atom_relation
    x = T.algebra.atoms[i]
    return ((i, i) in R, sum(1 for (p, _) in R if p == i), x in T.bounded)


def find_lca_isomorphism(T1: ContactTriple, T2: ContactTriple) -> StructMap | None:
    """Boolean isomorphism carrying contact onto contact and bounded onto bounded."""
    A, B = T1.algebra, T2.algebra
    if len(A) != len(B) or len(A.atoms) != len(B.atoms):
        return None
    if len(T1.pairs) != len(T2.pairs) or len(T1.bounded) != len(T2.bounded):
        return None
    n = len(A.atoms)
    prof1 = [_atom_profile(T1, i) for i in range(n)]
    prof2 = [_atom_profile(T2, i) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    R1, R2 = T1.atom_relation, T2.atom_relation
    for perm in permutations(range(n)):
        if any(prof1[i] != prof2[perm[i]] for i in range(n)):
            continue
        if any(((perm[i], perm[j]) in R2) != ((i, j) in R1) for i in range(n) for j in range(n)):
            continue
        table = {
            a: B.join_all(B.atoms[perm[A.atoms.index(x)]] for x in A.atoms_below(a))
            for a in A.elements
        }
        f = StructMap.from_table(A, B, table, "iso")
        if not hom_check(f):
            continue
        if any(T1.rho(a, b) != T2.rho(table[a], table[b]) for a in A.elements for b in A.elements):
            continue
        if {table[a] for a in T1.bounded} != set(T2.bounded):
            continue
        return f
    return None


def relabel(T: ContactTriple, perm: Sequence[int]) -> ContactTriple:
    """Copy of a powerset triple with atom i renamed perm[i]."""
    A = T.algebra
    if not isinstance(A, Powerset):
        raise UnsupportedError("relabeling needs a powerset carrier")

    def move(a):
        return reduce(lambda acc, i: acc | (1 << perm[i]), Powerset.indices(a), 0)

    back = {move(a): a for a in A.elements}
    return ContactTriple(
        A, lambda a, b: T.rho(back[a], back[b]),
        Ideal(A, frozenset(move(a) for a in T.bounded)), T.name + "'",
    )
