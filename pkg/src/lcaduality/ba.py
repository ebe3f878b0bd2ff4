"""Boolean algebra carriers, ideals and filters, density and pi-weight.

Two carriers are supported.  `FiniteAlgebra` lists its elements explicitly
(`Powerset` is the common case, with elements encoded as atom bitmasks) and
`FinCofin` is the algebra of finite and cofinite subsets of the naturals,
handled symbolically through `FC` descriptors.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Iterator

from .errors import (
    PASS,
    MembershipError,
    SizeError,
    StructureError,
    Verdict,
    fail,
)

MAX_ATOMS = 16
MAX_SEARCH_ELEMENTS = 32
ALEPH_0 = "aleph_0"


class FiniteAlgebra:
    """A finite Boolean algebra with explicitly listed elements.

    `elements` fixes the canonical order used for every search and witness.
    The operations are plain callables; `check_boolean_laws` verifies them.
    """

    finite = True

    def __init__(self, elements: Iterable[Hashable], join, meet, comp, le=None, name="A"):
        self.elements = tuple(elements)
        if not self.elements:
            raise StructureError("a Boolean algebra needs at least one element")
        self._index = {a: i for i, a in enumerate(self.elements)}
        self.join = join
        self.meet = meet
        self.comp = comp
        self._le = le
        self.name = name
        self.zero = reduce(meet, self.elements)
        self.one = reduce(join, self.elements)

    def le(self, a, b) -> bool:
        if self._le is not None:
            return self._le(a, b)
        return self.meet(a, b) == a

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __contains__(self, a) -> bool:
        try:
            return a in self._index
        except TypeError:
            return False

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} |A|={len(self)}>"

    def key(self, a) -> int:
        return self._index[a]

    def sort(self, items: Iterable) -> list:
        return sorted(items, key=self.key)

    @property
    def trivial(self) -> bool:
        return self.zero == self.one

    @cached_property
    def atoms(self) -> tuple:
        nonzero = [a for a in self.elements if a != self.zero]
        return tuple(
            a for a in nonzero if not any(b != a and self.le(b, a) for b in nonzero)
        )

    def atoms_below(self, a) -> tuple:
        return tuple(x for x in self.atoms if self.le(x, a))

    def join_all(self, items: Iterable):
        return reduce(self.join, items, self.zero)

    def meet_all(self, items: Iterable):
        return reduce(self.meet, items, self.one)

    def down(self, a) -> frozenset:
        return frozenset(b for b in self.elements if self.le(b, a))

    def up(self, a) -> frozenset:
        return frozenset(b for b in self.elements if self.le(a, b))

    def require(self, a):
        if a not in self:
            raise MembershipError(f"{a!r} is not an element of {self.name}", a)
        return a


class Powerset(FiniteAlgebra):
    """P({0..n-1}); an element is the bitmask of the atoms below it."""

    def __init__(self, n: int, max_atoms: int = MAX_ATOMS):
        if n < 0:
            raise StructureError("atom count must be non-negative")
        if n > max_atoms:
            raise SizeError(f"{n} atoms exceeds the cap of {max_atoms}", n)
        self.n = n
        full = (1 << n) - 1
        self.full = full
        super().__init__(
            range(1 << n),
            operator.or_,
            operator.and_,
            lambda a: full ^ a,
            lambda a, b: (a & ~b) == 0,
            name=f"P({n})",
        )

    def __contains__(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a <= self.full

    def key(self, a) -> int:
        return a

    @cached_property
    def atoms(self) -> tuple:
        return tuple(1 << i for i in range(self.n))

    def down(self, a) -> frozenset:
        return frozenset(b for b in self.elements if (b & ~a) == 0)

    @staticmethod
    def element(indices: Iterable[int]) -> int:
        return reduce(operator.or_, (1 << i for i in indices), 0)

    @staticmethod
    def indices(a: int) -> list[int]:
        return [i for i in range(a.bit_length()) if a >> i & 1]


def subalgebra(A: FiniteAlgebra, members: Iterable, name: str = "") -> FiniteAlgebra:
    """Restrict the operations of `A` to `members`, which must be closed."""
    elems = A.sort(set(members))
    S = set(elems)
    for a in elems:
        if A.comp(a) not in S:
            raise StructureError("not closed under complement", a)
        for b in elems:
            if A.join(a, b) not in S:
                raise StructureError("not closed under join", (a, b))
    return FiniteAlgebra(elems, A.join, A.meet, A.comp, A.le, name=name or f"sub({A.name})")


def generated_subalgebra(A: FiniteAlgebra, gens: Iterable) -> FiniteAlgebra:
    S = {A.zero, A.one} | set(gens)
    frontier = True
    while frontier:
        new = {A.comp(a) for a in S} | {A.join(a, b) for a in S for b in S}
        frontier = not new <= S
        S |= new
    return subalgebra(A, S)


@dataclass(frozen=True)
class FC:
    """A finite set of naturals, or (``cofinite=True``) the complement of one."""

    atoms: frozenset = frozenset()
    cofinite: bool = False

    def __contains__(self, n: int) -> bool:
        return (n in self.atoms) != self.cofinite

    @classmethod
    def of(cls, *xs: int) -> "FC":
        return cls(frozenset(xs))

    @classmethod
    def cofinite_of(cls, *xs: int) -> "FC":
        return cls(frozenset(xs), True)

    def sort_key(self) -> tuple:
        return (self.cofinite, len(self.atoms), tuple(sorted(self.atoms)))

    def __repr__(self) -> str:
        inner = ",".join(map(str, sorted(self.atoms)))
        return f"N\\{{{inner}}}" if self.cofinite else f"{{{inner}}}"


class FinCofin:
    """The finite-cofinite algebra over the naturals.

    Operations work on `FC` descriptors.  Subclasses may carry a different
    element type by overriding `wrap` and `unwrap`.
    """

    finite = False
    name = "FinCofin(N)"
    trivial = False

    def wrap(self, fc: FC):
        return fc

    def unwrap(self, a) -> FC:
        return a

    @property
    def zero(self):
        return self.wrap(FC())

    @property
    def one(self):
        return self.wrap(FC(frozenset(), True))

    def comp(self, a):
        a = self.unwrap(a)
        return self.wrap(FC(a.atoms, not a.cofinite))

    def meet(self, a, b):
        return self.wrap(fc_meet(self.unwrap(a), self.unwrap(b)))

    def join(self, a, b):
        return self.comp(self.meet(self.comp(a), self.comp(b)))

    def le(self, a, b) -> bool:
        return self.meet(a, b) == a

    def is_cofinite(self, a) -> bool:
        return self.unwrap(a).cofinite

    def support(self, a) -> frozenset:
        """The finite set `a` lists (its members, or its missing points)."""
        return self.unwrap(a).atoms

    def fin_minorant(self, a):
        """A nonzero finite element below the nonzero element `a`."""
        a = self.unwrap(a)
        if a.cofinite:
            n = 0
            while n in a.atoms:
                n += 1
            return self.wrap(FC.of(n))
        return self.wrap(FC.of(min(a.atoms)))

    def __contains__(self, a) -> bool:
        try:
            fc = self.unwrap(a)
        except (AttributeError, TypeError):
            return False
        return isinstance(fc, FC) and all(isinstance(x, int) and x >= 0 for x in fc.atoms)

    def __eq__(self, other) -> bool:
        return type(other) is type(self)

    def __hash__(self) -> int:
        return hash(type(self))

    def __repr__(self) -> str:
        return f"<{self.name}>"

    def key(self, a) -> tuple:
        return self.unwrap(a).sort_key()

    def sort(self, items: Iterable) -> list:
        return sorted(items, key=self.key)

    def require(self, a):
        if a not in self:
            raise MembershipError(f"{a!r} is not an element of {self.name}", a)
        return a

    def atom(self, n: int):
        return self.wrap(FC.of(n))

    def sample(self, width: int = 4) -> tuple:
        """Every finite subset of range(width) and every complement of one."""
        finite = [FC(frozenset(c)) for r in range(width + 1) for c in combinations(range(width), r)]
        both = finite + [FC(f.atoms, True) for f in finite]
        return tuple(self.wrap(f) for f in sorted(both, key=FC.sort_key))

    def join_all(self, items: Iterable):
        return reduce(self.join, items, self.zero)


def fc_meet(a: FC, b: FC) -> FC:
    if not a.cofinite and not b.cofinite:
        return FC(a.atoms & b.atoms)
    if not a.cofinite:
        return FC(a.atoms - b.atoms)
    if not b.cofinite:
        return FC(b.atoms - a.atoms)
    return FC(a.atoms | b.atoms, True)


FINCOFIN = FinCofin()


def make_algebra(kind, max_atoms: int = MAX_ATOMS):
    """Build a carrier from ``{"kind": "powerset", "atoms": n}`` or ``{"kind": "fincofin"}``."""
    if isinstance(kind, (FiniteAlgebra, FinCofin)):
        return kind
    if isinstance(kind, int):
        return Powerset(kind, max_atoms)
    if isinstance(kind, str):
        kind = {"kind": kind}
    k = kind.get("kind")
    if k == "powerset":
        return Powerset(int(kind["atoms"]), max_atoms)
    if k == "fincofin":
        return FINCOFIN
    raise StructureError(f"unknown algebra kind {k!r}", kind)


# -- ideals and filters -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal, filter or plain subset of an algebra.

    Finite carriers store `members`.  Over FinCofin the symbolic kinds are
    ``fin`` (all finite sets), ``all`` and ``principal`` (the down-set of
    `generator`).
    """

    carrier: Any
    members: frozenset | None = None
    kind: str = "explicit"
    generator: Any = None
    role: str = "ideal"

    def __contains__(self, a) -> bool:
        if self.members is not None:
            return a in self.members
        if self.kind == "fin":
            return not self.carrier.is_cofinite(a)
        if self.kind == "all":
            return True
        if self.kind == "principal":
            return self.carrier.le(a, self.generator)
        raise StructureError(f"unknown ideal kind {self.kind!r}")

    def __iter__(self) -> Iterator:
        if self.members is None:
            raise StructureError(f"symbolic ideal {self.kind!r} cannot be enumerated")
        return iter(self.carrier.sort(self.members))

    def __len__(self) -> int:
        if self.members is None:
            raise StructureError("symbolic ideal has no finite size")
        return len(self.members)

    def _ident(self):
        if self.members is not None:
            return ("explicit", self.members)
        return (self.kind, self.generator)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.carrier == other.carrier
            and self._ident() == other._ident()
        )

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        if self.members is None:
            return f"Ideal({self.kind}{'' if self.generator is None else ' ' + repr(self.generator)})"
        return f"Ideal({self.carrier.sort(self.members)})"

    @property
    def is_whole(self) -> bool:
        if self.members is None:
            return self.kind == "all" or (
                self.kind == "principal" and self.generator == self.carrier.one
            )
        return len(self.members) == len(self.carrier)


def ideal_of(A, members: Iterable, role: str = "ideal") -> Ideal:
    ms = frozenset(members)
    for m in ms:
        A.require(m)
    return Ideal(A, ms, role=role)


def principal(A, a) -> Ideal:
    A.require(a)
    if A.finite:
        return Ideal(A, A.down(a))
    return Ideal(A, kind="principal", generator=a)


def whole(A) -> Ideal:
    if A.finite:
        return Ideal(A, frozenset(A.elements))
    return Ideal(A, kind="all")


def fin_ideal(A=FINCOFIN) -> Ideal:
    return Ideal(A, kind="fin")


def ideal_generated(A, gens: Iterable) -> Ideal:
    gens = [A.require(g) for g in gens]
    return principal(A, A.join_all(gens))


def is_ideal(A, S) -> Verdict:
    members = S.members if isinstance(S, Ideal) else frozenset(S)
    if members is None:
        return PASS if S.kind in ("fin", "all", "principal") else fail("unknown kind")
    if A.zero not in members:
        return fail("does not contain 0", A.zero)
    for a in A.sort(members):
        for b in A.elements:
            if A.le(b, a) and b not in members:
                return fail("not downward closed", (a, b))
    for a, b in combinations(A.sort(members), 2):
        if A.join(a, b) not in members:
            return fail("not closed under join", (a, b))
    return PASS


def is_filter(A, S) -> Verdict:
    members = frozenset(S.members if isinstance(S, Ideal) else S)
    return is_ideal(A, frozenset(A.comp(a) for a in members))


def is_prime_ideal(A, I: Ideal) -> Verdict:
    """Proper ideal containing a or its complement for every a."""
    if I.is_whole:
        return fail("ideal is not proper", A.one)
    if not A.finite:
        if I.kind == "fin":
            return PASS
        if I.kind == "principal":
            # down(e) is maximal iff the complement of e is an atom (a singleton)
            c = A.comp(I.generator)
            ok = not A.is_cofinite(c) and len(A.support(c)) == 1
            return PASS if ok else fail("complement of generator is not an atom", c)
        return fail("unsupported symbolic ideal", I)
    for a in A.elements:
        if a not in I and A.comp(a) not in I:
            return fail("neither a nor a* in I", a)
    return PASS


def is_principal(A, I: Ideal) -> Verdict:
    if A.finite:
        top = A.join_all(I.members)
        return PASS if A.down(top) == I.members else fail("no largest member")
    if I.kind in ("principal", "all"):
        return PASS
    # Fin(N) has no largest member: any finite set F lies below F + {max F + 1}
    return fail("no largest finite set", None)


# -- density and pi-weight --------------------------------------------------


def is_dense_subset(A, S) -> Verdict:
    """Every nonzero element of A has a nonzero minorant in S."""
    if isinstance(S, Ideal) and S.members is None:
        if S.kind == "all":
            return PASS
        if S.kind == "principal":
            c = A.comp(S.generator)
            return PASS if c == A.zero else fail("complement of generator has no minorant", c)
        if S.kind == "fin":
            for a in A.sample():
                if a != A.zero:
                    m = A.fin_minorant(a)
                    assert m != A.zero and A.le(m, a) and m in S
            return PASS
        return fail("unsupported symbolic subset", S)
    members = list(S.members if isinstance(S, Ideal) else S)
    for s in members:
        A.require(s)
    if not A.finite:
        # a finite family cannot minorize every singleton
        top = max((max(A.support(s), default=-1) for s in members), default=-1)
        witness = A.atom(top + 1)
        if any(s != A.zero and A.le(s, witness) for s in members):
            raise AssertionError("finite family minorizes a fresh singleton")
        return fail("no nonzero minorant", witness)
    nonzero = [s for s in members if s != A.zero]
    missing = [a for a in A.elements if a != A.zero and not any(A.le(s, a) for s in nonzero)]
    if not missing:
        return PASS
    # prefer a witness that no member even meets
    for a in missing:
        if all(A.meet(a, s) == A.zero for s in nonzero):
            return fail("disjoint from every member", a)
    return fail("no nonzero minorant", missing[0])


def min_dense_subset(A: FiniteAlgebra, max_elements: int = MAX_SEARCH_ELEMENTS) -> tuple:
    """Smallest dense subset: increasing size, lexicographic in canonical order."""
    if len(A) > max_elements:
        raise SizeError(f"|A|={len(A)} exceeds the search cap {max_elements}", len(A))
    nonzero = [a for a in A.elements if a != A.zero]
    if not nonzero:
        return ()
    bit = {a: 1 << i for i, a in enumerate(nonzero)}
    target = (1 << len(nonzero)) - 1
    # cover[s] = set of nonzero elements that s minorizes
    cover = {s: sum(bit[a] for a in nonzero if A.le(s, a)) for s in nonzero}
    for k in range(1, len(nonzero) + 1):
        for combo in combinations(nonzero, k):
            acc = 0
            for s in combo:
                acc |= cover[s]
            if acc == target:
                return combo
    raise AssertionError("the whole algebra is dense in itself")


def pi_weight_poset(A, max_elements: int = MAX_SEARCH_ELEMENTS):
    if not A.finite:
        return ALEPH_0
    return len(min_dense_subset(A, max_elements))


# -- ultrafilters -----------------------------------------------------------


@dataclass(frozen=True)
class SymbolicUltrafilters:
    """Ultrafilters of FinCofin: principal ones at `indices`, plus optionally the cofinite one."""

    indices: FC
    cofinite: bool

    def has_principal(self, n: int) -> bool:
        return n in self.indices


def principal_ultrafilter_contains(n: int, a: FC) -> bool:
    return n in a


def cofinite_ultrafilter_contains(a: FC) -> bool:
    return a.cofinite


def ultrafilter_meets(uf, I: Ideal) -> bool:
    """Does the symbolic ultrafilter `uf` ("cofinite" or an index) meet I?"""
    A = I.carrier
    if uf == "cofinite":
        if I.members is not None:
            return any(A.is_cofinite(a) for a in I.members)
        if I.kind == "principal":
            return A.is_cofinite(I.generator)
        return I.kind == "all"
    return A.atom(uf) in I


def ultrafilters(A) -> list[frozenset] | SymbolicUltrafilters:
    """Ultrafilters in canonical order (principal at each atom for finite A)."""
    if not A.finite:
        return SymbolicUltrafilters(FC(frozenset(), True), True)
    return [A.up(x) for x in A.atoms]


def bounded_ultrafilters(A, I: Ideal):
    if not is_ideal(A, I):
        raise StructureError("bounded ultrafilters need an ideal", I)
    if not A.finite:
        if I.kind == "all":
            return SymbolicUltrafilters(FC(frozenset(), True), True)
        if I.kind == "fin":
            # {n} is finite, so every principal ultrafilter meets Fin; the cofinite one has no finite member
            return SymbolicUltrafilters(FC(frozenset(), True), False)
        if I.kind == "principal":
            e = A.unwrap(I.generator)
            return SymbolicUltrafilters(e, e.cofinite)
        raise StructureError("unsupported symbolic ideal", I)
    return [u for u in ultrafilters(A) if u & I.members]


# -- structure maps ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class StructMap:
    """A function between carriers; `table` is kept when the source is finite."""

    source: Any
    target: Any
    fn: Callable
    name: str = "f"
    evidence: dict = field(default_factory=dict)

    def __call__(self, a):
        return self.fn(a)

    @classmethod
    def from_table(cls, source, target, table: dict, name: str = "f") -> "StructMap":
        table = dict(table)
        return cls(source, target, table.__getitem__, name)

    @cached_property
    def table(self) -> dict:
        return {a: self.fn(a) for a in self.source.elements}

    def image(self) -> frozenset:
        return frozenset(self.table.values())


def identity(A) -> StructMap:
    return StructMap(A, A, lambda a: a, "id")


def compose(g: StructMap, f: StructMap) -> StructMap:
    return StructMap(f.source, g.target, lambda a: g(f(a)), f"{g.name}.{f.name}")


def _domain(A):
    return A.elements if A.finite else A.sample()


def hom_check(f: StructMap) -> Verdict:
    """Preservation of 0, 1, meet, join and complement; first violation in canonical order."""
    S, T = f.source, f.target
    if f(S.zero) != T.zero:
        return fail("0 not preserved", S.zero)
    if f(S.one) != T.one:
        return fail("1 not preserved", S.one)
    dom = _domain(S)
    img = {a: f(a) for a in dom}
    for a in dom:
        if img[a] not in T:
            return fail("value outside target", a)
        if f(S.comp(a)) != T.comp(img[a]):
            return fail("complement not preserved", a)
    for a in dom:
        for b in dom:
            if f(S.meet(a, b)) != T.meet(img[a], img[b]):
                return fail("meet not preserved", (a, b))
            if f(S.join(a, b)) != T.join(img[a], img[b]):
                return fail("join not preserved", (a, b))
    return PASS


def is_injective(f: StructMap) -> bool:
    return len(f.image()) == len(f.source)


def check_boolean_laws(A: FiniteAlgebra) -> Verdict:
    """Distributive complemented lattice laws, exhaustively."""
    E = A.elements
    for a in E:
        if A.comp(A.comp(a)) != a:
            return fail("complement not involutive", a)
        if A.meet(a, A.comp(a)) != A.zero or A.join(a, A.comp(a)) != A.one:
            return fail("not a complement", a)
        for b in E:
            if A.meet(a, b) != A.meet(b, a) or A.join(a, b) != A.join(b, a):
                return fail("not commutative", (a, b))
            if A.join(a, A.meet(a, b)) != a:
                return fail("absorption fails", (a, b))
            if A.comp(A.join(a, b)) != A.meet(A.comp(a), A.comp(b)):
                return fail("De Morgan fails", (a, b))
            if A.le(a, b) != (A.meet(a, b) == a):
                return fail("order disagrees with meet", (a, b))
            for c in E:
                if A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)):
                    return fail("not distributive", (a, b, c))
                if A.meet(a, A.meet(b, c)) != A.meet(A.meet(a, b), c):
                    return fail("meet not associative", (a, b, c))
                if A.join(a, A.join(b, c)) != A.join(A.join(a, b), c):
                    return fail("join not associative", (a, b, c))
    return PASS


def find_isomorphism(A: FiniteAlgebra, B: FiniteAlgebra) -> StructMap | None:
    """Boolean isomorphism sending atoms to atoms in canonical order."""
    if len(A.atoms) != len(B.atoms) or len(A) != len(B):
        return None
    pairing = dict(zip(A.atoms, B.atoms))
    table = {a: B.join_all(pairing[x] for x in A.atoms_below(a)) for a in A.elements}
    f = StructMap.from_table(A, B, table, "iso")
    return f if hom_check(f) and is_injective(f) else None


def boolean_homs(A: FiniteAlgebra, B: FiniteAlgebra) -> list[StructMap]:
    """Every Boolean homomorphism A -> B, one per map from atoms of B to atoms of A."""
    from itertools import product as cartesian

    out = []
    for g in cartesian(range(len(A.atoms)), repeat=len(B.atoms)):
        table = {
            a: B.join_all(y for y, i in zip(B.atoms, g) if A.le(A.atoms[i], a))
            for a in A.elements
        }
        out.append(StructMap.from_table(A, B, table, "phi"))
    return out
