"""Finite topological spaces, their Boolean algebras of regular and clopen sets,
and the classification of continuous maps between them.

A point set is a bitmask over range(n); a space stores its full family of
open sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .ba import FiniteAlgebra, StructMap, find_isomorphism
from .errors import InvariantError, SizeError, StructureError

MAX_POINTS = 8


def bits(s: int) -> list[int]:
    return [i for i in range(s.bit_length()) if s >> i & 1]


def mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@dataclass(frozen=True)
class FinSpace:
    n: int
    opens: frozenset

    def __post_init__(self):
        if self.n > MAX_POINTS:
            raise SizeError(f"{self.n} points exceeds the cap of {MAX_POINTS}", self.n)
        full = (1 << self.n) - 1
        ops = self.opens
        if 0 not in ops or full not in ops:
            raise StructureError("opens must contain the empty set and the whole space")
        for U in ops:
            if U & ~full:
                raise StructureError("open set mentions a point outside the space", U)
        for U, V in combinations(sorted(ops), 2):
            if U | V not in ops:
                raise StructureError("opens not closed under union", (U, V))
            if U & V not in ops:
                raise StructureError("opens not closed under intersection", (U, V))

    @classmethod
    def make(cls, n: int, opens: Iterable) -> "FinSpace":
        ops = set()
        for U in opens:
            ops.add(U if isinstance(U, int) else mask(U))
        return cls(n, frozenset(ops))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def open_list(self) -> tuple:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sets(self) -> frozenset:
        return frozenset(self.full ^ U for U in self.opens)

    @cached_property
    def minimal_nbhd(self) -> tuple:
        out = []
        for x in range(self.n):
            U = self.full
            for V in self.opens:
                if V >> x & 1:
                    U &= V
            out.append(U)
        return tuple(out)

    def interior(self, S: int) -> int:
        return mask(x for x in range(self.n) if self.minimal_nbhd[x] & ~S == 0)

    def closure(self, S: int) -> int:
        return mask(x for x in range(self.n) if self.minimal_nbhd[x] & S)

    def is_open(self, S: int) -> bool:
        return S in self.opens

    def is_closed(self, S: int) -> bool:
        return (self.full ^ S) in self.opens

    @cached_property
    def regular_closed(self) -> tuple:
        return tuple(sorted({self.closure(U) for U in self.opens}))

    @cached_property
    def regular_open(self) -> tuple:
        return tuple(sorted({self.interior(self.closure(U)) for U in self.opens}))

    @cached_property
    def clopen(self) -> tuple:
        return tuple(sorted(U for U in self.opens if self.is_closed(U)))

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.n

    def specialization(self) -> list[tuple[int, int]]:
        """Pairs (x, y), x != y, with x in the closure of {y}."""
        return [(x, y) for x in range(self.n) for y in range(self.n)
                if x != y and self.minimal_nbhd[x] >> y & 1]

    def to_dot(self, name: str = "X") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  p{x};" for x in range(self.n)]
        lines += [f"  p{y} -> p{x};" for x, y in self.specialization()]
        lines.append("}")
        return "\n".join(lines)


def discrete(n: int) -> FinSpace:
    return FinSpace(n, frozenset(range(1 << n)))


def indiscrete(n: int) -> FinSpace:
    return FinSpace(n, frozenset({0, (1 << n) - 1}))


def sierpinski() -> FinSpace:
    return FinSpace(2, frozenset({0, 1, 3}))


def from_preorder(n: int, le) -> FinSpace:
    """Open sets are the up-sets of the preorder `le`."""
    ups = [mask(y for y in range(n) if le(x, y)) for x in range(n)]
    opens = [S for S in range(1 << n) if all(ups[x] & ~S == 0 for x in bits(S))]
    return FinSpace(n, frozenset(opens))


def all_topologies(n: int) -> list[FinSpace]:
    """Every topology on range(n) (labeled), in canonical order."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    seen = set()
    for choice in product((False, True), repeat=len(pairs)):
        rel = {p for p, c in zip(pairs, choice) if c}
        if any((x, z) not in rel for (x, y) in rel for (y2, z) in rel if y == y2 and x != z):
            continue
        X = from_preorder(n, lambda a, b, rel=rel: a == b or (a, b) in rel)
        seen.add(X)
    return sorted(seen, key=lambda X: X.open_list)


def partition_topologies(n: int) -> list[FinSpace]:
    """Topologies whose clopen sets form a base (zero-dimensional finite spaces)."""
    return [X for X in all_topologies(n) if is_zero_dimensional(X)]


def is_zero_dimensional(X: FinSpace) -> bool:
    return all(X.minimal_nbhd[x] in X.clopen for x in range(X.n))


# -- Boolean algebras of a space --------------------------------------------


def rc_algebra(X: FinSpace) -> FiniteAlgebra:
    full = X.full
    return FiniteAlgebra(
        X.regular_closed,
        lambda F, G: F | G,
        lambda F, G: X.closure(X.interior(F & G)),
        lambda F: X.closure(full ^ F),
        lambda F, G: F & ~G == 0,
        name="RC(X)",
    )


def ro_algebra(X: FinSpace) -> FiniteAlgebra:
    full = X.full
    return FiniteAlgebra(
        X.regular_open,
        lambda U, V: X.interior(X.closure(U | V)),
        lambda U, V: U & V,
        lambda U: X.interior(full ^ U),
        lambda U, V: U & ~V == 0,
        name="RO(X)",
    )


def co_algebra(X: FinSpace) -> FiniteAlgebra:
    full = X.full
    return FiniteAlgebra(
        X.clopen, lambda U, V: U | V, lambda U, V: U & V, lambda U: full ^ U,
        lambda U, V: U & ~V == 0, name="CO(X)",
    )


def ck_family(X: FinSpace) -> tuple:
    """Compact clopen sets; every subset of a finite space is compact."""
    return X.clopen


def cr_family(X: FinSpace) -> tuple:
    """Compact regular closed sets; equal to RC(X) for finite X."""
    return X.regular_closed


# -- maps -------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceMap:
    source: FinSpace
    target: FinSpace
    points: tuple

    def __post_init__(self):
        if len(self.points) != self.source.n or any(
            not (0 <= p < self.target.n) for p in self.points
        ):
            raise StructureError("point map does not fit the spaces", self.points)

    def image(self, S: int) -> int:
        return mask(self.points[x] for x in bits(S))

    def preimage(self, T: int) -> int:
        return mask(x for x in range(self.source.n) if T >> self.points[x] & 1)

    def compose(self, g: "SpaceMap") -> "SpaceMap":
        """self after g."""
        return SpaceMap(g.source, self.target, tuple(self.points[p] for p in g.points))

    @property
    def continuous(self) -> bool:
        return all(self.preimage(V) in self.source.opens for V in self.target.opens)


def identity_map(X: FinSpace) -> SpaceMap:
    return SpaceMap(X, X, tuple(range(X.n)))


def f_sharp(f: SpaceMap, U: int) -> int:
    """Points of the target whose whole fibre lies in U (computed two ways)."""
    Y = f.target
    direct = mask(y for y in range(Y.n) if f.preimage(1 << y) & ~U == 0)
    via_image = Y.full ^ f.image(f.source.full ^ U)
    if direct != via_image:
        raise InvariantError("fibre formula and image formula disagree", (U, direct, via_image))
    return direct


@dataclass(frozen=True)
class MapFlags:
    continuous: bool
    closed: bool = False
    perfect: bool = False
    onto: bool = False
    irreducible: bool = False
    pi: bool = False
    quasi_pi: bool = False
    mr: bool = False
    skeletal: bool = False
    dense_image: bool = False
    witnesses: dict = field(default_factory=dict, compare=False)

    def names(self) -> list[str]:
        keys = ["continuous", "closed", "perfect", "onto", "irreducible",
                "pi", "quasi_pi", "mr", "skeletal"]
        return [k for k in keys if getattr(self, k)]


def classify_map(f: SpaceMap) -> MapFlags:
    X, Y = f.source, f.target
    if not f.continuous:
        bad = next(V for V in Y.open_list if f.preimage(V) not in X.opens)
        return MapFlags(False, witnesses={"continuous": bad})
    w = {}
    closed = all(f.image(F) in Y.closed_sets for F in sorted(X.closed_sets))
    onto = f.image(X.full) == Y.full
    proper_closed = [F for F in sorted(X.closed_sets) if F != X.full]
    irreducible = onto and all(f.image(F) != Y.full for F in proper_closed)
    pi = closed and irreducible
    dense_image = Y.closure(f.image(X.full)) == Y.full

    # definition route: interior of f#(U) nonempty for nonempty U
    def def_route(family):
        for U in family:
            if U and not Y.interior(f_sharp(f, U)):
                return U
        return None

    # closed-set route: cl(f(F)) != Y for proper F
    def fact_route(family):
        for F in family:
            if F != X.full and Y.closure(f.image(F)) == Y.full:
                return F
        return None

    qpi_def = dense_image and def_route(X.open_list) is None
    qpi_fact = dense_image and fact_route(proper_closed) is None
    mr_def = dense_image and def_route(X.regular_open) is None
    mr_fact = dense_image and fact_route(X.regular_closed) is None
    if qpi_def != qpi_fact or mr_def != mr_fact:
        raise InvariantError("quasi-pi/MR routes disagree", f.points)

    skel_open = all(Y.interior(Y.closure(f.image(U))) for U in X.open_list if U)
    skel_ro = all(Y.interior(Y.closure(f.image(U))) for U in X.regular_open if U)
    if skel_open != skel_ro:
        raise InvariantError("skeletal criteria disagree", f.points)

    # closed + irreducible equals: onto and f#(U) is a nonempty open for nonempty open U
    pon = onto and all(
        f_sharp(f, U) in Y.opens and f_sharp(f, U) != 0 for U in X.open_list if U
    )
    if pon != pi:
        raise InvariantError("pi-map routes disagree", f.points)

    if not qpi_def:
        w["quasi_pi"] = def_route(X.open_list) if dense_image else "image not dense"
    if not mr_def:
        w["mr"] = def_route(X.regular_open) if dense_image else "image not dense"
    flags = MapFlags(True, closed, closed, onto, irreducible, pi, qpi_def, mr_def,
                     skel_open, dense_image, w)
    if (pi and not flags.quasi_pi) or (flags.quasi_pi and not flags.mr) or (
        flags.mr and not flags.skeletal
    ):
        raise InvariantError("map hierarchy violated", f.points)
    if closed and flags.quasi_pi != pi:
        raise InvariantError("closed quasi-pi map that is not a pi-map", f.points)
    return flags


def all_maps(X: FinSpace, Y: FinSpace) -> list[SpaceMap]:
    return [SpaceMap(X, Y, pts) for pts in product(range(Y.n), repeat=X.n)]


def continuous_maps(X: FinSpace, Y: FinSpace) -> list[SpaceMap]:
    return [f for f in all_maps(X, Y) if f.continuous]


# -- weights ----------------------------------------------------------------


def _min_cover(candidates: Sequence[int], ok) -> tuple:
    for k in range(len(candidates) + 1):
        for combo in combinations(candidates, k):
            if ok(combo):
                return combo
    raise AssertionError("no cover found")


def is_base(X: FinSpace, fam: Iterable[int]) -> bool:
    fam = [U for U in fam if U in X.opens]
    return all(
        any(U >> x & 1 and U & ~V == 0 for U in fam) for V in X.opens for x in bits(V)
    )


def is_pi_base(X: FinSpace, fam: Iterable[int]) -> bool:
    fam = [U for U in fam if U]
    return all(any(U & ~V == 0 for U in fam) for V in X.opens if V)


def minimal_base(X: FinSpace) -> tuple:
    cands = [U for U in X.open_list if U]
    return _min_cover(cands, lambda c: is_base(X, c))


def minimal_pi_base(X: FinSpace) -> tuple:
    cands = [U for U in X.open_list if U]
    return _min_cover(cands, lambda c: is_pi_base(X, c))


def space_weight(X: FinSpace) -> int:
    w = len(minimal_base(X))
    # a base must contain every minimal neighbourhood, and those alone form one
    if w != len(set(X.minimal_nbhd) - {0}):
        raise InvariantError("weight search disagrees with minimal neighbourhoods", X)
    return w


def space_pi_weight(X: FinSpace) -> int:
    return len(minimal_pi_base(X))


def is_pi_semiregular(X: FinSpace) -> bool:
    return is_pi_base(X, X.regular_open)


def is_semiregular(X: FinSpace) -> bool:
    return all(
        any(U >> x & 1 and U & ~V == 0 for U in X.regular_open)
        for V in X.opens for x in bits(V)
    )


# -- homeomorphisms ---------------------------------------------------------


def is_homeomorphism(f: SpaceMap) -> bool:
    X, Y = f.source, f.target
    if X.n != Y.n or len(set(f.points)) != X.n:
        return False
    return {f.image(U) for U in X.opens} == set(Y.opens)


def find_homeomorphism(X: FinSpace, Y: FinSpace) -> SpaceMap | None:
    if X.n != Y.n or len(X.opens) != len(Y.opens):
        return None
    for perm in permutations(range(Y.n)):
        f = SpaceMap(X, Y, perm)
        if is_homeomorphism(f):
            return f
    return None


def rc_isomorphism(X: FinSpace, Y: FinSpace) -> StructMap | None:
    return find_isomorphism(rc_algebra(X), rc_algebra(Y))


def is_extremally_disconnected(X: FinSpace) -> bool:
    return all(X.closure(U) in X.opens for U in X.opens)


def sum_space(spaces: Sequence[FinSpace]) -> FinSpace:
    """Disjoint topological sum; the points of the i-th summand come i-th."""
    n = sum(X.n for X in spaces)
    if n > MAX_POINTS:
        raise SizeError("sum too large", n)
    opens = [0]
    offset = 0
    for X in spaces:
        opens = [W | (U << offset) for W in opens for U in X.open_list]
        offset += X.n
    return FinSpace(n, frozenset(opens))
