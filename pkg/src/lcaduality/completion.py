"""delta-ideals, their prime elements, and LCA-completions.

A delta-ideal of (A, rho, BB) is an ideal J contained in BB such that every
member of J is well inside some member of J.  They form a frame ordered by
inclusion; prime elements are the meet-irreducible members other than the top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from .ba import FC, FINCOFIN, FinCofin, Ideal, StructMap, boolean_homs, fin_ideal, hom_check
from .contact import ContactTriple, check_axioms, is_base, is_lca, rho_s
from .duality import DualSpace, psi_a, psi_t
from .errors import InvariantError, PreconditionError, UnsupportedError


@dataclass(frozen=True)
class DeltaIdeal:
    host: ContactTriple
    members: frozenset

    def __contains__(self, a) -> bool:
        return a in self.members

    def __le__(self, other: "DeltaIdeal") -> bool:
        return self.members <= other.members

    def __len__(self) -> int:
        return len(self.members)


def _require_finite(T: ContactTriple):
    if not T.finite:
        raise UnsupportedError("delta-ideals are enumerated for finite triples only")


def is_delta_ideal(T: ContactTriple, S) -> bool:
    A = T.algebra
    S = frozenset(S)
    if A.zero not in S or any(s not in T.bounded for s in S):
        return False
    if any(A.join(x, y) not in S for x in S for y in S):
        return False
    if any(x not in S for s in S for x in A.down(s)):
        return False
    return all(any(T.ll(a, b) for b in S) for a in S)


def delta_ideals(T: ContactTriple) -> list[DeltaIdeal]:
    """All delta-ideals, smallest first.  Ideals of a finite algebra are principal."""
    _require_finite(T)
    A = T.algebra
    seen = {}
    for a in A.sort(T.bounded):
        J = A.down(a)
        if is_delta_ideal(T, J):
            seen.setdefault(J, DeltaIdeal(T, J))
    return sorted(seen.values(), key=lambda J: (len(J), sorted(A.key(x) for x in J.members)))


def frame_top(frame: list[DeltaIdeal]) -> DeltaIdeal:
    top = max(frame, key=len)
    if not all(J <= top for J in frame):
        raise InvariantError("delta-ideals have no largest member", top.members)
    return top


def is_prime_element(T: ContactTriple, J: DeltaIdeal, frame: list | None = None) -> bool:
    """J below the top, and J1 meet J2 <= J forces J1 <= J or J2 <= J."""
    frame = delta_ideals(T) if frame is None else frame
    if J.members == frame_top(frame).members:
        return False
    for J1 in frame:
        for J2 in frame:
            if J1.members & J2.members <= J.members and not (J1 <= J or J2 <= J):
                return False
    return True


def prime_elements(T: ContactTriple) -> list[DeltaIdeal]:
    frame = delta_ideals(T)
    return [J for J in frame if is_prime_element(T, J, frame)]


# -- embeddings -------------------------------------------------------------


def is_lca_embedding(phi: StructMap, T1: ContactTriple, T2: ContactTriple) -> bool:
    """Injective homomorphism reflecting and preserving contact and boundedness."""
    A = T1.algebra
    if not hom_check(phi):
        return False
    if len({phi(a) for a in A.elements}) != len(A):
        return False
    if any(T1.rho(a, b) != T2.rho(phi(a), phi(b)) for a in A.elements for b in A.elements):
        return False
    return all((a in T1.bounded) == (phi(a) in T2.bounded) for a in A.elements)


def is_dense_image(phi: StructMap) -> bool:
    A, B = phi.source, phi.target
    img = {phi(a) for a in A.elements}
    return all(any(x != B.zero and B.le(x, b) for x in img) for b in B.elements if b != B.zero)


def is_dv_dense_image(phi: StructMap, T1: ContactTriple, T2: ContactTriple) -> bool:
    return bool(is_base(T2, {phi(a) for a in T1.bounded}))


def _check_dense_embedding(phi, T1, T2):
    if not is_lca_embedding(phi, T1, T2):
        raise PreconditionError("not an LCA-embedding", phi.name)
    if not is_dense_image(phi):
        raise PreconditionError("image is not dense", phi.name)
    if not is_dv_dense_image(phi, T1, T2):
        raise PreconditionError("bounded image is not dV-dense", phi.name)


def restrict_delta(J: DeltaIdeal, phi: StructMap, T1: ContactTriple) -> DeltaIdeal:
    """Pull a delta-ideal of the larger triple back along phi."""
    A = T1.algebra
    return DeltaIdeal(T1, frozenset(a for a in A.elements if phi(a) in J))


def extend_delta(J: DeltaIdeal, phi: StructMap, T2: ContactTriple) -> DeltaIdeal:
    """Down-closure of phi(J) in the larger algebra."""
    B = T2.algebra
    img = [phi(a) for a in J.members]
    return DeltaIdeal(T2, frozenset(b for b in B.elements if any(B.le(b, x) for x in img)))


def delta_correspondence(phi: StructMap, T1: ContactTriple, T2: ContactTriple) -> dict:
    """Check that restriction and extension are mutually inverse and preserve primes."""
    _check_dense_embedding(phi, T1, T2)
    f1, f2 = delta_ideals(T1), delta_ideals(T2)
    B = T2.algebra
    bb = extend_delta(DeltaIdeal(T1, frozenset(T1.bounded)), phi, T2)
    if bb.members != frozenset(T2.bounded):
        raise InvariantError("down-closure of the bounded image differs from BB'", sorted(B.key(x) for x in bb.members))
    p1 = {J.members for J in f1 if is_prime_element(T1, J, f1)}
    p2 = {J.members for J in f2 if is_prime_element(T2, J, f2)}
    for J in f2:
        r = restrict_delta(J, phi, T1)
        if r.members not in {K.members for K in f1}:
            raise InvariantError("restriction is not a delta-ideal", J.members)
        if extend_delta(r, phi, T2).members != J.members:
            raise InvariantError("extension of the restriction differs", J.members)
        if (J.members in p2) != (r.members in p1):
            raise InvariantError("primality not preserved by restriction", J.members)
    for J in f1:
        e = extend_delta(J, phi, T2)
        if restrict_delta(e, phi, T1).members != J.members:
            raise InvariantError("restriction of the extension differs", J.members)
        if (J.members in p1) != (e.members in p2):
            raise InvariantError("primality not preserved by extension", J.members)
    return {"delta_ideals": (len(f1), len(f2)), "primes": (len(p1), len(p2))}


def identity_embedding(T: ContactTriple) -> StructMap:
    A = T.algebra
    return StructMap(A, A, lambda a: a, "id")


# -- completions ------------------------------------------------------------


@dataclass
class CompletionPair:
    source: ContactTriple
    embedding: StructMap
    target: ContactTriple
    dual: Any = None
    certificates: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SymbolicCompletion:
    """(FinCofin, rho_s, Fin) inside (P(N), rho_s, Fin) by inclusion.

    The dual space is the countable discrete space, whose regular closed sets
    are all subsets of N.
    """

    source: ContactTriple
    certificates: tuple

    def embed(self, a: FC) -> FC:
        return self.source.algebra.unwrap(a)


def lca_completion(T: ContactTriple) -> CompletionPair | SymbolicCompletion:
    if not T.finite:
        return _symbolic_completion(T)
    if not is_lca(T):
        raise PreconditionError("completion needs a local contact algebra", check_axioms(T).failures())
    X: DualSpace = psi_a(T)
    target = psi_t(X.space)
    phi = StructMap(T.algebra, target.algebra, lambda a: X.lam[a], "lambda_g")
    cert = {
        "lca_embedding": is_lca_embedding(phi, T, target),
        "dense": is_dense_image(phi),
        "dv_dense": is_dv_dense_image(phi, T, target),
        "target_clca": check_axioms(target).clca,
    }
    if not all(cert.values()):
        raise InvariantError("completion certificate failed", cert)
    return CompletionPair(T, phi, target, X, cert)


def _symbolic_completion(T: ContactTriple) -> SymbolicCompletion:
    A = T.algebra
    if not isinstance(A, FinCofin) or T.bounded != fin_ideal(A):
        raise UnsupportedError("symbolic completions cover (FinCofin, rho_s, Fin) only")
    sample = A.sample(4)
    if any(T.rho(a, b) != (A.meet(a, b) != A.zero) for a in sample for b in sample):
        raise UnsupportedError("symbolic completions cover the overlap relation only")
    fin = [a for a in sample if a in T.bounded]
    # every a << c in Fin is interpolated by a itself, so Fin is dV-dense
    dv = all(A.le(a, a) and A.le(a, c) for a in fin for c in fin if T.ll(a, c))
    # singletons are bounded minorants of every nonzero element
    dense = all(any(A.le(A.atom(n), a) for n in range(5)) for a in sample if a != A.zero)
    cert = (("dv_dense", dv), ("dense", dense), ("target", "P(N) with overlap and Fin"))
    if not (dv and dense):
        raise InvariantError("symbolic completion certificate failed", cert)
    return SymbolicCompletion(T, cert)


# -- the contact-extension formulas -----------------------------------------


def extend_contact(T: ContactTriple, phi: StructMap) -> ContactTriple:
    """The relation on the codomain of a dense embedding given by the two case formulas."""
    A, B = T.algebra, phi.target
    if not is_dense_image(phi):
        raise PreconditionError("A is not dense in B", phi.name)
    Bm = list(T.bounded)
    below = lambda x, S: any(B.le(x, phi(s)) for s in S)  # noqa: E731
    primes = prime_elements(T)

    def ll_case1(a1, b1):
        return any(
            B.le(a1, phi(a)) and B.le(phi(b), b1) and T.ll(a, b)
            for a in Bm for b in Bm
        )

    def bounded_outside(J):
        return [x for x in B.elements if below(x, Bm) and not below(x, J.members)]

    def ll(a1, b1):
        if below(a1, Bm):
            return ll_case1(a1, b1)
        ca1 = B.comp(a1)
        for J in primes:
            pool = bounded_outside(J)
            if not (any(ll_case1(a, ca1) for a in pool) or any(ll_case1(b, b1) for b in pool)):
                return False
        return True

    table = {(x, y): not ll(x, B.comp(y)) for x in B.elements for y in B.elements}
    bounded = Ideal(B, frozenset(x for x in B.elements if below(x, Bm)))
    eta = ContactTriple(B, lambda x, y: table[(x, y)], bounded, "eta")
    if not check_axioms(eta).holds("C2"):
        raise InvariantError("extended relation fails C2", check_axioms(eta).failures())
    return eta


def extend_contact_idempotent(T: ContactTriple) -> bool:
    """On A = B the formulas must give back rho."""
    eta = extend_contact(T, identity_embedding(T))
    A = T.algebra
    return all(eta.rho(a, b) == T.rho(a, b) for a in A.elements for b in A.elements)


def symbolic_extend_ll(a1: FC, b1: FC) -> bool:
    """a1 <<_eta b1 on (FinCofin, rho_s, Fin) extended to itself.

    The primes of the delta-ideal frame are J_n = Fin(N minus {n}); the bounded
    elements outside J_n are the finite sets containing n, and {n} is the
    least of them.  Indices outside the supports of a1, b1 all behave alike,
    so one fresh index stands in for them.
    """
    T = rho_s(FINCOFIN, fin_ideal())
    A = T.algebra

    def ll1(a, b):
        # Case 1: a, b range over Fin; rho_s makes << the order
        return A.le(a, b)

    if not a1.cofinite:
        return ll1(a1, b1)
    ca1 = A.comp(a1)
    idx = set(a1.atoms) | set(b1.atoms)
    idx.add(max(idx, default=-1) + 1)
    for n in sorted(idx):
        w = A.atom(n)
        if not (ll1(w, ca1) or ll1(w, b1)):
            return False
    return True


def symbolic_extend_idempotent(width: int = 4) -> bool:
    A = FINCOFIN
    T = rho_s(A, fin_ideal())
    sample = A.sample(width)
    return all(symbolic_extend_ll(a, b) == T.ll(a, b) for a in sample for b in sample)


# -- equivalence of completions ---------------------------------------------


def _boolean_isos(A, B):
    if len(A) != len(B):
        return
    n = len(A.atoms)
    for perm in permutations(range(n)):
        table = {a: B.join_all(B.atoms[perm[A.atoms.index(x)]] for x in A.atoms_below(a))
                 for a in A.elements}
        yield StructMap.from_table(A, B, table, "eta")


def completions_equivalent(c1: CompletionPair, c2: CompletionPair) -> tuple[bool, Any]:
    """Search for an LCA-isomorphism eta of targets with c2.embedding = eta . c1.embedding."""
    T1, T2 = c1.target, c2.target
    A1, A2 = T1.algebra, T2.algebra
    if len(A1) != len(A2):
        return False, {"reason": "different cardinalities", "sizes": (len(A1), len(A2))}
    tried = 0
    for eta in _boolean_isos(A1, A2):
        tried += 1
        if not is_lca_embedding(eta, T1, T2):
            continue
        if all(eta(c1.embedding(a)) == c2.embedding(a) for a in c1.source.algebra.elements):
            return True, eta
    return False, {"reason": "exhausted", "candidates": tried}


def dense_embedding_exists(T: ContactTriple, T2: ContactTriple) -> bool:
    """Is there an LCA-embedding of T into the completion of T2 with dV-dense bounded image?"""
    C = psi_t(psi_a(T2).space)
    for phi in boolean_homs(T.algebra, C.algebra):
        if is_lca_embedding(phi, T, C) and is_dense_image(phi) and is_dv_dense_image(phi, T, C):
            return True
    return False
