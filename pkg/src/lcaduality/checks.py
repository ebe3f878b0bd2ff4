"""The fourteen acceptance criteria as runnable checks."""

from __future__ import annotations

import traceback
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Callable

from . import absolutes as ab
from . import completion as cp
from . import corpus
from . import duality as du
from . import ideals as idl
from . import lba
from . import topo
from .ba import (
    FC,
    FINCOFIN,
    SymbolicUltrafilters,
    bounded_ultrafilters,
    compose,
    fin_ideal,
    is_dense_subset,
    is_prime_ideal,
    is_principal,
    pi_weight_poset,
)
from .contact import bounded_clusters, relabel, rho_s, weight
from .errors import ArtifactError

# visiting order of corpus members; verdicts do not depend on it
SEED: int | None = None


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    cases: int = 0
    detail: str = ""
    witness: Any = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"[{status}] {self.number:2d} {self.title}: {self.cases} cases"
        if self.detail:
            text += f"; {self.detail}"
        return text


@dataclass
class Tally:
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, witness=None):
        self.cases += 1
        if not ok:
            self.failures.append(witness)


def _result(n, title, t: Tally, detail="") -> CriterionResult:
    ok = not t.failures
    if not ok:
        detail = (detail + "; " if detail else "") + f"{len(t.failures)} failures"
    return CriterionResult(n, title, ok, t.cases, detail, t.failures[0] if t.failures else None)


# -- 1 ----------------------------------------------------------------------


def c01_zlba_round_trips() -> CriterionResult:
    t = Tally()
    for X in corpus.discrete_spaces(5):
        t.check(du.unit_tx(X).iso, ("unit", X.n))
    for A, I in corpus.dense_pairs(4, SEED):
        w = du.counit_lambda(A, I)
        t.check(w.iso and w.certificates["lambda(I)=CK"], ("counit", A.n, len(I)))
    return _result(1, "Stone/ZLBA round trips", t)


# -- 2 ----------------------------------------------------------------------


def c02_simple_is_principal() -> CriterionResult:
    t = Tally()
    for n in range(5):
        P = idl.Pseudolattice.from_algebra(corpus.Powerset(n))
        principal = {P.down(a) for a in P.elements}
        for J in idl.all_ideals(P):
            t.check(idl.is_simple(P, J) == (J in principal), (n, sorted(J)))
    return _result(2, "simple ideals are exactly the principal ones", t)


# -- 3 ----------------------------------------------------------------------


def c03_sigma_isomorphisms() -> CriterionResult:
    t = Tally()
    for X in corpus.zero_dimensional(4, SEED):
        f = idl.sigma_stone(X)
        t.check(len(f.image()) == len(f.source) == len(topo.co_algebra(X)), ("stone", X))
    for A, I in corpus.dense_pairs(4, SEED):
        f = idl.sigma_zlba(A, I)
        t.check(len(f.image()) == len(f.source) == len(A), ("zlba", A.n))
    return _result(3, "Sigma maps are Boolean isomorphisms", t)


# -- 4 ----------------------------------------------------------------------


def c04_clusters_are_ultrafilters() -> CriterionResult:
    t = Tally()
    for A, I in corpus.dense_pairs(4, SEED):
        cl = {c.members for c in bounded_clusters(rho_s(A, I))}
        uf = set(bounded_ultrafilters(A, I))
        t.check(cl == uf, (A.n, len(I)))
    return _result(4, "bounded clusters equal bounded ultrafilters for rho_s", t)


# -- 5 ----------------------------------------------------------------------


def c05_gbpl_routes() -> CriterionResult:
    t = Tally()
    negatives = 0
    for P in corpus.pseudolattices(3):
        # is_gbpl raises if the interval and principal routes disagree
        v = idl.is_gbpl(P)
        negatives += not v
        t.check(True)
    v = idl.is_gbpl(idl.Pseudolattice.chain(3))
    t.check(not v and v.witness == {"a": 1, "interval": (0, 2)}, v.witness)
    return _result(5, "GBPL characterizations agree", t, f"{negatives} non-GBPL instances")


# -- 6 ----------------------------------------------------------------------


def c06_e_functors() -> CriterionResult:
    t = Tally()
    for A, I in corpus.dense_pairs(3, SEED):
        lba.ez_ep_roundtrip(A, I)
        lba.ep_ez_roundtrip(A, I)
        lba.eg_el_roundtrip(A, I)
        t.check(True)
    for P in corpus.pseudolattices(3):
        if idl.is_gbpl(P):
            lba.el_eg_roundtrip(P)
            t.check(True)
    e_ext, back = lba.symbolic_ep_roundtrip()
    t.check(all(back(e_ext(a)) == a for a in FINCOFIN.sample(4)), "symbolic E^p")
    lba.el_eg_roundtrip(idl.FIN_N)
    lba.eg_el_roundtrip(FINCOFIN, fin_ideal())
    t.check(True)
    return _result(6, "E-functor round trips", t)


# -- 7 ----------------------------------------------------------------------


def c07_product_duality() -> CriterionResult:
    t = Tally()
    Ts = corpus.r_generated(3, SEED)
    for T1, T2 in cartesian(Ts, Ts):
        t.check(du.product_sum_check([T1, T2]).iso, (T1.name, T2.name))
    return _result(7, "dual of a product is the sum of duals", t)


# -- 8 ----------------------------------------------------------------------


def c08_weight() -> CriterionResult:
    t = Tally()
    for T in corpus.lca_corpus(3, SEED):
        wa = weight(T)
        wx = topo.space_weight(du.psi_a(T).space)
        t.check(wa == wx, {"triple": T.name, "algebra_weight": wa, "space_weight": wx})
    return _result(8, "weight of an LCA equals weight of its dual", t)


# -- 9 ----------------------------------------------------------------------


def c09_pi_weight() -> CriterionResult:
    t = Tally()
    for X in corpus.spaces(4, SEED):
        if topo.is_pi_semiregular(X):
            a, b = topo.space_pi_weight(X), pi_weight_poset(topo.rc_algebra(X))
            t.check(a == b, (X, a, b))
    return _result(9, "pi-weight of a space equals pi-weight of RC", t)


# -- 10 ---------------------------------------------------------------------


def c10_map_taxonomy() -> CriterionResult:
    t = Tally()
    Xs = corpus.spaces(3, SEED, start=1)
    for X, Y in cartesian(Xs, Xs):
        for f in topo.continuous_maps(X, Y):
            # classify_map raises if any two routes disagree
            m = topo.classify_map(f)
            ok = (not m.pi or m.quasi_pi) and (not m.quasi_pi or m.mr) and (not m.mr or m.skeletal)
            ok = ok and ((m.closed and m.quasi_pi) == m.pi)
            t.check(ok, f.points)
    return _result(10, "map taxonomy containments", t)


# -- 11 ---------------------------------------------------------------------


def c11_mr_rc_iso() -> CriterionResult:
    t = Tally()
    Xs = corpus.spaces(3, SEED, start=1)
    for X, Y in cartesian(Xs, Xs):
        for f in topo.continuous_maps(X, Y):
            if topo.classify_map(f).mr:
                t.check(ab.adjoint_pair(f).psi_iso, f.points)
    return _result(11, "MR-maps induce RC isomorphisms", t)


# -- 12 ---------------------------------------------------------------------


def c12_absolutes() -> CriterionResult:
    t = Tally()
    for X in corpus.spaces(4, SEED):
        w = ab.absolute_space(X)
        again = ab.absolute_space(w.Y)
        ok = w.extremally_disconnected and w.certificates["constructions_agree"]
        ok = ok and topo.find_homeomorphism(w.Y, again.Y) is not None
        t.check(ok, X)
    return _result(12, "absolutes", t)


# -- 13 ---------------------------------------------------------------------


def c13_completion() -> CriterionResult:
    t = Tally()
    for T in corpus.lca_corpus(3, SEED):
        c1 = cp.lca_completion(T)
        t.check(all(c1.certificates.values()), ("certificate", T.name))
        t.check(cp.extend_contact_idempotent(T), ("idempotence", T.name))
        c2 = cp.lca_completion(T)
        t.check(cp.completions_equivalent(c1, c2)[0], ("rerun", T.name))
        n = T.algebra.n
        if n > 1:
            # complete a relabeled copy and pull it back along the relabeling
            perm = list(range(1, n)) + [0]
            S = relabel(T, perm)
            move = cp.StructMap(T.algebra, S.algebra, lambda a, p=perm: sum(
                1 << p[i] for i in range(n) if a >> i & 1), "move")
            c3 = cp.lca_completion(S)
            pulled = cp.CompletionPair(T, compose(c3.embedding, move), c3.target)
            t.check(cp.completions_equivalent(c1, pulled)[0], ("relabeled", T.name))
        cp.delta_correspondence(cp.identity_embedding(T), T, T)
    sym = cp.lca_completion(rho_s(FINCOFIN, fin_ideal()))
    t.check(all(v for k, v in sym.certificates if k != "target"), "symbolic completion")
    t.check(cp.symbolic_extend_idempotent(), "symbolic idempotence")
    return _result(13, "LCA-completions", t)


# -- 14 ---------------------------------------------------------------------


def c14_fincofin() -> CriterionResult:
    t = Tally()
    I = fin_ideal()
    rep = lba.classify_pair(FINCOFIN, I)
    t.check(rep.lba and rep.plba and not rep.zlba, rep.flags())
    t.check(rep.witnesses.get("zlba") is not None, "no ZLBA witness")
    t.check(bounded_ultrafilters(FINCOFIN, I) == SymbolicUltrafilters(FC(frozenset(), True), False),
            "bounded ultrafilters")
    t.check(bool(is_dense_subset(FINCOFIN, I)), "density")
    t.check(bool(is_prime_ideal(FINCOFIN, I)), "primality")
    t.check(not is_principal(FINCOFIN, I), "principality")
    t.check(lba.prime_dense_criterion(FINCOFIN, I).agree, "prime-dense")
    return _result(14, "FinCofin with Fin", t, f"ZLBA witness {rep.witnesses.get('zlba')!r}")


CRITERIA: list[Callable[[], CriterionResult]] = [
    c01_zlba_round_trips, c02_simple_is_principal, c03_sigma_isomorphisms,
    c04_clusters_are_ultrafilters, c05_gbpl_routes, c06_e_functors, c07_product_duality,
    c08_weight, c09_pi_weight, c10_map_taxonomy, c11_mr_rc_iso, c12_absolutes,
    c13_completion, c14_fincofin,
]


def run_criterion(i: int) -> CriterionResult:
    fn = CRITERIA[i - 1]
    try:
        return fn()
    except (ArtifactError, AssertionError) as e:
        tb = traceback.format_exception_only(type(e), e)[-1].strip()
        return CriterionResult(i, fn.__name__, False, 0, f"raised {tb}")


def run_all() -> list[CriterionResult]:
    return [run_criterion(i) for i in range(1, len(CRITERIA) + 1)]
