import pytest

from lcaduality import absolutes as ab
from lcaduality import topo
from lcaduality.ba import FiniteAlgebra, Powerset, StructMap, hom_check
from lcaduality.errors import PreconditionError
from lcaduality.topo import FinSpace, SpaceMap

FOUR_RC = FinSpace.make(3, [0, 1, 2, 3, 7])


def test_absolute_of_discrete_is_itself():
    w = ab.absolute_space(topo.discrete(3))
    assert topo.find_homeomorphism(w.Y, topo.discrete(3)) is not None


def test_absolute_of_sierpinski_is_a_point():
    assert ab.absolute_space(topo.sierpinski()).Y.n == 1


def test_absolute_of_four_element_rc_space():
    w = ab.absolute_space(FOUR_RC)
    assert w.Y.n == 2 and w.Y.is_discrete() and hom_check(w.rc_iso)


@pytest.mark.parametrize("X", topo.all_topologies(3))
def test_absolute_idempotent(X):
    w = ab.absolute_space(X)
    again = ab.absolute_space(w.Y)
    assert topo.find_homeomorphism(w.Y, again.Y) is not None
    assert w.extremally_disconnected


def test_coabsolute_examples():
    assert ab.coabsolute(topo.discrete(2), topo.discrete(2))[0]
    assert not ab.coabsolute(topo.discrete(2), topo.sierpinski())[0]
    ok, iso = ab.coabsolute(topo.discrete(2), FOUR_RC)
    assert ok and hom_check(iso)


def test_coabsolute_is_an_equivalence():
    spaces = topo.all_topologies(3)
    rel = {(i, j) for i, X in enumerate(spaces) for j, Y in enumerate(spaces)
           if ab.coabsolute(X, Y)[0]}
    n = len(spaces)
    assert all((i, i) in rel for i in range(n))
    assert all((j, i) in rel for i, j in rel)
    assert all((i, k) in rel for i, j in rel for j2, k in rel if j == j2)


def test_adjoint_pair_identity():
    X = FOUR_RC
    p = ab.adjoint_pair(topo.identity_map(X))
    assert p.psi_iso
    assert all(p.psi(F) == F and p.phi(F) == F for F in X.regular_closed)


def test_adjoint_pair_requires_skeletal():
    f = SpaceMap(topo.discrete(2), topo.sierpinski(), (0, 1))
    with pytest.raises(PreconditionError):
        ab.adjoint_pair(f)


def test_skeletal_non_mr_map():
    found = False
    for X in topo.all_topologies(2):
        for Y in topo.all_topologies(2):
            for f in topo.continuous_maps(X, Y):
                m = topo.classify_map(f)
                if m.skeletal and not m.mr:
                    p = ab.adjoint_pair(f)
                    found = True
                    assert not p.certificates["mr"]
    assert found


def test_ponomarev_identity_and_density_failure():
    P = Powerset(2)
    r = ab.ponomarev_embedding_check(StructMap(P, P, lambda a: a, "id"))
    assert r["conclusion"] == "isomorphism" and r["pi_weights"] == (2, 2)
    r = ab.ponomarev_embedding_check(StructMap(Powerset(1), P, lambda a: 3 * a, "diag"))
    assert r["conclusion"] is None and not r["dense"] and r["witness"] == 1


def test_ponomarev_bijection_onto_rc():
    P = Powerset(2)
    rc = FiniteAlgebra([0, 3, 12, 15], lambda a, b: a | b, lambda a, b: a & b, lambda a: 15 ^ a)
    table = {0: 0, 1: 3, 2: 12, 3: 15}
    r = ab.ponomarev_embedding_check(StructMap.from_table(P, rc, table))
    assert r["conclusion"] == "isomorphism"


def test_ponomarev_join_failure():
    P = Powerset(2)
    r = ab.ponomarev_embedding_check(StructMap(P, P, lambda a: 3 if a else 0, "collapse"))
    assert not r["bounds"]


def test_sigma_disjoint_dense():
    assert ab.sigma_disjoint_dense(Powerset(3)) == [(1, 2, 4)]
    assert ab.sigma_disjoint_dense(Powerset(0)) == []


@pytest.mark.parametrize("X", topo.all_topologies(3))
def test_sigma_disjoint_pi_base(X):
    levels = ab.sigma_disjoint_pi_base(X)
    assert len(levels) == 1 and topo.is_pi_base(X, levels[0])


def test_dense_subset_criterion():
    P = Powerset(2)
    r = ab.dense_subset_criterion(P, 2)
    assert r.exists and r.dense == (1, 2) and r.space.n == 2
    r = ab.dense_subset_criterion(P, 1)
    assert not r.exists and "2" in r.reason
    r = ab.dense_subset_criterion(P, 4)
    assert r.exists and len(r.dense) == 4
    assert not ab.dense_subset_criterion(P, 5).exists
