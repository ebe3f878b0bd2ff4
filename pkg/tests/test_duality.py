import pytest

from lcaduality import duality as du
from lcaduality import lba, topo
from lcaduality.ba import FC, FINCOFIN, Powerset, StructMap, fin_ideal, ideal_of, whole
from lcaduality.contact import from_atom_relation, rho_s
from lcaduality.errors import PreconditionError, UnsupportedError
from lcaduality.lba import LocalPair
from lcaduality.topo import FinSpace, SpaceMap


def test_theta_t_discrete():
    p = du.theta_t(topo.discrete(2))
    assert sorted(p.algebra.elements) == [0, 1, 2, 3] and p.ideal.is_whole


def test_theta_t_sierpinski_degenerate():
    p = du.theta_t(topo.sierpinski())
    assert sorted(p.algebra.elements) == [0, 3] and sorted(p.ideal) == [0, 3]


def test_theta_t_mor_identity_and_discontinuous():
    X = topo.discrete(2)
    m = du.theta_t_mor(topo.identity_map(X))
    assert all(m.map(a) == a for a in m.source.algebra.elements)
    with pytest.raises(PreconditionError):
        du.theta_t_mor(SpaceMap(topo.sierpinski(), topo.sierpinski(), (1, 0)))


def test_theta_a_three_points():
    A = Powerset(3)
    D = du.theta_a(A, whole(A))
    assert D.space.is_discrete() and D.space.n == 3


def test_theta_a_fincofin_descriptor():
    D = du.theta_a(FINCOFIN, fin_ideal())
    assert isinstance(D, du.CountableDiscrete)
    assert D.isolating_set(5) == FC.of(5)
    assert not D.ultrafilters.cofinite


def test_theta_a_rejects_non_lba():
    A = Powerset(2)
    with pytest.raises(PreconditionError):
        du.theta_a(A, ideal_of(A, A.down(1)))


def test_theta_a_mor_identity():
    A = Powerset(2)
    m = lba.identity_morphism(LocalPair.full(A))
    f = du.theta_a_mor(m)
    assert f.points == (0, 1)


def test_functoriality_of_theta():
    A, B, C = Powerset(1), Powerset(2), Powerset(3)
    f = lba.LbaMorphism.make(LocalPair.full(A), LocalPair.full(B), lba.hom_from_atom_map(A, B, [0, 0]))
    g = lba.LbaMorphism.make(LocalPair.full(B), LocalPair.full(C), lba.hom_from_atom_map(B, C, [0, 1, 1]))
    gf = g.compose(f)
    lhs = du.theta_a_mor(gf)
    rhs = du.theta_a_mor(f).compose(du.theta_a_mor(g))
    assert lhs.points == rhs.points


def test_unit_is_atom_bijection_on_discrete():
    w = du.unit_tx(topo.discrete(3))
    assert w.iso and w.forward.points == (0, 1, 2)
    assert w.backward.points == (0, 1, 2)


def test_unit_not_iso_on_non_discrete():
    w = du.unit_tx(topo.sierpinski())
    assert not w.iso and not w.certificates["injective"]


def test_counit_p2():
    A = Powerset(2)
    w = du.counit_lambda(A, whole(A))
    assert w.iso and w.certificates["lambda(I)=CK"]
    assert [w.forward(a) for a in A.elements] == [0, 1, 2, 3]


def test_naturality_nonidentity():
    X, Y = topo.discrete(2), topo.discrete(3)
    assert du.naturality_check(SpaceMap(X, Y, (2, 0)))
    assert du.naturality_check(SpaceMap(topo.sierpinski(), topo.indiscrete(1), (0, 0)))


def test_psi_t_discrete_is_rho_s():
    T = du.psi_t(topo.discrete(3))
    S = rho_s(Powerset(3))
    assert T.pairs == S.pairs


def test_psi_a_rho_s_matches_theta_a():
    for n in range(4):
        A = Powerset(n)
        assert du.rho_s_dual_matches_theta(A, whole(A))


@pytest.mark.parametrize("n", range(5))
def test_discrete_round_trip(n):
    assert du.discrete_round_trip(topo.discrete(n)) is not None


def test_psi_a_unsupported_symbolic():
    with pytest.raises(UnsupportedError):
        du.psi_a(rho_s(FINCOFIN, fin_ideal()))


def test_stone_dual_matches_theta_a():
    for n in range(4):
        A = Powerset(n)
        S = du.stone_dual(A)
        D = du.theta_a(A, whole(A))
        assert du.match_dual_spaces(S, D) is not None


def test_stone_dual_of_four_element_subalgebra():
    A = Powerset(3)
    from lcaduality.ba import subalgebra

    S = du.stone_dual(subalgebra(A, [0, 1, 6, 7]))
    assert S.space.n == 2 and S.space.is_discrete()


def test_perfect_duality_collapse():
    A, B = Powerset(2), Powerset(1)
    m = lba.LbaMorphism.make(LocalPair.full(A), LocalPair.full(B), lba.hom_from_atom_map(A, B, [1]))
    ev = du.perfect_duality_check(m)
    assert ev["perfect"] and ev["map"] == (1,)
    assert du.perfect_duality_check(lba.identity_morphism(LocalPair.full(A)))["perfect"]


def test_perfect_duality_rejects_non_plba():
    A = Powerset(1)
    phi = StructMap(A, FINCOFIN, lambda a: FINCOFIN.one if a else FINCOFIN.zero, "phi")
    m = lba.LbaMorphism.make(LocalPair.full(A), LocalPair(FINCOFIN, fin_ideal()), phi)
    with pytest.raises(PreconditionError):
        du.perfect_duality_check(m)


def test_product_sum_examples():
    T1 = rho_s(Powerset(1))
    w = du.product_sum_check([T1, T1])
    assert w.iso and w.forward.target.n == 2 and w.forward.target.is_discrete()
    assert du.product_sum_check([T1]).forward.points == (0,)
    assert du.product_sum_check([]).forward.target.n == 0


def test_product_sum_merged_clusters():
    T = from_atom_relation(Powerset(3), [(0, 1)])
    w = du.product_sum_check([T, rho_s(Powerset(1))])
    assert w.iso and w.forward.target.n == 3


def test_psi_a_open_base_certificate():
    T = from_atom_relation(Powerset(3), [(0, 1), (1, 2)])
    D = du.psi_a(T)
    assert D.certificates["open_base"] and D.space.n == 2


def test_psi_a_chain_space_rc():
    X = FinSpace.make(3, [0, 1, 3, 7])
    D = du.psi_a(du.psi_t(X))
    assert D.space.n == 1
