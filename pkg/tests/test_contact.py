import pytest
from hypothesis import given, strategies as st

from lcaduality import contact as ct
from lcaduality.ba import FC, FINCOFIN, Powerset, fin_ideal, hom_check, ideal_of, whole
from lcaduality.errors import PreconditionError, UnsupportedError


def test_rho_s_nonzero_contact_pairs_p2():
    T = ct.rho_s(Powerset(2))
    nonzero = [(a, b) for a, b in T.pairs if a and b]
    # {0}{0}, {1}{1}, and five pairs involving the top
    assert len(nonzero) == 7


@pytest.mark.parametrize("n", range(4))
def test_rho_s_is_clca(n):
    rep = ct.check_axioms(ct.rho_s(Powerset(n)))
    assert rep.clca and rep.nca


def test_rho_s_needs_dense_ideal():
    A = Powerset(2)
    with pytest.raises(PreconditionError):
        ct.rho_s(A, ideal_of(A, A.down(1)))


def test_rho_s_fincofin():
    rep = ct.check_axioms(ct.rho_s(FINCOFIN, fin_ideal()))
    assert rep.lca and not rep.clca
    assert not rep.verdicts["complete"]


def test_r_generated_fails_bc3():
    T = ct.from_atom_relation(Powerset(2), [(0, 1)])
    rep = ct.check_axioms(T)
    assert rep.contact and not rep.lca
    assert not rep.verdicts["BC3"] and not rep.verdicts["extensionality"]


def test_asymmetric_pairs_fail_c2():
    A = Powerset(1)
    T = ct.from_pairs(A, [(1, 1)])
    assert ct.check_axioms(T).contact
    A = Powerset(2)
    pairs = [(a, b) for a in A.elements for b in A.elements if a & b] + [(1, 2)]
    rep = ct.check_axioms(ct.from_pairs(A, pairs))
    assert rep.verdicts["C2"].witness == (1, 2)


@given(st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2))), st.integers(0, 7), st.integers(0, 7))
def test_atom_relation_contact_is_symmetric(R, a, b):
    T = ct.from_atom_relation(Powerset(3), R)
    assert T.rho(a, b) == T.rho(b, a)
    assert ct.check_axioms(T).contact


def test_dzlc_condition():
    assert ct.dzlc_condition(ct.rho_s(Powerset(2)))
    assert ct.dzlc_condition(ct.rho_s(FINCOFIN, fin_ideal()))


def test_base_and_weight_rho_s():
    # every element is well inside itself, so a base must contain every element
    for n in range(4):
        T = ct.rho_s(Powerset(n))
        assert ct.weight(T) == 2 ** n
        assert ct.is_base(T, Powerset(n).elements)
    T = ct.rho_s(Powerset(2))
    v = ct.is_base(T, [0, 1, 2])
    assert not v and v.witness == (3, 3)


def test_a_s():
    T = ct.from_atom_relation(Powerset(2), [(0, 1)])
    assert ct.a_s(T) == [0, 3]


def test_contact_from_dense_subalgebra():
    A = Powerset(2)
    T = ct.contact_from_dense_subalgebra(A, A.elements)
    assert ct.is_lca(T) and ct.weight(T) == 4


def test_dense_fact_conditions():
    T = ct.rho_s(Powerset(2))
    a, b, c, d = ct.dense_fact_conditions(T, Powerset(2).elements)
    assert a and b and c and d


def test_product_of_singletons_is_rho_s_p2():
    T1 = ct.rho_s(Powerset(1))
    P = ct.product([T1, T1])
    assert ct.find_lca_isomorphism(P, ct.rho_s(Powerset(2))) is not None
    assert P.coords(3) == [1, 1]


def test_empty_product_is_trivial():
    P = ct.product([])
    assert P.algebra.trivial and not P.pairs


def test_clusters_of_rho_s_are_ultrafilters():
    A = Powerset(3)
    cl = ct.clusters(ct.rho_s(A))
    assert {c.members for c in cl} == {A.up(x) for x in A.atoms}


def test_path_clusters_merge():
    T = ct.from_atom_relation(Powerset(3), [(0, 1)])
    assert len(ct.clusters(T)) == 2


def test_clusters_unsupported_symbolic():
    with pytest.raises(UnsupportedError):
        ct.clusters(ct.rho_s(FINCOFIN, fin_ideal()))


def test_relabel_is_isomorphic():
    T = ct.from_atom_relation(Powerset(3), [(0, 1)])
    S = ct.relabel(T, [2, 0, 1])
    f = ct.find_lca_isomorphism(T, S)
    assert f is not None and hom_check(f)
    assert ct.find_lca_isomorphism(T, ct.rho_s(Powerset(3))) is None


def test_minimal_base_empty_constraint():
    A = Powerset(1)
    T = ct.from_pairs(A, [(1, 1)], whole(A))
    assert ct.weight(T) == 2


def test_fincofin_membership_in_triple():
    T = ct.rho_s(FINCOFIN, fin_ideal())
    a = FINCOFIN.wrap(FC.of(1))
    assert T.ll(a, a) and T.rho(a, FINCOFIN.wrap(FC.cofinite_of(2)))
