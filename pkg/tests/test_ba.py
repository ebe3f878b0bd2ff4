from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from lcaduality.ba import (
    ALEPH_0, FC, FINCOFIN, FiniteAlgebra, Ideal, Powerset, StructMap, SymbolicUltrafilters,
    boolean_homs, bounded_ultrafilters, check_boolean_laws, fin_ideal, find_isomorphism,
    generated_subalgebra, hom_check, ideal_generated, ideal_of, is_dense_subset, is_filter,
    is_ideal, is_prime_ideal, is_principal, make_algebra, min_dense_subset, pi_weight_poset,
    principal, subalgebra, ultrafilters, whole,
)
from lcaduality.errors import MembershipError, SizeError, StructureError


def fc_strategy():
    atoms = st.frozensets(st.integers(0, 6), max_size=4)
    return st.builds(FC, atoms, st.booleans())


# -- Powerset ----------------------------------------------------------------


@pytest.mark.parametrize("n", range(5))
def test_powerset_boolean_laws(n):
    assert check_boolean_laws(Powerset(n))


def test_powerset_basics():
    P = Powerset(3)
    assert len(P) == 8 and P.zero == 0 and P.one == 7
    assert P.atoms == (1, 2, 4)
    assert P.down(5) == frozenset({0, 1, 4, 5})
    assert Powerset.element([0, 2]) == 5 and Powerset.indices(5) == [0, 2]


def test_trivial_powerset():
    P = Powerset(0)
    assert P.trivial and P.zero == P.one == 0 and P.atoms == ()


def test_size_cap():
    with pytest.raises(SizeError):
        Powerset(17)
    assert len(Powerset(5, max_atoms=5)) == 32


def test_require_rejects_foreign_elements():
    with pytest.raises(MembershipError):
        Powerset(2).require(4)


def test_make_algebra_forms():
    assert make_algebra({"kind": "powerset", "atoms": 2}).n == 2
    assert make_algebra("fincofin") is FINCOFIN
    assert make_algebra(3).n == 3
    with pytest.raises(StructureError):
        make_algebra({"kind": "heyting"})


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_powerset_lattice_laws(a, b, c):
    P = Powerset(4)
    assert P.join(a, P.meet(b, c)) == P.meet(P.join(a, b), P.join(a, c))
    assert P.comp(P.join(a, b)) == P.meet(P.comp(a), P.comp(b))
    assert P.le(a, b) == (P.meet(a, b) == a)


def test_subalgebra_closure_check():
    P = Powerset(3)
    S = subalgebra(P, [0, 1, 6, 7])
    assert len(S) == 4 and S.atoms == (1, 6)
    with pytest.raises(StructureError):
        subalgebra(P, [0, 1, 7])


def test_generated_subalgebra():
    P = Powerset(3)
    assert sorted(generated_subalgebra(P, [1]).elements) == [0, 1, 6, 7]
    assert len(generated_subalgebra(P, [1, 2])) == 8


# -- FinCofin ----------------------------------------------------------------


@given(fc_strategy(), fc_strategy(), fc_strategy())
def test_fincofin_laws(a, b, c):
    A = FINCOFIN
    a, b, c = A.wrap(a), A.wrap(b), A.wrap(c)
    assert A.meet(a, A.join(b, c)) == A.join(A.meet(a, b), A.meet(a, c))
    assert A.comp(A.comp(a)) == a
    assert A.meet(a, A.comp(a)) == A.zero and A.join(a, A.comp(a)) == A.one
    assert A.le(a, b) == (A.meet(a, b) == a)


@given(fc_strategy(), st.integers(0, 8))
def test_fincofin_membership_matches_complement(a, n):
    A = FINCOFIN
    assert (n in a) != (n in A.unwrap(A.comp(A.wrap(a))))


def test_fincofin_repr_and_sample():
    assert repr(FC.of(1, 2)) == "{1,2}"
    assert repr(FC.cofinite_of(2)) == "N\\{2}"
    S = FINCOFIN.sample(2)
    assert len(S) == 8 and FINCOFIN.zero in S and FINCOFIN.one in S


# -- ideals ------------------------------------------------------------------


def test_ideal_predicates():
    P = Powerset(3)
    assert is_ideal(P, P.down(3))
    v = is_ideal(P, {0, 1, 2})
    assert not v
    assert is_filter(P, P.up(1))
    assert not is_ideal(P, {1})


def test_prime_ideals_of_powerset():
    P = Powerset(3)
    primes = [a for a in P.elements if is_prime_ideal(P, Ideal(P, P.down(a)))]
    # down-sets of coatoms
    assert sorted(primes) == [3, 5, 6]


def test_ideal_generated_and_principal():
    P = Powerset(3)
    assert ideal_generated(P, [1, 2]) == principal(P, 3)
    assert is_principal(P, ideal_of(P, P.down(6)))


def test_fin_is_prime_non_principal():
    I = fin_ideal()
    assert is_prime_ideal(FINCOFIN, I)
    assert not is_principal(FINCOFIN, I)
    assert FINCOFIN.wrap(FC.of(3)) in I and FINCOFIN.one not in I


def test_whole_symbolic():
    assert whole(FINCOFIN).is_whole and not fin_ideal().is_whole


# -- density -----------------------------------------------------------------


def test_density_witness_prefers_disjoint_element():
    P = Powerset(3)
    v = is_dense_subset(P, [3])
    assert not v and v.witness == 4


def test_atoms_dense_and_minimal():
    for n in range(5):
        P = Powerset(n)
        assert is_dense_subset(P, P.atoms)
        assert min_dense_subset(P) == P.atoms
        assert pi_weight_poset(P) == n


def test_min_dense_subset_against_brute_force():
    P = Powerset(3)
    nonzero = [a for a in P.elements if a]
    best = min(k for k in range(1, 8) for S in combinations(nonzero, k) if is_dense_subset(P, S))
    assert len(min_dense_subset(P)) == best


def test_symbolic_density():
    assert is_dense_subset(FINCOFIN, fin_ideal())
    v = is_dense_subset(FINCOFIN, [FINCOFIN.wrap(FC.of(0, 1))])
    assert not v and v.witness == FINCOFIN.atom(2)
    assert pi_weight_poset(FINCOFIN) == ALEPH_0


# -- ultrafilters --------------------------------------------------------------


def test_ultrafilters_are_principal_at_atoms():
    P = Powerset(3)
    ufs = ultrafilters(P)
    assert ufs == [P.up(x) for x in P.atoms]
    assert bounded_ultrafilters(P, ideal_of(P, P.down(3))) == ufs[:2]


def test_symbolic_bounded_ultrafilters():
    assert bounded_ultrafilters(FINCOFIN, fin_ideal()) == SymbolicUltrafilters(FC(frozenset(), True), False)
    assert bounded_ultrafilters(FINCOFIN, whole(FINCOFIN)).cofinite


# -- homomorphisms -------------------------------------------------------------


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_boolean_homs_count(m, n):
    A, B = Powerset(m), Powerset(n)
    homs = boolean_homs(A, B)
    # one per map from atoms of B to atoms of A
    assert len(homs) == m ** n
    assert all(hom_check(h) for h in homs)


def test_hom_check_finds_violation():
    P = Powerset(2)
    bad = StructMap(P, P, lambda a: 0, "zero")
    v = hom_check(bad)
    assert not v


def test_find_isomorphism():
    P = Powerset(2)
    rc = FiniteAlgebra([0, 3, 12, 15], lambda a, b: a | b, lambda a, b: a & b, lambda a: 15 ^ a)
    f = find_isomorphism(P, rc)
    assert f is not None and hom_check(f) and f.image() == frozenset(rc.elements)
    assert find_isomorphism(Powerset(1), P) is None
