import pytest
from hypothesis import given, strategies as st

from lcaduality import completion as cp
from lcaduality import topo
from lcaduality.ba import FC, FINCOFIN, Powerset, StructMap, fin_ideal
from lcaduality.contact import check_axioms, from_atom_relation, relabel, rho_s
from lcaduality.duality import psi_t
from lcaduality.errors import PreconditionError, UnsupportedError


def test_delta_ideals_p2():
    T = rho_s(Powerset(2))
    frame = cp.delta_ideals(T)
    assert [sorted(J.members) for J in frame] == [[0], [0, 1], [0, 2], [0, 1, 2, 3]]
    primes = cp.prime_elements(T)
    assert [sorted(J.members) for J in primes] == [[0, 1], [0, 2]]


def test_top_is_never_prime():
    for n in range(4):
        T = rho_s(Powerset(n))
        frame = cp.delta_ideals(T)
        assert not cp.is_prime_element(T, cp.frame_top(frame), frame)


def test_zero_ideal_prime_only_on_a_chain():
    # {0} is prime exactly when the frame above it is a chain: Powerset(1)
    for n in range(4):
        T = rho_s(Powerset(n))
        frame = cp.delta_ideals(T)
        zero = frame[0]
        chain = all(J <= K or K <= J for J in frame for K in frame)
        assert cp.is_prime_element(T, zero, frame) == (chain and len(frame) > 1)


def test_delta_ideals_non_lca():
    T = from_atom_relation(Powerset(2), [(0, 1)])
    assert [sorted(J.members) for J in cp.delta_ideals(T)] == [[0], [0, 1, 2, 3]]


def test_delta_correspondence_identity():
    for n in range(4):
        T = rho_s(Powerset(n))
        c = cp.delta_correspondence(cp.identity_embedding(T), T, T)
        assert c["delta_ideals"][0] == 2 ** n
        for J in cp.delta_ideals(T):
            e = cp.identity_embedding(T)
            assert cp.restrict_delta(J, e, T) == J
            assert cp.extend_delta(J, e, T) == J


def test_delta_correspondence_rejects_non_embedding():
    A, B = Powerset(1), Powerset(2)
    phi = StructMap(A, B, lambda a: 3 * a, "diag")
    with pytest.raises(PreconditionError):
        cp.delta_correspondence(phi, rho_s(A), rho_s(B))


@pytest.mark.parametrize("n", range(4))
def test_completion_of_rho_s(n):
    T = rho_s(Powerset(n))
    c = cp.lca_completion(T)
    assert all(c.certificates.values())
    assert check_axioms(c.target).clca
    ok, eta = cp.completions_equivalent(c, cp.lca_completion(T))
    assert ok


def test_trivial_completion():
    c = cp.lca_completion(rho_s(Powerset(0)))
    assert c.target.algebra.trivial


def test_completion_rejects_non_lca():
    with pytest.raises(PreconditionError):
        cp.lca_completion(from_atom_relation(Powerset(2), [(0, 1)]))


def test_completion_of_relabeled_copy_is_equivalent():
    T = rho_s(Powerset(3))
    perm = [2, 0, 1]
    S = relabel(T, perm)
    move = StructMap(T.algebra, S.algebra,
                     lambda a: sum(1 << perm[i] for i in range(3) if a >> i & 1), "move")
    c1, c3 = cp.lca_completion(T), cp.lca_completion(S)
    pulled = cp.CompletionPair(T, StructMap(T.algebra, c3.target.algebra,
                                            lambda a: c3.embedding(move(a)), "pulled"), c3.target)
    assert cp.completions_equivalent(c1, pulled)[0]


def test_completions_of_different_size_not_equivalent():
    c1 = cp.lca_completion(rho_s(Powerset(2)))
    c2 = cp.lca_completion(rho_s(Powerset(3)))
    ok, cert = cp.completions_equivalent(c1, c2)
    assert not ok and cert["reason"] == "different cardinalities"


def test_completion_target_is_psi_t_of_dual():
    T = rho_s(Powerset(2))
    c = cp.lca_completion(T)
    assert c.target.pairs == psi_t(topo.discrete(2)).pairs


@pytest.mark.parametrize("n", range(4))
def test_extend_contact_idempotent(n):
    assert cp.extend_contact_idempotent(rho_s(Powerset(n)))


def test_extend_contact_rejects_non_dense():
    A, B = Powerset(1), Powerset(2)
    phi = StructMap(A, B, lambda a: 3 * a, "diag")
    with pytest.raises(PreconditionError):
        cp.extend_contact(rho_s(A), phi)


def test_symbolic_completion():
    c = cp.lca_completion(rho_s(FINCOFIN, fin_ideal()))
    assert dict(c.certificates)["dv_dense"]
    assert c.embed(FINCOFIN.wrap(FC.of(1))) == FC.of(1)


def test_symbolic_completion_rejects_other_ideals():
    from lcaduality.ba import whole

    with pytest.raises(UnsupportedError):
        cp.lca_completion(rho_s(FINCOFIN, whole(FINCOFIN)))


def test_symbolic_extend_idempotent():
    assert cp.symbolic_extend_idempotent(4)


fc = st.builds(FC, st.frozensets(st.integers(0, 6), max_size=4), st.booleans())


@given(fc, fc)
def test_symbolic_case_formulas_reproduce_well_inside(a, b):
    T = rho_s(FINCOFIN, fin_ideal())
    A = FINCOFIN
    assert cp.symbolic_extend_ll(a, b) == T.ll(A.wrap(a), A.wrap(b))


def test_corollary_embedding_iff_homeomorphic_duals():
    Ts = [rho_s(Powerset(n)) for n in range(4)]
    for T in Ts:
        for S in Ts:
            same = T.algebra.n == S.algebra.n
            assert cp.dense_embedding_exists(T, S) == same
