import pytest

from lcaduality import lba
from lcaduality.ba import FC, FINCOFIN, Ideal, Powerset, StructMap, fin_ideal, ideal_of, whole
from lcaduality.errors import PreconditionError
from lcaduality.ideals import FIN_N, Pseudolattice
from lcaduality.lba import LocalPair


def test_classify_powerset_pairs():
    A = Powerset(3)
    rep = lba.classify_pair(A, whole(A))
    assert rep.lba and rep.plba and rep.zlba and rep.dzlc
    rep = lba.classify_pair(A, ideal_of(A, A.down(3)))
    assert not rep.dense and not rep.lba and rep.witnesses["dense"] == 4


def test_classify_fincofin():
    rep = lba.classify_pair(FINCOFIN, fin_ideal())
    assert rep.lba and rep.plba and not rep.zlba
    assert rep.witnesses["zlba"] is not None


def test_prime_dense_criterion():
    rep = lba.prime_dense_criterion(FINCOFIN, fin_ideal())
    assert rep.dense and rep.non_principal
    A = Powerset(2)
    rep = lba.prime_dense_criterion(A, ideal_of(A, A.down(1)))
    assert not rep.dense and not rep.non_principal
    with pytest.raises(PreconditionError):
        lba.prime_dense_criterion(Powerset(3), ideal_of(Powerset(3), {0}))


def test_enumerate_homs_count():
    assert len(lba.enumerate_homs(Powerset(2), Powerset(3))) == 8


def test_morphism_flags():
    A, B = Powerset(1), Powerset(2)
    m = lba.LbaMorphism.make(LocalPair.full(A), LocalPair.full(B), lba.hom_from_atom_map(A, B, [0, 0]))
    assert m.lba and m.plba
    ident = lba.identity_morphism(LocalPair.full(B))
    assert ident.compose(m).map.table == m.map.table


def test_non_plba_morphism_into_fincofin():
    A = Powerset(1)
    phi = StructMap(A, FINCOFIN, lambda a: FINCOFIN.one if a else FINCOFIN.zero, "phi")
    m = lba.LbaMorphism.make(LocalPair.full(A), LocalPair(FINCOFIN, fin_ideal()), phi)
    assert not m.plba and m.witnesses["plba"] == 1


def test_extend_poset_iso_rejects_foreign_images():
    A = Powerset(2)
    with pytest.raises(PreconditionError):
        lba.extend_poset_iso(lambda a: a + 100, LocalPair.full(A), LocalPair.full(A))


def test_extend_poset_iso_identity_unique():
    A = Powerset(2)
    f = lba.extend_poset_iso(lambda a: a, LocalPair.full(A), LocalPair.full(A))
    assert f.evidence["unique_among"] == 4
    assert all(f(a) == a for a in A.elements)


@pytest.mark.parametrize("n", range(4))
def test_round_trips_finite(n):
    A = Powerset(n)
    for f in (lba.ez_ep_roundtrip(A, whole(A)), lba.ep_ez_roundtrip(A, whole(A)),
              lba.eg_el_roundtrip(A, whole(A))):
        assert len(f.image()) == len(f.source)


def test_el_eg_roundtrip_pseudolattices():
    A = Powerset(3)
    for P in (Pseudolattice.from_algebra(A), Pseudolattice.from_ideal(A, ideal_of(A, A.down(5)))):
        e = lba.el_eg_roundtrip(P)
        assert len({e(a) for a in P.elements}) == len(P)


def test_symbolic_round_trips():
    e_ext, back = lba.symbolic_ep_roundtrip()
    a = FINCOFIN.wrap(FC.cofinite_of(1, 4))
    assert back(e_ext(a)) == a
    lba.el_eg_roundtrip(FIN_N)


def test_ep_ez_symbolic_rejected():
    with pytest.raises(PreconditionError):
        lba.ep_ez_roundtrip(FINCOFIN, fin_ideal())


def test_functor_ez_on_non_whole_zlba():
    A = Powerset(2)
    with pytest.raises(PreconditionError):
        # not dense, so not a ZLBA at all
        lba.functor_ez(A, Ideal(A, A.down(1)))


def test_functor_morphism_parts():
    A, B = Powerset(2), Powerset(2)
    m = lba.LbaMorphism.make(LocalPair.full(A), LocalPair.full(B), lba.hom_from_atom_map(A, B, [1, 0]))
    assert lba.functor_el_mor(m)(1) == 2
    assert lba.functor_ez_mor(m)(1) == 2
    g = lba.functor_ep_mor(m)
    assert len(g.image()) == 4
