import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from commprob import catalog
from commprob.errors import NotAbelian, SearchBudgetExceeded
from commprob.group import (
    FiniteGroup,
    abelian,
    cp_semidirect,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    extraspecial,
    quotient,
)
from commprob.iso import (
    Abelian,
    Unrecognized,
    abelian_invariants,
    are_isomorphic,
    find_isomorphism,
    fingerprint,
    invariant_factors,
    label_order,
    parse_label,
    recognize,
)
from commprob.structure import center

from .strategies import small_groups


def relabel(g: FiniteGroup, seed: int) -> FiniteGroup:
    """Same group with the non-identity elements shuffled."""
    rng = np.random.default_rng(seed)
    perm = np.concatenate([[0], 1 + rng.permutation(g.order - 1)])   # new -> old
    inv = np.argsort(perm)
    return FiniteGroup(inv[g.table[np.ix_(perm, perm)]], check="skip")


def test_abelian_invariants_examples():
    assert abelian_invariants(direct_product(cyclic(2), cyclic(3))).invariants == (6,)
    assert abelian_invariants(abelian([3, 9])).invariants == (3, 9)
    g = direct_product(extraspecial(3), extraspecial(3))
    q, _ = quotient(g, center(g))
    assert str(abelian_invariants(q)) == "A[3,3,3,3]"


def test_abelian_invariants_need_abelian():
    with pytest.raises(NotAbelian):
        abelian_invariants(dihedral(3))


def test_invariant_factors_from_prime_powers():
    assert invariant_factors([2, 4, 3]) == (2, 12)
    assert invariant_factors([]) == ()


def test_order_21_constructions_agree():
    g, h = cp_semidirect(7, 3, 2), cp_semidirect(7, 3, 4)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert np.array_equal(h.table[phi[:, None], phi[None, :]], phi[g.table])


def test_extraspecial_kinds_not_isomorphic():
    assert not are_isomorphic(extraspecial(3, "p"), extraspecial(3, "p2"))


def test_identity_map():
    g = dihedral(5)
    assert np.array_equal(find_isomorphism(g, g), np.arange(10))


def test_budget_is_distinct_from_false():
    with pytest.raises(SearchBudgetExceeded):
        find_isomorphism(dihedral(6), dihedral(6), budget=1)


def test_dicyclic_vs_dihedral():
    assert not are_isomorphic(dicyclic(3), dihedral(6))
    assert not are_isomorphic(dicyclic(2), dihedral(4))


@pytest.mark.parametrize("g, label", [
    (cyclic(1), "A[]"),
    (abelian([2, 2, 3]), "A[2,6]"),
    (dihedral(7), "N:D(7)"),
    (dicyclic(3), "N:Dic(3)"),
    (extraspecial(3, "p"), "N:ES(3,p)"),
    (extraspecial(5, "p2"), "N:ES(5,p2)"),
    (cp_semidirect(7, 3, 2), "N:SDC(7,3)"),
    (direct_product(cyclic(3), cp_semidirect(7, 3, 2)), "P[A[3],N:SDC(7,3)]"),
    (direct_product(dihedral(3), dihedral(3)), "P[N:D(3),N:D(3)]"),
])
def test_recognize(g, label):
    assert str(recognize(g)) == label


def test_recognize_c5_squared_by_c3():
    assert str(recognize(catalog.witness("11/75"))) == "N:SDC(5^2,3)"


def test_unrecognized_label_carries_order():
    lab = recognize(catalog.witness("17/81"))
    assert isinstance(lab, Unrecognized)
    assert str(lab).startswith("U:81:")


@pytest.mark.parametrize("text", [
    "A[]", "A[3,3,3,3]", "N:D(7)", "N:Dic(3)", "N:ES(3,p)", "N:SDC(7,3)", "N:SDC(5^2,3)",
    "P[A[3],N:SDC(7,3)]",
])
def test_label_round_trip(text):
    assert str(parse_label(text)) == text


def test_label_order():
    assert label_order(parse_label("P[A[3],N:SDC(7,3)]")) == 63
    assert label_order(Abelian(())) == 1
    assert label_order(parse_label("N:SDC(5^2,3)")) == 75


def test_parse_label_rejects_garbage():
    with pytest.raises(ValueError):
        parse_label("X[1]")
    with pytest.raises(ValueError):
        parse_label("A[3]junk")


@settings(max_examples=30, deadline=None)
@given(small_groups(), st.integers(0, 2**32 - 1))
def test_relabelled_group_is_isomorphic(g, seed):
    h = relabel(g, seed)
    assert fingerprint(h) == fingerprint(g)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert sorted(phi.tolist()) == list(range(g.order))
    assert np.array_equal(h.table[phi[:, None], phi[None, :]], phi[g.table])


@settings(max_examples=30, deadline=None)
@given(small_groups(), st.integers(0, 2**32 - 1))
def test_recognition_is_invariant(g, seed):
    assert str(recognize(relabel(g, seed))) == str(recognize(g))


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_invariants_multiply_to_order(g):
    if g.is_abelian:
        invs = abelian_invariants(g).invariants
        assert int(np.prod(invs)) == g.order
        assert all(b % a == 0 for a, b in zip(invs, invs[1:]))
        assert all(d >= 2 for d in invs)
    lab = recognize(g)
    if not isinstance(lab, Unrecognized):
        assert label_order(lab) == g.order
