import numpy as np
import pytest
from hypothesis import given, settings

from commprob import catalog
from commprob.errors import NotNilpotentError, NotNormal, Unsupported
from commprob.group import (
    abelian,
    cp_semidirect,
    cp2_semidirect,
    cyclic,
    dihedral,
    direct_product,
    element_orders,
    extraspecial,
    quotient,
)
from commprob.iso import abelian_invariants
from commprob.structure import (
    Subgroup,
    aut_order,
    center,
    centralizer,
    centralizer_set,
    commutator_set,
    commutator_subgroup,
    conjugacy_classes,
    derived_subgroup,
    is_normal,
    lower_central_series,
    nilpotency_class,
    normal_product,
    normal_subgroups,
    prime_index_normal_subgroups,
    star,
    subgroup_generated,
    sylow_decomposition,
    trivial,
    whole,
)

from .strategies import small_groups


@pytest.fixture(scope="module")
def g21():
    return cp_semidirect(7, 3, 2)


def _order7_element(g):
    return int(np.flatnonzero(element_orders(g) == 7)[0])


def test_generated_empty_is_trivial(g21):
    assert subgroup_generated(g21, []).is_trivial


def test_generated_by_order7_element(g21):
    assert subgroup_generated(g21, [_order7_element(g21)]).order == 7


def test_commutators_of_extraspecial():
    g = extraspecial(3)
    comms = {int(g.table[g.table[g.table[x, y], g.inverse[x]], g.inverse[y]])
             for x in range(27) for y in range(27)}
    assert subgroup_generated(g, comms).order == 3


def test_subgroup_mask_checks():
    g = cyclic(4)
    with pytest.raises(ValueError):
        Subgroup(g, np.array([False, True, False, False]))
    with pytest.raises(AssertionError):
        Subgroup(g, np.array([True, True, True, False]))


def test_center_examples(g21):
    a = abelian([2, 6])
    assert center(a).is_whole
    assert center(g21).is_trivial
    assert center(dihedral(8)).order == 2


def test_centralizer_of_derived_in_extraspecial():
    g = extraspecial(3)
    assert centralizer_set(g, commutator_subgroup(g)).is_whole


def test_centralizer_of_identity_is_whole(g21):
    assert centralizer(g21, 0).is_whole


def test_class_sizes_order_21(g21):
    assert conjugacy_classes(g21).sizes == (1, 3, 3, 7, 7)


def test_class_sizes_order_75():
    g = catalog.witness("11/75")
    sizes = conjugacy_classes(g).sizes
    assert sizes == (1,) + (3,) * 8 + (25, 25)
    assert len(sizes) == 11


def test_classes_of_abelian_are_singletons():
    assert conjugacy_classes(abelian([3, 4])).sizes == (1,) * 12


def test_class_ordering_is_by_size_then_minimum():
    cl = conjugacy_classes(dihedral(6))
    keys = [(len(c), int(c[0])) for c in cl.classes]
    assert keys == sorted(keys)
    assert cl.classes[0].tolist() == [0]


def test_commutator_subgroup_examples(g21):
    assert commutator_subgroup(abelian([5, 5])).is_trivial
    assert commutator_subgroup(g21).order == 7
    w = catalog.witness("17/81")
    d = commutator_subgroup(w)
    assert d.order == 9
    assert abelian_invariants(d.as_group()).invariants == (3, 3)


def test_star_of_trivial_is_center(g21):
    for g in (g21, extraspecial(3), dihedral(8)):
        assert star(g, trivial(g)) == center(g)


def test_star_of_derived_is_whole(g21):
    for g in (g21, extraspecial(3), dihedral(8), catalog.witness("29/189")):
        assert star(g, commutator_subgroup(g)).is_whole


def test_star_center_of_quotient():
    g = extraspecial(3)
    h = commutator_subgroup(g)
    hs = star(g, h)
    assert hs.is_whole
    q, proj = quotient(g, h)
    zq = center(q)
    assert zq.order * h.order == hs.order
    assert np.array_equal(zq.mask[proj], hs.mask)


def test_star_needs_normal_subgroup():
    g = dihedral(3)
    with pytest.raises(NotNormal):
        star(g, subgroup_generated(g, [3]))


def test_lower_central_series():
    assert nilpotency_class(abelian([4])) == 1
    assert nilpotency_class(cyclic(1)) == 0
    assert nilpotency_class(extraspecial(3)) == 2
    assert nilpotency_class(catalog.witness("17/81")) == 3
    series = lower_central_series(cp_semidirect(7, 3, 2))
    assert not series.nilpotent
    assert series.nilpotency_class is None
    assert series.terms[-1].order == 7


def test_lower_central_second_term_is_derived():
    g = catalog.witness("17/81")
    assert lower_central_series(g).terms[1] == commutator_subgroup(g)


def test_sylow_decomposition():
    parts = sylow_decomposition(cyclic(6))
    assert [(p, s.order) for p, s in parts] == [(2, 2), (3, 3)]
    parts = sylow_decomposition(direct_product(extraspecial(3), cyclic(5)))
    assert [(p, s.order) for p, s in parts] == [(3, 27), (5, 5)]
    with pytest.raises(NotNilpotentError):
        sylow_decomposition(cp_semidirect(7, 3, 2))


def test_aut_order():
    assert aut_order([7]) == 6
    assert aut_order([9]) == 6
    assert aut_order([3, 3]) == 48
    assert aut_order([5, 5]) == 480
    assert aut_order([]) == 1
    with pytest.raises(Unsupported):
        aut_order([3, 9])


def test_normal_subgroups_of_s3():
    subs, complete = normal_subgroups(dihedral(3))
    assert complete
    assert [h.order for h in subs] == [1, 3, 6]


def test_normal_subgroups_of_klein_four():
    subs, _ = normal_subgroups(abelian([2, 2]))
    assert [h.order for h in subs] == [1, 2, 2, 2, 4]


def test_prime_index_normal_subgroups():
    # C3 x C3 has four subgroups of index 3; D(4) has three of index 2
    assert len(prime_index_normal_subgroups(abelian([3, 3]))) == 4
    assert sorted(h.order for h in prime_index_normal_subgroups(dihedral(4))) == [4, 4, 4]
    assert prime_index_normal_subgroups(cp2_semidirect(5, 3))[0].order == 25


def test_is_normal():
    g = dihedral(4)
    assert is_normal(g, center(g))
    assert not is_normal(g, subgroup_generated(g, [4]))


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_class_equation_three_ways(g):
    n = g.order
    cl = conjugacy_classes(g)
    for x in range(n):
        by_centralizer = n // centralizer(g, x).order
        assert by_centralizer == cl.size_of(x) == len(commutator_set(g, x))


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_classes_partition(g):
    cl = conjugacy_classes(g)
    seen = np.concatenate(cl.classes)
    assert sorted(seen.tolist()) == list(range(g.order))
    assert all(g.order % s == 0 for s in cl.sizes)


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_centralizer_inclusions(g):
    cg = centralizer_set(g, commutator_subgroup(g))
    z = center(g)
    assert derived_subgroup(cg) <= z
    assert z <= centralizer_set(g, cg.members) & cg


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_star_laws(g):
    d = commutator_subgroup(g)
    subs, _ = normal_subgroups(g, cap=32)
    for h in subs[:6]:
        hs = star(g, h)
        assert h <= hs and is_normal(g, hs)
        assert star(g, d & h) == hs
        q, _ = quotient(g, hs)
        assert q.order == 1 or not (q.is_abelian and len(abelian_invariants(q).invariants) == 1)
        for k in subs[:6]:
            ks = star(g, k)
            assert star(g, h & k) == hs & ks
            assert normal_product(hs, ks) <= star(g, normal_product(h, k))
            if h <= k:
                assert hs <= ks


@settings(max_examples=30, deadline=None)
@given(small_groups())
def test_subgroups_are_closed(g):
    for h in (center(g), commutator_subgroup(g), whole(g), trivial(g)):
        assert h.is_closed()
