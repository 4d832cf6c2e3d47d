"""Crossed modules: axiom checking, H^-1, and nonabelian H^0 against a
direct enumeration oracle."""

import itertools

import pytest

from galmod import fixtures
from galmod.crossed import (FiniteCrossedModule, conjugation_h_action,
                            degenerate_crossed, enumerate_cocycles,
                            h_minus_one, h_zero, identity_crossed,
                            product_class, trivial_galois_action,
                            trivial_h_action, validate_crossed_module)
from galmod.groups import SizeLimitError, cyclic_group, symmetric_group_3


def test_catalog_modules_are_valid():
    for name, c in fixtures.crossed_catalog().items():
        verdict = validate_crossed_module(c)
        assert verdict.ok, (name, verdict.failure)


def test_validation_rejects_bad_boundary():
    z2 = cyclic_group(2)
    bad = FiniteCrossedModule(
        z2, z2, (1, 1), trivial_h_action(z2, z2),
        z2, trivial_galois_action(z2, z2), trivial_galois_action(z2, z2))
    verdict = validate_crossed_module(bad)
    assert not verdict.ok
    assert verdict.failure[0] == "boundary not a homomorphism"


def test_validation_rejects_noncentral_kernel():
    s3 = symmetric_group_3()
    one = cyclic_group(1)
    bad = FiniteCrossedModule(
        s3, one, (0,) * 6, trivial_h_action(one, s3),
        one, (tuple(range(6)),), ((0,),))
    verdict = validate_crossed_module(bad)
    assert not verdict.ok
    assert verdict.failure is not None


def test_h_minus_one_examples():
    cat = fixtures.crossed_catalog()
    assert h_minus_one(cat["z2-z2-order4"]).group.order == 2
    # the Galois flip on the Z/3 kernel leaves only the identity fixed
    assert h_minus_one(cat["z3-flip"]).group.order == 1
    assert h_minus_one(cat["s3-identity"]).group.order == 1
    assert h_minus_one(cat["z2-id"]).group.order == 1


def test_h_minus_one_members_form_subgroup():
    c = fixtures.crossed_catalog()["z2-z2-order4"]
    hm = h_minus_one(c)
    assert hm.members[0] == 0
    for a in hm.members:
        for b in hm.members:
            assert c.g.mul(a, b) in hm.members


def test_h_zero_order_four_example():
    c = fixtures.crossed_catalog()["z2-z2-order4"]
    hz = h_zero(c)
    assert hz.order == 4
    assert hz.group.is_abelian()
    assert all(hz.group.element_order(x) in (1, 2)
               for x in hz.group.elements())


def test_h_zero_small_examples():
    cat = fixtures.crossed_catalog()
    # identity boundary kills every class
    assert h_zero(cat["z2-id"]).order == 1
    assert h_zero(cat["s3-identity"]).order == 1
    assert h_zero(cat["z3-flip"]).order == 1
    # degenerate module: fixed points of H, here all of S3
    hz = h_zero(cat["s3-degenerate"])
    assert hz.group.order == 6
    assert not hz.group.is_abelian()


def test_neutral_class_is_zero():
    for name, c in fixtures.crossed_catalog().items():
        hz = h_zero(c)
        neutral = ((0,) * c.galois.order, 0)
        assert hz.class_of[neutral] == 0, name


def test_product_class_matches_table():
    hz = h_zero(fixtures.crossed_catalog()["z2-z2-order4"])
    n = hz.order
    for i in range(n):
        for j in range(n):
            assert product_class(hz, i, j) == hz.table[i][j]


def _oracle_classes(c):
    """Class count by direct definition: filter all candidate pairs with
    the cocycle equations, then merge along every coboundary transform
    with union-find."""
    gal, g, h = c.galois, c.g, c.h
    cocycles = []
    for alpha in itertools.product(range(g.order), repeat=gal.order):
        if any(alpha[gal.mul(s, t)]
               != g.mul(alpha[s], c.act_gal_g(s, alpha[t]))
               for s in gal.elements() for t in gal.elements()):
            continue
        for x in h.elements():
            if all(h.mul(c.boundary[alpha[s]], c.act_gal_h(s, x)) == x
                   for s in gal.elements()):
                cocycles.append((alpha, x))
    index = {z: i for i, z in enumerate(cocycles)}
    parent = list(range(len(cocycles)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for z in cocycles:
        alpha, x = z
        for gg in g.elements():
            moved = (tuple(g.mul(g.mul(gg, alpha[s]),
                                 g.inv(c.act_gal_g(s, gg)))
                           for s in gal.elements()),
                     h.mul(c.boundary[gg], x))
            a, b = find(index[z]), find(index[moved])
            if a != b:
                parent[a] = b
    return len(cocycles), len({find(i) for i in range(len(cocycles))})


def test_h_zero_against_enumeration_oracle():
    for name, c in fixtures.crossed_catalog().items():
        hz = h_zero(c)
        ncocycles, nclasses = _oracle_classes(c)
        assert len(hz.cocycles) == ncocycles, name
        assert hz.order == nclasses, name


def test_enumerate_cocycles_bound():
    c = fixtures.crossed_catalog()["s3-identity"]
    with pytest.raises(SizeLimitError):
        enumerate_cocycles(c, bound=10)
    with pytest.raises(SizeLimitError):
        h_zero(c, bound=10)


def test_constructors_produce_valid_modules():
    s3 = symmetric_group_3()
    z2 = cyclic_group(2)
    assert validate_crossed_module(identity_crossed(s3, z2)).ok
    assert validate_crossed_module(degenerate_crossed(s3, z2)).ok
    assert conjugation_h_action(z2) == trivial_h_action(z2, z2)
