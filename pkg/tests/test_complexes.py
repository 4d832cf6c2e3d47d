"""Two-term complexes: homology, vanishing classification, covers,
resolutions, and certificates."""

import pytest

from galmod import intlinalg as la
from galmod import fixtures
from galmod.cohomology import group_cohomology, hypercohomology, \
    tate_cohomology
from galmod.complexes import (GroupMismatchError, PreconditionError,
                              TwoTermComplex, classify,
                              coflasque_resolution, cts_cover_coflasque,
                              cts_embed_coflasque, flasque_resolution,
                              homology, pullback_square, pushout_square,
                              r_equivalence_invariant, replay_certificate,
                              uniqueness_invariants)
from galmod.groups import (cyclic_group, enumerate_subgroups,
                           symmetric_group_3)
from galmod.lattice import (LatticeMap, regular_lattice, sign_lattice,
                            trivial_lattice, zero_lattice)


def _cx(l1, l2, rows):
    return TwoTermComplex(l1, l2, LatticeMap(l1, l2, la.freeze(rows)))


def test_homology_of_multiplication():
    z2 = cyclic_group(2)
    triv = trivial_lattice(z2)
    t = _cx(triv, triv, ((2,),))
    hminus, h0 = homology(t)
    assert hminus.rank == 0
    assert h0.invariant_factors == (2,)


def test_homology_of_augmentation_kernel():
    z2 = cyclic_group(2)
    reg = regular_lattice(z2)
    sign = sign_lattice(z2, [-1])
    t = _cx(reg, sign, ((1, -1),))
    hminus, h0 = homology(t)
    assert hminus.rank == 1  # the norm element e + s
    assert h0.invariant_factors == ()


def test_classify_modes():
    z2 = cyclic_group(2)
    sign = sign_lattice(z2, [-1])
    assert not classify(sign, "coflasque").ok
    assert not classify(sign, "flasque").ok
    reg = regular_lattice(z2)
    assert classify(reg, "coflasque").ok
    assert classify(reg, "flasque").ok
    with pytest.raises(ValueError):
        classify(sign, "other")


def test_cover_of_sign_lattice():
    z2 = cyclic_group(2)
    cover = cts_cover_coflasque(sign_lattice(z2, [-1]))
    assert classify(cover.c, "coflasque").ok
    assert cover.q.is_permutation_certified
    assert cover.q.rank == cover.c.rank + 1


def test_embed_of_sign_lattice():
    z2 = cyclic_group(2)
    emb = cts_embed_coflasque(sign_lattice(z2, [-1]))
    assert classify(emb.c1, "coflasque").ok
    assert emb.q1.is_permutation_certified
    # rank additivity in 0 -> L -> C1 -> Q1 -> 0
    assert emb.c1.rank == emb.l.rank + emb.q1.rank


def test_coflasque_resolution_small():
    z2 = cyclic_group(2)
    sign = sign_lattice(z2, [-1])
    t = _cx(zero_lattice(z2), sign, ((),))
    resolved, cert = coflasque_resolution(t)
    assert classify(resolved.l1, "coflasque").ok
    assert resolved.l2.is_permutation_certified
    assert cert.valid
    assert replay_certificate(cert)


def test_flasque_resolution_small():
    z2 = cyclic_group(2)
    sign = sign_lattice(z2, [-1])
    t = _cx(sign, zero_lattice(z2), ())
    resolved, cert = flasque_resolution(t)
    assert classify(resolved.l2, "flasque").ok
    assert resolved.l1.is_permutation_certified
    assert replay_certificate(cert)


def test_flasque_is_dual_of_coflasque_of_dual():
    t = fixtures.complex_catalog()["z2-aug"]
    resolved, _ = flasque_resolution(t)
    cof, _ = coflasque_resolution(t.dual())
    again = cof.dual()
    assert resolved.l1.action == again.l1.action
    assert resolved.l2.action == again.l2.action
    assert resolved.differential.matrix == again.differential.matrix


def test_resolution_preserves_hypercohomology():
    t = fixtures.complex_catalog()["s3-coset-aug"]
    cof, _ = coflasque_resolution(t)
    fla, _ = flasque_resolution(t)
    _, reps = enumerate_subgroups(t.group)
    for h in reps:
        for n in (-1, 0, 1):
            want = hypercohomology(h, t, n).invariant_factors
            assert hypercohomology(h, cof, n).invariant_factors == want
            assert hypercohomology(h, fla, n).invariant_factors == want


def test_pushout_requires_mono():
    z2 = cyclic_group(2)
    triv = trivial_lattice(z2)
    zero_map = LatticeMap(triv, triv, ((0,),))
    with pytest.raises(PreconditionError):
        pushout_square(zero_map, LatticeMap(triv, triv, ((1,),)))


def test_pullback_requires_epi():
    z2 = cyclic_group(2)
    triv = trivial_lattice(z2)
    doubling = LatticeMap(triv, triv, ((2,),))
    with pytest.raises(PreconditionError):
        pullback_square(doubling, LatticeMap(triv, triv, ((1,),)))


def test_pushout_pullback_identity_squares():
    z2 = cyclic_group(2)
    reg = regular_lattice(z2)
    ident = LatticeMap(reg, reg, la.identity(2))
    po = pushout_square(ident, ident)
    assert po.move.evidence.ok
    pb = pullback_square(ident, ident)
    assert pb.move.evidence.ok


def test_uniqueness_invariants_agree_for_same_input():
    t = fixtures.complex_catalog()["z2-aug"]
    r1, _ = flasque_resolution(t)
    r2, _ = flasque_resolution(t)
    report = uniqueness_invariants(r1, r2)
    assert report.agree


def test_uniqueness_invariants_flag_mismatch():
    z2 = cyclic_group(2)
    sign = sign_lattice(z2, [-1])
    triv = trivial_lattice(z2)
    r1, _ = flasque_resolution(_cx(sign, zero_lattice(z2), ()))
    r2, _ = flasque_resolution(_cx(triv, zero_lattice(z2), ()))
    report = uniqueness_invariants(r1, r2)
    assert not report.agree


def test_uniqueness_group_mismatch():
    a = fixtures.complex_catalog()["z2-aug"]
    b = fixtures.complex_catalog()["z3-aug"]
    ra, _ = flasque_resolution(a)
    rb, _ = flasque_resolution(b)
    with pytest.raises(GroupMismatchError):
        uniqueness_invariants(ra, rb)


def test_r_equivalence_invariant():
    t = fixtures.complex_catalog()["sign-deg0"]
    data = r_equivalence_invariant(t)
    assert classify(data.flasque_lattice, "flasque").ok
    _, reps = enumerate_subgroups(t.group)
    assert len(data.table) == len(reps)
    for (members, tate, h1), h in zip(data.table, reps):
        assert members == h.members
        assert tate == tate_cohomology(
            h, data.flasque_lattice, -1).invariant_factors
        assert h1 == group_cohomology(
            h, data.flasque_lattice, 1).invariant_factors


def test_battery_resolutions_replay():
    for name, t in fixtures.complex_catalog().items():
        resolved, cert = coflasque_resolution(t)
        assert cert.valid, name
        assert replay_certificate(cert), name


def test_acyclic_stays_acyclic():
    z2 = cyclic_group(2)
    reg = regular_lattice(z2)
    t = _cx(reg, reg, la.identity(2))
    resolved, cert = coflasque_resolution(t)
    hminus, h0 = homology(resolved)
    assert hminus.rank == 0
    assert h0.invariant_factors == ()
