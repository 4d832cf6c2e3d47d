"""Patching graphs: Mayer-Vietoris columns, sha kernels against a brute
force oracle, exactness reports, and refinement."""

from itertools import product as iproduct

import pytest

from galmod import intlinalg as la
from galmod import fixtures
from galmod import patching as pa
from galmod.cohomology import group_cohomology
from galmod.complexes import TwoTermComplex
from galmod.crossed import identity_crossed, trivial_galois_action
from galmod.groups import (cyclic_group, enumerate_subgroups, klein_four,
                           subgroup, symmetric_group_3, trivial_subgroup,
                           whole_subgroup)
from galmod.lattice import (LatticeMap, regular_lattice, sign_lattice,
                            trivial_lattice)


def _a3(s3):
    return next(h for h in enumerate_subgroups(s3)[0] if h.order == 3)


def test_build_validation():
    z2 = cyclic_group(2)
    s3 = symmetric_group_3()
    g = pa.build_patching_graph(z2, [whole_subgroup(z2)], [])
    assert g.n_vertices == 1 and g.n_edges == 0
    with pytest.raises(pa.ModelError):
        # edge subgroup not contained in the tail vertex
        pa.build_patching_graph(
            s3, [trivial_subgroup(s3), whole_subgroup(s3)],
            [(0, 1, whole_subgroup(s3))])
    with pytest.raises(pa.ModelError):
        pa.build_patching_graph(
            z2, [whole_subgroup(z2), whole_subgroup(z2)], [])
    with pytest.raises(pa.ModelError):
        pa.build_patching_graph(z2, [whole_subgroup(z2)],
                                [(0, 0, whole_subgroup(z2))])


def test_mv_columns_single_vertex():
    g = fixtures.graph_catalog()["single-whole"]
    sgn = fixtures.lattice_catalog()["sign"]
    cols = pa.mv_columns(g, sgn, 1)
    assert cols.right == () and cols.right_dim == 0
    assert la.shape(cols.difference_matrix)[0] == 0


def test_mv_columns_two_vertex_difference():
    g = fixtures.graph_catalog()["two-vertex-whole"]
    sgn = fixtures.lattice_catalog()["sign"]
    cols = pa.mv_columns(g, sgn, 1)
    assert [m.invariant_factors for m in cols.middle] == [(2,), (2,)]
    # identical restriction targets, so the difference map is x - y
    assert cols.difference_matrix == ((1, -1),)


def test_mv_columns_trivial_vertex_h1_vanishes():
    g = fixtures.graph_catalog()["single-trivial-vertex"]
    sgn = fixtures.lattice_catalog()["sign"]
    cols = pa.mv_columns(g, sgn, 1)
    assert all(m.is_trivial for m in cols.middle)


def test_unsupported_degrees():
    g = fixtures.graph_catalog()["single-whole"]
    sgn = fixtures.lattice_catalog()["sign"]
    with pytest.raises(pa.UnsupportedDegreeError):
        pa.mv_columns(g, sgn, 3)
    z2 = cyclic_group(2)
    c = identity_crossed(cyclic_group(2), z2,
                         trivial_galois_action(z2, cyclic_group(2)))
    with pytest.raises(pa.UnsupportedDegreeError):
        pa.mv_columns(g, c, 1)


def _brute_sha_order(graph, lat, r):
    """Count classes whose restriction to every vertex vanishes, by
    walking all of H^r(Gamma) coordinate by coordinate."""
    left = group_cohomology(graph.gamma, lat, r)
    mats = [pa._restriction_rows(graph, None, h, lat, r, "lattice")
            for h in graph.vertices]
    mids = [group_cohomology(h, lat, r) for h in graph.vertices]
    count = 0
    ranges = [range(f) if f else range(1) for f in left.invariant_factors]
    for coords in iproduct(*ranges):
        ok = True
        for rows, mid in zip(mats, mids):
            for i, row in enumerate(rows):
                f = mid.invariant_factors[i]
                v = sum(a * c for a, c in zip(row, coords))
                if (v % f if f else v) != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def test_sha_with_whole_group_vertex_is_trivial():
    g = fixtures.graph_catalog()["two-vertex-whole"]
    sgn = fixtures.lattice_catalog()["sign"]
    assert pa.sha(g, sgn, 1).is_trivial


def test_sha_trivial_vertex_keeps_everything():
    g = fixtures.graph_catalog()["single-trivial-vertex"]
    sgn = fixtures.lattice_catalog()["sign"]
    assert pa.sha(g, sgn, 1).invariant_factors == (2,)


def test_sha_klein_four_matches_brute_force():
    v4 = klein_four()
    g = fixtures.graph_catalog()["klein-triple"]
    for lat in (regular_lattice(v4), sign_lattice(v4, [-1, -1])):
        s = pa.sha(g, lat, 1)
        assert (s.presentation.order or 0) == _brute_sha_order(g, lat, 1)


def test_sha_brute_force_across_catalog():
    for name, g in fixtures.graph_catalog().items():
        lat = regular_lattice(g.gamma)
        for r in (1, 2):
            s = pa.sha(g, lat, r)
            assert (s.presentation.order or 0) \
                == _brute_sha_order(g, lat, r), (name, r)


def test_nine_term_report_flags():
    z2 = cyclic_group(2)
    sgn = sign_lattice(z2, [-1])
    zt = trivial_lattice(z2)
    t = TwoTermComplex(sgn, zt, LatticeMap(sgn, zt, ((0,),)))
    rep = pa.nine_term_report(fixtures.graph_catalog()["two-vertex-whole"],
                              t)
    assert rep.all_compositions_zero
    # only the degree -1 junction admits a direct kernel test
    assert rep.exact_at_left[0] is not None
    assert rep.exact_at_left[1] is None and rep.exact_at_left[2] is None
    assert len(rep.sha_groups) == 3
    rep1 = pa.nine_term_report(fixtures.graph_catalog()["single-whole"], t)
    assert rep1.all_compositions_zero


def test_remark_compare_agreement():
    z2 = cyclic_group(2)
    sgn = sign_lattice(z2, [-1])
    zt = trivial_lattice(z2)
    t = TwoTermComplex(sgn, zt, LatticeMap(sgn, zt, ((0,),)))
    rc = pa.remark_compare(fixtures.graph_catalog()["single-whole"], t)
    assert rc.sha1_complex.is_trivial and rc.sha2_flasque.is_trivial
    assert rc.cokernel_factors == ()
    assert rc.hypotheses_hold
    rc2 = pa.remark_compare(fixtures.graph_catalog()["two-vertex-whole"], t)
    assert rc2.all_agree


def test_remark_compare_reports_disagreement():
    # a model whose local family is too poor for the comparison: the
    # disagreement itself is the reported fact
    z2 = cyclic_group(2)
    sgn = sign_lattice(z2, [-1])
    zt = trivial_lattice(z2)
    t = TwoTermComplex(sgn, zt, LatticeMap(sgn, zt, ((0,),)))
    rc = pa.remark_compare(
        fixtures.graph_catalog()["single-trivial-vertex"], t)
    assert rc.sha1_complex.invariant_factors == ()
    assert not rc.sha2_flasque.is_trivial
    assert not rc.all_agree


def test_crossed_columns_and_report():
    z2 = cyclic_group(2)
    c = identity_crossed(cyclic_group(2), z2,
                         trivial_galois_action(z2, cyclic_group(2)))
    g = pa.build_patching_graph(
        z2, [whole_subgroup(z2), trivial_subgroup(z2)],
        [(0, 1, trivial_subgroup(z2))])
    cols = pa.mv_columns(g, c, -1)
    assert len(cols.middle) == 2
    cols0 = pa.mv_columns(g, c, 0)
    assert len(cols0.vertex_maps) == 2
    rep = pa.crossed_six_term_report(g, c)
    assert all(rep.composition_zero)
    csha = pa.sha(g, c, 0)
    assert hasattr(csha, "classes")


def test_refine_s3_by_a3():
    s3 = symmetric_group_3()
    g = pa.build_patching_graph(s3, [subgroup(s3, (0, 1))], [])
    a3 = _a3(s3)
    ref = pa.refine_graph(g, a3)
    assert ref.n_vertices == 1
    # an order-2 vertex acting on three cosets of A3 has free orbits
    assert ref.vertices[0].order == 1
    assert sum(sz for _, sz in ref.refinement.vertex_orbits[0]) == a3.index


def test_refine_by_whole_group_is_identity():
    g = fixtures.graph_catalog()["two-vertex-whole"]
    ref = pa.refine_graph(g, whole_subgroup(g.gamma))
    assert ref.n_vertices == 2 and ref.n_edges == 1
    assert ref.vertices[0].members == g.vertices[0].members


def test_refine_keeps_edge_containment():
    s3 = symmetric_group_3()
    a3 = _a3(s3)
    g = pa.build_patching_graph(
        s3, [whole_subgroup(s3), whole_subgroup(s3)], [(0, 1, a3)])
    ref = pa.refine_graph(g, a3)
    assert ref.n_vertices == 2
    for hd, tl, h in ref.edges:
        assert set(h.members) <= set(ref.vertices[hd].members)
        assert set(h.members) <= set(ref.vertices[tl].members)


def test_refinement_pairs_bookkeeping():
    for name, graph, h in fixtures.refinement_pairs():
        ref = pa.refine_graph(graph, h)
        assert ref.refinement is not None, name
        # one orbit record per original vertex; refined vertices come
        # one per orbit, so the refined graph can only grow
        assert len(ref.refinement.vertex_orbits) == graph.n_vertices
        assert ref.n_vertices == sum(
            len(o) for o in ref.refinement.vertex_orbits)
        for orbits in ref.refinement.vertex_orbits:
            assert sum(sz for _, sz in orbits) == h.index, name
