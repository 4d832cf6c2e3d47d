"""Finite-group models of field patching diagrams.

A patching graph carries one subgroup of a fixed finite group per vertex
and per edge (vertex subgroup = Galois group of the vertex field).  The
module assembles Mayer-Vietoris columns with their restriction and
difference maps, measures exactness instead of assuming it, computes Sha
as the kernel of the joint restriction, compares the three candidate
obstruction groups of the flasque-resolution remark, and refines a graph
along a finite extension (a subgroup H, vertices split into orbits on
the coset space).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from . import intlinalg as la
from .cohomology import (CohomologyGroup, UnsupportedDegreeError,
                         cochain_dim, cochain_pullback, group_cohomology,
                         hypercohomology)
from .complexes import TwoTermComplex, flasque_resolution
from .crossed import (FiniteCrossedModule, HMinusOne, HZero, h_minus_one,
                      h_zero)
from .groups import (FiniteGroup, MembershipError, SizeLimitError,
                     SubgroupHandle, coset_action, group_from_table)
from .intlinalg import IntMatrix
from .lattice import GLattice


class ModelError(Exception):
    """The graph data does not describe a valid patching model."""


Coefficient = Union[GLattice, TwoTermComplex, FiniteCrossedModule]

SUPPORTED_DEGREES = {
    "lattice": (0, 1, 2),
    "complex": (-1, 0, 1),
    "crossed": (-1, 0),
}


@dataclass(frozen=True, eq=False)
class Refinement:
    """Orbit bookkeeping kept alongside a refined graph."""

    subgroup: SubgroupHandle
    coset_count: int
    # per original vertex: ((representative coset, orbit size), ...)
    vertex_orbits: tuple[tuple[tuple[int, int], ...], ...]
    edge_orbits: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True, eq=False)
class PatchingGraph:
    """Vertices and oriented edges decorated with subgroups of gamma.

    Edge k is (head l(k), tail r(k), subgroup), with the edge subgroup
    contained in both endpoint subgroups.
    """

    gamma: FiniteGroup
    vertices: tuple[SubgroupHandle, ...]
    edges: tuple[tuple[int, int, SubgroupHandle], ...]
    refinement: Optional[Refinement] = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return (f"PatchingGraph(vertices={self.n_vertices}, "
                f"edges={self.n_edges})")


def _same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a is b or a.table == b.table


def build_patching_graph(gamma: FiniteGroup, vertices, edges,
                         refinement: Optional[Refinement] = None
                         ) -> PatchingGraph:
    """Validate vertex/edge decorations and connectivity.

    ``vertices`` is a sequence of SubgroupHandles of gamma; ``edges`` a
    sequence of (head index, tail index, SubgroupHandle).  Loops are
    rejected, parallel edges are fine.
    """
    verts = tuple(vertices)
    if not verts:
        raise ModelError("a patching graph needs at least one vertex")
    for i, h in enumerate(verts):
        if not isinstance(h, SubgroupHandle) or not _same_group(h.parent,
                                                                gamma):
            raise ModelError(f"vertex {i} subgroup is not a subgroup of "
                             "the ambient group")
    edge_list = []
    for k, (head, tail, h) in enumerate(edges):
        if head == tail:
            raise ModelError(f"edge {k} is a loop")
        if not (0 <= head < len(verts) and 0 <= tail < len(verts)):
            raise ModelError(f"edge {k} endpoint out of range")
        if not isinstance(h, SubgroupHandle) or not _same_group(h.parent,
                                                                gamma):
            raise ModelError(f"edge {k} subgroup is not a subgroup of "
                             "the ambient group")
        mem = set(h.members)
        if not mem <= set(verts[head].members):
            raise ModelError(f"edge {k} subgroup not contained in its "
                             "head vertex subgroup")
        if not mem <= set(verts[tail].members):
            raise ModelError(f"edge {k} subgroup not contained in its "
                             "tail vertex subgroup")
        edge_list.append((head, tail, h))
    # connectivity by union-find over vertices
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for head, tail, _ in edge_list:
        parent[find(head)] = find(tail)
    if len({find(i) for i in range(len(verts))}) != 1:
        raise ModelError("patching graph is not connected")
    return PatchingGraph(gamma, verts, tuple(edge_list), refinement)


# ---------------------------------------------------------------------------
# Mayer-Vietoris columns for abelian coefficients.

def _coefficient_kind(coeff: Coefficient) -> str:
    if isinstance(coeff, GLattice):
        return "lattice"
    if isinstance(coeff, TwoTermComplex):
        return "complex"
    if isinstance(coeff, FiniteCrossedModule):
        return "crossed"
    raise TypeError(f"unsupported coefficient type {type(coeff).__name__}")


def _check_degree(kind: str, r: int) -> None:
    if r not in SUPPORTED_DEGREES[kind]:
        raise UnsupportedDegreeError(
            f"degree {r} not supported for {kind} coefficients "
            f"(allowed: {SUPPORTED_DEGREES[kind]})")


def _check_coefficient(graph: PatchingGraph, coeff: Coefficient,
                       kind: str) -> None:
    if kind == "lattice":
        grp = coeff.group
    elif kind == "complex":
        grp = coeff.group
    else:
        grp = coeff.galois
    if not _same_group(grp, graph.gamma):
        raise ModelError("coefficient lives over a different group")


def _cohom(graph: PatchingGraph, handle: Optional[SubgroupHandle],
           coeff, r: int, kind: str) -> CohomologyGroup:
    obj = handle if handle is not None else graph.gamma
    if kind == "lattice":
        return group_cohomology(obj, coeff, r)
    return hypercohomology(obj, coeff, r)


def _elem_map(src: Optional[SubgroupHandle], tgt: SubgroupHandle):
    """Target standalone-group element id -> source-group element id."""
    if src is None:
        return tgt.to_parent
    return lambda e: src.from_parent(tgt.to_parent(e))


def _restriction_rows(graph: PatchingGraph, src: Optional[SubgroupHandle],
                      tgt: SubgroupHandle, coeff, r: int,
                      kind: str) -> list[list[int]]:
    """Rows (target coords x source generators) of the restriction map
    between the cohomology of two nested subgroups."""
    src_cg = _cohom(graph, src, coeff, r, kind)
    tgt_cg = _cohom(graph, tgt, coeff, r, kind)
    src_group = src.as_group() if src is not None else graph.gamma
    tgt_group = tgt.as_group()
    emap = _elem_map(src, tgt)
    cols = []
    for gen in src_cg.generators:
        if kind == "lattice":
            vec = cochain_pullback(gen, src_group.order, tgt_group, emap,
                                   coeff.rank, r)
        else:
            r1, r2 = coeff.l1.rank, coeff.l2.rank
            split = cochain_dim(src_group.order, r1, r + 1)
            part1 = cochain_pullback(gen[:split], src_group.order,
                                     tgt_group, emap, r1, r + 1)
            part2 = (cochain_pullback(gen[split:], src_group.order,
                                      tgt_group, emap, r2, r)
                     if r >= 0 else [])
            vec = list(part1) + list(part2)
        cols.append(list(tgt_cg.reduce(vec)))
    nrows = len(tgt_cg.invariant_factors)
    return [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]


@dataclass(frozen=True, eq=False)
class MvColumns:
    """One row of the Mayer-Vietoris diagram in a fixed degree.

    ``restriction_matrix`` stacks the per-vertex restriction blocks;
    ``difference_matrix`` maps the vertex product to the edge product by
    (x_i) -> (x_{l(k)}|_k - x_{r(k)}|_k).  All matrices are written on
    the invariant-factor generators of the groups involved.
    """

    kind: str
    degree: int
    left: CohomologyGroup
    middle: tuple[CohomologyGroup, ...]
    right: tuple[CohomologyGroup, ...]
    vertex_matrices: tuple[IntMatrix, ...]
    edge_matrices: tuple[tuple[IntMatrix, IntMatrix], ...]
    restriction_matrix: IntMatrix
    difference_matrix: IntMatrix
    left_dim: int
    mid_dim: int
    right_dim: int

    @property
    def middle_factors(self) -> tuple[int, ...]:
        return tuple(f for cg in self.middle for f in cg.invariant_factors)

    @property
    def right_factors(self) -> tuple[int, ...]:
        return tuple(f for cg in self.right for f in cg.invariant_factors)


def mv_columns(graph: PatchingGraph, coeff: Coefficient, r: int):
    """Vertex and edge column products with restriction and difference
    maps; dispatches on the coefficient kind."""
    kind = _coefficient_kind(coeff)
    _check_degree(kind, r)
    _check_coefficient(graph, coeff, kind)
    if kind == "crossed":
        return _crossed_columns(graph, coeff, r)
    left = _cohom(graph, None, coeff, r, kind)
    middle = tuple(_cohom(graph, h, coeff, r, kind) for h in graph.vertices)
    right = tuple(_cohom(graph, h, coeff, r, kind)
                  for _, _, h in graph.edges)
    left_dim = len(left.invariant_factors)
    mid_sizes = [len(cg.invariant_factors) for cg in middle]
    right_sizes = [len(cg.invariant_factors) for cg in right]
    mid_dim = sum(mid_sizes)
    right_dim = sum(right_sizes)
    mid_offset = [0]
    for s in mid_sizes:
        mid_offset.append(mid_offset[-1] + s)

    vertex_rows = [_restriction_rows(graph, None, h, coeff, r, kind)
                   for h in graph.vertices]
    restriction = [row for block in vertex_rows for row in block]

    edge_mats = []
    diff_rows: list[list[int]] = []
    for (head, tail, h) in graph.edges:
        head_rows = _restriction_rows(graph, graph.vertices[head], h,
                                      coeff, r, kind)
        tail_rows = _restriction_rows(graph, graph.vertices[tail], h,
                                      coeff, r, kind)
        edge_mats.append((la.freeze(head_rows), la.freeze(tail_rows)))
        for i in range(len(head_rows)):
            row = [0] * mid_dim
            for j, v in enumerate(head_rows[i]):
                row[mid_offset[head] + j] += v
            for j, v in enumerate(tail_rows[i]):
                row[mid_offset[tail] + j] -= v
            diff_rows.append(row)
    return MvColumns(
        kind, r, left, middle, right,
        tuple(la.freeze(b) for b in vertex_rows),
        tuple(edge_mats),
        la.freeze(restriction),
        la.freeze(diff_rows),
        left_dim, mid_dim, right_dim)


def _kernel_presentation(rows: IntMatrix, nrows: int, ncols: int,
                         src_factors, tgt_factors) -> la.AbGroupPresentation:
    """hom_kernel that tolerates empty matrices on either side."""
    if nrows == 0 or ncols == 0:
        src_rel = la.relation_columns(src_factors, ncols)
        return la.abgroup_from_subquotient(
            la.columns(la.identity(ncols)) + src_rel, src_rel, ncols)
    return la.hom_kernel(rows, src_factors, tgt_factors)


def sha(graph: PatchingGraph, coeff: Coefficient, r: int):
    """Kernel of the joint restriction H^r(Gamma, .) -> prod_i H^r(G_i, .).

    Abelian coefficients give a CohomologyGroup whose generators are
    honest cocycles; crossed modules give a ShaCrossed subgroup.
    """
    cols = mv_columns(graph, coeff, r)
    if isinstance(cols, CrossedMvColumns):
        return _crossed_sha(cols)
    left = cols.left
    pres = _kernel_presentation(cols.restriction_matrix, cols.mid_dim,
                                cols.left_dim, left.invariant_factors,
                                cols.middle_factors)
    gens = []
    dim = (cochain_dim(left.group_order, left.coeff_dim, r)
           if cols.kind == "lattice" else len(left.generators[0])
           if left.generators else 0)
    for coords in pres.generators:
        vec = [0] * dim
        for c, g in zip(coords, left.generators):
            for i, v in enumerate(g):
                vec[i] += c * v
        gens.append(tuple(vec))
    return CohomologyGroup(r, pres.factors, tuple(gens), pres,
                           graph.gamma.order, left.coeff_dim)


# ---------------------------------------------------------------------------
# Nine-term report for two-term complexes.

def _is_zero_map(product: IntMatrix, tgt_factors) -> bool:
    rows, cols = la.shape(product)
    for i in range(rows):
        f = tgt_factors[i]
        for j in range(cols):
            v = product[i][j]
            if (v % f if f else v) != 0:
                return False
    return True


def _exactness_at_middle(cols: MvColumns):
    """Compare ker(difference) with im(restriction) inside the vertex
    product; returns (exact, witness coordinates or None)."""
    mid_dim = cols.mid_dim
    if mid_dim == 0:
        return True, None
    mid_rel = la.relation_columns(cols.middle_factors, mid_dim)
    right_rel = la.relation_columns(cols.right_factors, cols.right_dim)
    if cols.right_dim == 0:
        ker_cols = la.columns(la.identity(mid_dim))
    else:
        big = (la.hstack(cols.difference_matrix,
                         la.from_columns(right_rel, cols.right_dim))
               if right_rel else cols.difference_matrix)
        kb = la.kernel_basis(big)
        ker_cols = [[v[i] for i in range(mid_dim)] for v in kb]
    im_cols = la.columns(cols.restriction_matrix) if cols.left_dim else []
    quot = la.abgroup_from_subquotient(ker_cols + mid_rel,
                                       im_cols + mid_rel, mid_dim)
    if quot.is_trivial:
        return True, None
    return False, quot.generators[0]


@dataclass(frozen=True, eq=False)
class MvReport:
    """Recomputed facts about the three Mayer-Vietoris rows of a
    two-term complex; nothing here is assumed from the field theory."""

    degrees: tuple[int, ...]
    columns: tuple[MvColumns, ...]
    composition_zero: tuple[bool, ...]
    # exactness at the left term: only degree -1 starts the sequence, so
    # only there does the flag make sense without a connecting map
    exact_at_left: tuple[Optional[bool], ...]
    exact_at_middle: tuple[tuple[bool, Optional[tuple]], ...]
    sha_groups: tuple[CohomologyGroup, ...]
    not_evaluated: tuple[tuple[int, str], ...]

    @property
    def all_compositions_zero(self) -> bool:
        return all(self.composition_zero)


def nine_term_report(graph: PatchingGraph, t: TwoTermComplex) -> MvReport:
    """Assemble the degree -1..1 rows for a two-term complex and flag
    every junction that can be evaluated without a connecting map."""
    degrees = (-1, 0, 1)
    columns = []
    comp_zero = []
    at_left: list[Optional[bool]] = []
    at_middle = []
    shas = []
    skipped: list[tuple[int, str]] = []
    for r in degrees:
        cols = mv_columns(graph, t, r)
        columns.append(cols)
        prod = la.mat_mul(cols.difference_matrix, cols.restriction_matrix)
        comp_zero.append(_is_zero_map(prod, cols.right_factors))
        s = sha(graph, t, r)
        shas.append(s)
        if r == -1:
            at_left.append(s.is_trivial)
        else:
            at_left.append(None)
            skipped.append((r, "left"))
        at_middle.append(_exactness_at_middle(cols))
        skipped.append((r, "right"))
    return MvReport(degrees, tuple(columns), tuple(comp_zero),
                    tuple(at_left), tuple(at_middle), tuple(shas),
                    tuple(skipped))


# ---------------------------------------------------------------------------
# The flasque-resolution comparison (three candidate obstruction groups).

@dataclass(frozen=True, eq=False)
class RemarkReport:
    """Sha^1 of the complex, Sha^2 of its flasque lattice, and the
    cokernel of the degree-0 difference map, with pairwise comparison
    and the permutation-part hypothesis checks."""

    sha1_complex: CohomologyGroup
    sha2_flasque: CohomologyGroup
    cokernel_factors: tuple[int, ...]
    agree_sha1_sha2: bool
    agree_sha1_coker: bool
    agree_sha2_coker: bool
    perm_h1_factors: tuple[tuple[int, ...], ...]  # per vertex
    perm_h1_vanishes: bool
    perm_sha2: CohomologyGroup
    hypotheses_hold: bool
    flasque_lattice: GLattice
    permutation_lattice: GLattice

    @property
    def all_agree(self) -> bool:
        return (self.agree_sha1_sha2 and self.agree_sha1_coker
                and self.agree_sha2_coker)


def remark_compare(graph: PatchingGraph, t: TwoTermComplex) -> RemarkReport:
    resolved, _cert = flasque_resolution(t)
    perm, flasque = resolved.l1, resolved.l2
    sha1 = sha(graph, t, 1)
    sha2 = sha(graph, flasque, 2)
    cols0 = mv_columns(graph, t, 0)
    if cols0.right_dim == 0:
        coker_factors: tuple[int, ...] = ()
    else:
        coker_factors = la.hom_cokernel(
            cols0.difference_matrix, cols0.right_factors).factors
    perm_h1 = tuple(
        group_cohomology(h, perm, 1).invariant_factors
        for h in graph.vertices)
    perm_h1_ok = all(not f for f in perm_h1)
    perm_sha2 = sha(graph, perm, 2)
    s1 = sha1.invariant_factors
    s2 = sha2.invariant_factors
    return RemarkReport(
        sha1, sha2, coker_factors,
        s1 == s2, s1 == coker_factors, s2 == coker_factors,
        perm_h1, perm_h1_ok, perm_sha2,
        perm_h1_ok and perm_sha2.is_trivial,
        flasque, perm)


# ---------------------------------------------------------------------------
# Crossed-module columns (set-level maps, groups by enumeration).

@dataclass(frozen=True, eq=False)
class CrossedMvColumns:
    """Mayer-Vietoris row for a crossed module in degree -1 or 0.

    Maps are index tables: ``vertex_maps[i][c]`` is the class of the
    restriction of left class c in ``middle[i]``, and the edge tables map
    the head/tail vertex groups into the edge group.
    """

    kind: str
    degree: int
    left: Union[HMinusOne, HZero]
    middle: tuple
    right: tuple
    vertex_maps: tuple[tuple[int, ...], ...]
    edge_head_maps: tuple[tuple[int, ...], ...]
    edge_tail_maps: tuple[tuple[int, ...], ...]

    def _group(self, col) -> FiniteGroup:
        return col.group

    def difference(self, assignment: tuple[int, ...],
                   edges) -> tuple[int, ...]:
        """Image of a vertex-product element under the difference map."""
        out = []
        for k, (head, tail, _h) in enumerate(edges):
            g = self._group(self.right[k])
            a = self.edge_head_maps[k][assignment[head]]
            b = self.edge_tail_maps[k][assignment[tail]]
            out.append(g.mul(a, g.inv(b)))
        return tuple(out)


def restrict_crossed(c: FiniteCrossedModule,
                     h: SubgroupHandle) -> FiniteCrossedModule:
    """The same crossed module with the outer action restricted to a
    subgroup of the acting group."""
    sub = h.as_group()
    on_g = tuple(c.galois_on_g[h.to_parent(s)] for s in sub.elements())
    on_h = tuple(c.galois_on_h[h.to_parent(s)] for s in sub.elements())
    return FiniteCrossedModule(c.g, c.h, c.boundary, c.h_action,
                               sub, on_g, on_h)


def _crossed_h(c: FiniteCrossedModule, handle: Optional[SubgroupHandle],
               r: int):
    mod = c if handle is None else restrict_crossed(c, handle)
    return h_minus_one(mod) if r == -1 else h_zero(mod)


def _crossed_restrict_index(src_col, tgt_col, src_handle, tgt_handle,
                            r: int, idx: int) -> int:
    """Class index in the target column of the restriction of source
    class ``idx``."""
    if r == -1:
        x = src_col.members[idx]
        return tgt_col.members.index(x)
    alpha, hval = src_col.representatives[idx]
    emap = _elem_map(src_handle, tgt_handle)
    tgt_gal = tgt_col.crossed.galois
    restricted = tuple(alpha[emap(s)] for s in tgt_gal.elements())
    return tgt_col.class_of[(restricted, hval)]


def _crossed_columns(graph: PatchingGraph, c: FiniteCrossedModule,
                     r: int) -> CrossedMvColumns:
    left = _crossed_h(c, None, r)
    middle = tuple(_crossed_h(c, h, r) for h in graph.vertices)
    right = tuple(_crossed_h(c, h, r) for _, _, h in graph.edges)
    n_left = (len(left.members) if r == -1 else left.order)

    def size(col):
        return len(col.members) if r == -1 else col.order

    vertex_maps = tuple(
        tuple(_crossed_restrict_index(left, middle[i], None,
                                      graph.vertices[i], r, idx)
              for idx in range(n_left))
        for i in range(len(graph.vertices)))
    head_maps = []
    tail_maps = []
    for k, (head, tail, h) in enumerate(graph.edges):
        head_maps.append(tuple(
            _crossed_restrict_index(middle[head], right[k],
                                    graph.vertices[head], h, r, idx)
            for idx in range(size(middle[head]))))
        tail_maps.append(tuple(
            _crossed_restrict_index(middle[tail], right[k],
                                    graph.vertices[tail], h, r, idx)
            for idx in range(size(middle[tail]))))
    return CrossedMvColumns("crossed", r, left, middle, right,
                            vertex_maps, tuple(head_maps),
                            tuple(tail_maps))


@dataclass(frozen=True, eq=False)
class ShaCrossed:
    """Kernel of the joint restriction for a crossed module: the classes
    of the global group restricting to the neutral class everywhere."""

    degree: int
    classes: tuple[int, ...]
    group: FiniteGroup
    left: Union[HMinusOne, HZero]

    @property
    def is_trivial(self) -> bool:
        return len(self.classes) == 1


def _crossed_sha(cols: CrossedMvColumns) -> ShaCrossed:
    r = cols.degree
    n_left = len(cols.left.members) if r == -1 else cols.left.order
    kernel = [idx for idx in range(n_left)
              if all(vm[idx] == 0 for vm in cols.vertex_maps)]
    pos = {c: i for i, c in enumerate(kernel)}
    if r == -1:
        lg = cols.left.group
        table = tuple(tuple(pos[lg.mul(a, b)] for b in kernel)
                      for a in kernel)
    else:
        tbl = cols.left.table
        table = tuple(tuple(pos[tbl[a][b]] for b in kernel)
                      for a in kernel)
    return ShaCrossed(r, tuple(kernel), group_from_table(table), cols.left)


DEFAULT_PRODUCT_BOUND = 10 ** 6


@dataclass(frozen=True, eq=False)
class CrossedReport:
    """The evaluable junctions of the six-term crossed-module sequence.

    Exactness at the edge products and at the global degree-0 term would
    need connecting maps, which the finite model does not construct;
    those junctions are listed in ``not_evaluated``.
    """

    degrees: tuple[int, ...]
    columns: tuple[CrossedMvColumns, ...]
    composition_zero: tuple[bool, ...]
    exact_at_left: tuple[Optional[bool], ...]
    exact_at_middle: tuple[tuple[bool, Optional[tuple]], ...]
    sha_groups: tuple[ShaCrossed, ...]
    not_evaluated: tuple[tuple[int, str], ...]


def _crossed_middle_exactness(cols: CrossedMvColumns, edges,
                              bound: int):
    """Enumerate the vertex product and compare ker(difference) with the
    image of the joint restriction."""
    sizes = [len(m.members) if cols.degree == -1 else m.order
             for m in cols.middle]
    total = 1
    for s in sizes:
        total *= s
    if total > bound:
        raise SizeLimitError(
            f"vertex product of size {total} exceeds the bound {bound}")
    n_left = (len(cols.left.members) if cols.degree == -1
              else cols.left.order)
    image = {tuple(cols.vertex_maps[i][c] for i in range(len(sizes)))
             for c in range(n_left)}
    for assignment in itertools.product(*[range(s) for s in sizes]):
        if any(v != 0 for v in cols.difference(assignment, edges)):
            continue
        if assignment not in image:
            return False, assignment
    return True, None


def crossed_six_term_report(graph: PatchingGraph, c: FiniteCrossedModule,
                            bound: int = DEFAULT_PRODUCT_BOUND
                            ) -> CrossedReport:
    """Evaluate the H^-1 and H^0 rows of the crossed-module sequence."""
    degrees = (-1, 0)
    columns = []
    comp_zero = []
    at_left: list[Optional[bool]] = []
    at_middle = []
    shas = []
    skipped: list[tuple[int, str]] = []
    for r in degrees:
        cols = mv_columns(graph, c, r)
        columns.append(cols)
        n_left = len(cols.left.members) if r == -1 else cols.left.order
        ok = True
        for idx in range(n_left):
            assignment = tuple(cols.vertex_maps[i][idx]
                               for i in range(len(graph.vertices)))
            if any(v != 0 for v in cols.difference(assignment,
                                                   graph.edges)):
                ok = False
                break
        comp_zero.append(ok)
        s = _crossed_sha(cols)
        shas.append(s)
        if r == -1:
            at_left.append(s.is_trivial)
        else:
            at_left.append(None)
            skipped.append((r, "left"))
        at_middle.append(_crossed_middle_exactness(cols, graph.edges,
                                                   bound))
        skipped.append((r, "right"))
    return CrossedReport(degrees, tuple(columns), tuple(comp_zero),
                         tuple(at_left), tuple(at_middle), tuple(shas),
                         tuple(skipped))


# ---------------------------------------------------------------------------
# Refinement along a finite extension (a subgroup H of gamma).

def _orbits(cs, handle: SubgroupHandle) -> list[list[int]]:
    """Orbits of a subgroup on the coset space, each sorted, listed by
    minimal element."""
    seen = [False] * cs.size
    out = []
    for start in range(cs.size):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for g in handle.members:
                y = cs.act(g, x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        for x in orbit:
            seen[x] = True
        out.append(sorted(orbit))
    return out


def _orbit_stabilizer(cs, handle: SubgroupHandle, point: int
                      ) -> tuple[int, ...]:
    return tuple(g for g in handle.members if cs.act(g, point) == point)


def refine_graph(graph: PatchingGraph, h: SubgroupHandle) -> PatchingGraph:
    """Split every vertex and edge into the orbits of its subgroup on
    the coset space of ``h``.

    Refined subgroups are orbit stabilizers at the minimal coset of each
    orbit.  Stabilizers at different points of an orbit are conjugate,
    so an edge stabilizer need not literally sit inside the stabilizers
    chosen for its endpoints; edge subgroups are intersected with both
    endpoint subgroups to keep the containment invariant (for a normal
    ``h`` all base points give the same stabilizer and nothing is lost).
    """
    gamma = graph.gamma
    if not _same_group(h.parent, gamma):
        raise MembershipError("refinement subgroup belongs to a "
                              "different group")
    cs = coset_action(gamma, h)
    new_vertices: list[SubgroupHandle] = []
    vertex_ids: list[dict[int, int]] = []  # per vertex: orbit min -> id
    vertex_books = []
    for handle in graph.vertices:
        ids: dict[int, int] = {}
        book = []
        for orbit in _orbits(cs, handle):
            rep = orbit[0]
            stab = _orbit_stabilizer(cs, handle, rep)
            ids[rep] = len(new_vertices)
            new_vertices.append(SubgroupHandle(gamma, stab))
            book.append((rep, len(orbit)))
        vertex_ids.append(ids)
        vertex_books.append(tuple(book))

    def orbit_rep_of(vertex: int, coset: int) -> int:
        handle = graph.vertices[vertex]
        seen = {coset}
        queue = [coset]
        best = coset
        while queue:
            x = queue.pop()
            best = min(best, x)
            for g in handle.members:
                y = cs.act(g, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return best

    new_edges = []
    edge_books = []
    for (head, tail, handle) in graph.edges:
        book = []
        for orbit in _orbits(cs, handle):
            rep = orbit[0]
            stab = set(_orbit_stabilizer(cs, handle, rep))
            head_id = vertex_ids[head][orbit_rep_of(head, rep)]
            tail_id = vertex_ids[tail][orbit_rep_of(tail, rep)]
            members = (stab & set(new_vertices[head_id].members)
                       & set(new_vertices[tail_id].members))
            new_edges.append((head_id, tail_id,
                              SubgroupHandle(gamma, tuple(members))))
            book.append((rep, len(orbit)))
        edge_books.append(tuple(book))
    refinement = Refinement(h, cs.size, tuple(vertex_books),
                            tuple(edge_books))
    return build_patching_graph(gamma, new_vertices, new_edges, refinement)
