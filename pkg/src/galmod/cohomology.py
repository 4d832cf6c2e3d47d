"""Group cohomology by explicit cochain linear algebra.

H^n (n = 0, 1, 2) and Tate H^-1/H^0 for lattices, hypercohomology of
two-term complexes in degrees -1..1, restriction maps, and a Shapiro
comparator.  Cochains are normalized (they vanish whenever an argument is
the identity), cutting C^n from |H|^n to (|H|-1)^n coordinate blocks; the
unnormalized complex is kept around as an independent oracle for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import intlinalg as la
from .groups import FiniteGroup, SubgroupHandle
from .intlinalg import AbGroupPresentation, IntMatrix
from .lattice import FgModule, GLattice, LatticeMap, induce


class UnsupportedDegreeError(Exception):
    pass


class UnsupportedCoefficientsError(Exception):
    pass


Coefficient = Union[GLattice, FgModule]


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """Invariant factors plus explicit generator cochains.

    ``generators[i]`` is a cocycle vector in cochain coordinates whose
    class has order ``invariant_factors[i]`` (0 for a free generator).
    """

    degree: int
    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    presentation: AbGroupPresentation
    group_order: int
    coeff_dim: int
    normalized: bool = True

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self):
        return self.presentation.order

    def reduce(self, cochain: Sequence[int]) -> tuple[int, ...]:
        """Class coordinates of a cocycle on the stored generators."""
        return self.presentation.reduce(cochain)

    def __repr__(self):
        return (f"CohomologyGroup(degree={self.degree}, "
                f"factors={list(self.invariant_factors)})")


@dataclass(frozen=True, eq=False)
class CohMap:
    source: CohomologyGroup
    target: CohomologyGroup
    matrix: IntMatrix  # target coords x source generators


def _acting(h) -> tuple[FiniteGroup, list[int]]:
    """Resolve a FiniteGroup or SubgroupHandle to a standalone group plus
    the parent ids of its elements in BFS order."""
    if isinstance(h, SubgroupHandle):
        sub = h.as_group()
        return sub, list(h.members_bfs())
    return h, list(h.elements())


def _coefficient_data(a: Coefficient, parent_ids: Sequence[int]):
    mats = a.element_matrices()
    sel = tuple(mats[g] for g in parent_ids)
    if isinstance(a, GLattice):
        return a.rank, sel, la.zeros(a.rank, 0)
    return a.ngens, sel, a.relations


def cochain_dim(order: int, rank: int, n: int, normalized: bool = True) -> int:
    if n < 0:
        return 0
    q = order - 1 if normalized else order
    return (q ** n) * rank


def _letters(order: int, normalized: bool) -> list[int]:
    return list(range(1, order)) if normalized else list(range(order))


def _tuples(letters: list[int], n: int):
    if n == 0:
        yield ()
        return
    q = len(letters)
    if q == 0:
        return
    idx = [0] * n
    while True:
        yield tuple(letters[i] for i in idx)
        j = n - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < q:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


def _tuple_index(tup: tuple[int, ...], order: int, normalized: bool) -> int:
    q = order - 1 if normalized else order
    idx = 0
    for g in tup:
        idx = idx * q + (g - 1 if normalized else g)
    return idx


def bar_differential(group: FiniteGroup, mats: Sequence[IntMatrix],
                     rank: int, n: int,
                     normalized: bool = True) -> IntMatrix:
    """Matrix of the bar-complex differential C^n -> C^{n+1}.

    (df)(g1..g_{n+1}) = g1.f(g2..) + sum (-1)^i f(.. g_i g_{i+1} ..)
    + (-1)^{n+1} f(g1..gn); normalized cochains drop any term whose
    argument tuple contains the identity.
    """
    order = group.order
    src_dim = cochain_dim(order, rank, n, normalized)
    tgt_dim = cochain_dim(order, rank, n + 1, normalized)
    letters = _letters(order, normalized)
    rows = [[0] * src_dim for _ in range(tgt_dim)]

    def src_base(tup):
        if normalized and any(g == 0 for g in tup):
            return None
        return _tuple_index(tup, order, normalized) * rank

    for tcount, tup in enumerate(_tuples(letters, n + 1)):
        tbase = tcount * rank
        # face 0: g1 acts on the coefficient
        sb = src_base(tup[1:])
        if sb is not None:
            m = mats[tup[0]]
            for a in range(rank):
                row = rows[tbase + a]
                ma = m[a]
                for b in range(rank):
                    if ma[b]:
                        row[sb + b] += ma[b]
        # inner faces
        sign = -1
        for i in range(n):
            merged = tup[:i] + (group.mul(tup[i], tup[i + 1]),) + tup[i + 2:]
            sb = src_base(merged)
            if sb is not None:
                for a in range(rank):
                    rows[tbase + a][sb + a] += sign
            sign = -sign
        # last face drops g_{n+1}
        sb = src_base(tup[:n])
        if sb is not None:
            for a in range(rank):
                rows[tbase + a][sb + a] += sign
    return la.freeze(rows)


def _block_relations(rel: IntMatrix, blocks: int) -> list[list[int]]:
    """Relation columns of C^n with module coefficients: one copy of the
    relation lattice per tuple block."""
    n_rel = la.shape(rel)[1]
    if n_rel == 0 or blocks == 0:
        return []
    r = la.shape(rel)[0]
    cols = []
    for blk in range(blocks):
        for j in range(n_rel):
            col = [0] * (blocks * r)
            for i in range(r):
                col[blk * r + i] = rel[i][j]
            cols.append(col)
    return cols


def _cohomology_presentation(group: FiniteGroup, rank: int,
                             mats: Sequence[IntMatrix], rel: IntMatrix,
                             n: int, normalized: bool) -> AbGroupPresentation:
    order = group.order
    q = order - 1 if normalized else order
    dim_n = cochain_dim(order, rank, n, normalized)
    d_n = bar_differential(group, mats, rank, n, normalized)
    rel_n = _block_relations(rel, q ** n)
    rel_np1 = _block_relations(rel, q ** (n + 1))
    if rel_np1:
        big = la.hstack(d_n, la.from_columns(rel_np1, la.shape(d_n)[0]))
        kb = la.kernel_basis(big)
        ker_cols = [[v[i] for i in range(dim_n)] for v in kb]
    else:
        ker_cols = la.kernel_basis(d_n)
    if n > 0:
        d_prev = bar_differential(group, mats, rank, n - 1, normalized)
        im_cols = la.columns(d_prev)
    else:
        im_cols = []
    num = ker_cols + rel_n
    den = im_cols + rel_n
    return la.abgroup_from_subquotient(num, den, dim_n)


_COH_CACHE: dict = {}


def _cache_key(h, a, n, normalized):
    if isinstance(h, SubgroupHandle):
        hk = (id(h.parent), h.members)
    else:
        hk = (id(h), None)
    return (hk, id(a), n, normalized)


def group_cohomology(h, a: Coefficient, n: int,
                     normalized: bool = True) -> CohomologyGroup:
    """H^n(H, A) from the (normalized) bar-resolution cochain complex."""
    if n not in (0, 1, 2):
        raise UnsupportedDegreeError(f"degree {n} not in {{0, 1, 2}}")
    key = _cache_key(h, a, n, normalized)
    hit = _COH_CACHE.get(key)
    if hit is not None:
        return hit[2]
    sub, parent_ids = _acting(h)
    rank, mats, rel = _coefficient_data(a, parent_ids)
    pres = _cohomology_presentation(sub, rank, mats, rel, n, normalized)
    out = CohomologyGroup(n, pres.factors, pres.generators, pres,
                          sub.order, rank, normalized)
    # pin h and a so their ids (part of the key) cannot be recycled
    _COH_CACHE[key] = (h, a, out)
    return out


def tate_cohomology(h, lat: GLattice, n: int) -> CohomologyGroup:
    """Tate cohomology in degrees -1 and 0 for lattice coefficients."""
    if n not in (-1, 0):
        raise UnsupportedDegreeError(f"Tate degree {n} not in {{-1, 0}}")
    if not isinstance(lat, GLattice):
        raise UnsupportedCoefficientsError("Tate cohomology needs a lattice")
    key = _cache_key(h, lat, ("tate", n), True)
    hit = _COH_CACHE.get(key)
    if hit is not None:
        return hit[2]
    sub, parent_ids = _acting(h)
    rank, mats, _ = _coefficient_data(lat, parent_ids)
    norm = la.zeros(rank, rank)
    for m in mats:
        norm = la.mat_add(norm, m)
    ident = la.identity(rank)
    if n == -1:
        num = la.kernel_basis(norm)
        den = []
        for m in mats[1:]:
            den.extend(la.columns(la.mat_add(m, la.mat_neg(ident))))
    else:
        blocks = [la.mat_add(m, la.mat_neg(ident)) for m in mats[1:]]
        num = (la.kernel_basis(la.vstack(*blocks)) if blocks
               else la.columns(ident))
        den = la.columns(norm)
    pres = la.abgroup_from_subquotient(num, den, rank)
    out = CohomologyGroup(n, pres.factors, pres.generators, pres,
                          sub.order, rank)
    _COH_CACHE[key] = (h, lat, out)
    return out


def restriction(gamma: FiniteGroup, h: SubgroupHandle, a: Coefficient,
                n: int, normalized: bool = True) -> CohMap:
    """Restriction H^n(Gamma, A) -> H^n(H, A) along H <= Gamma."""
    src = group_cohomology(gamma, a, n, normalized)
    tgt = group_cohomology(h, a, n, normalized)
    sub = h.as_group()
    rank = src.coeff_dim
    cols = []
    for gen in src.generators:
        restricted = _restrict_cochain(gen, gamma.order, sub, h, rank, n,
                                       normalized)
        cols.append(list(tgt.reduce(restricted)))
    matrix = la.from_columns(cols, len(tgt.invariant_factors))
    return CohMap(src, tgt, matrix)


def cochain_pullback(vec: Sequence[int], src_order: int,
                     tgt_group: FiniteGroup, elem_map, rank: int,
                     n: int, normalized: bool = True) -> list[int]:
    """Pull a cochain back along a group inclusion given by ``elem_map``
    (target element id -> source element id)."""
    letters = _letters(tgt_group.order, normalized)
    out = [0] * cochain_dim(tgt_group.order, rank, n, normalized)
    for tcount, tup in enumerate(_tuples(letters, n)):
        src_tup = tuple(elem_map(g) for g in tup)
        if normalized and any(g == 0 for g in src_tup):
            continue
        sbase = _tuple_index(src_tup, src_order, normalized) * rank
        for aidx in range(rank):
            out[tcount * rank + aidx] = vec[sbase + aidx]
    return out


def _restrict_cochain(vec: Sequence[int], parent_order: int,
                      sub: FiniteGroup, h: SubgroupHandle, rank: int,
                      n: int, normalized: bool) -> list[int]:
    return cochain_pullback(vec, parent_order, sub, h.to_parent, rank, n,
                            normalized)


# ---------------------------------------------------------------------------
# Hypercohomology of two-term complexes [L1 -> L2] (degrees -1 and 0).

def total_differential(group: FiniteGroup, mats1, mats2, r1: int, r2: int,
                       diff: IntMatrix, n: int,
                       normalized: bool = True) -> IntMatrix:
    """Differential Tot^n -> Tot^{n+1} of the total complex
    Tot^n = C^{n+1}(L1) + C^n(L2), D(x, y) = (dx, (-1)^n diff*x + dy)."""
    order = group.order
    q = order - 1 if normalized else order
    d1 = bar_differential(group, mats1, r1, n + 1, normalized)
    d2 = (bar_differential(group, mats2, r2, n, normalized) if n >= 0
          else la.zeros(cochain_dim(order, r2, n + 1, normalized), 0))
    blocks1 = q ** (n + 1)
    sign = 1 if n % 2 == 0 else -1
    diff_block = la.block_diag(*([diff] * blocks1)) if blocks1 else la.zeros(0, 0)
    if sign < 0:
        diff_block = la.mat_neg(diff_block)
    top = la.hstack(d1, la.zeros(la.shape(d1)[0], la.shape(d2)[1]))
    bottom = la.hstack(diff_block, d2)
    return la.vstack(top, bottom)


def hypercohomology(h, t, n: int, normalized: bool = True) -> CohomologyGroup:
    """Hypercohomology of a two-term complex of lattices, degrees -1..1."""
    if n not in (-1, 0, 1):
        raise UnsupportedDegreeError(f"degree {n} not in {{-1, 0, 1}}")
    key = _cache_key(h, t, ("hyper", n), normalized)
    hit = _COH_CACHE.get(key)
    if hit is not None:
        return hit[2]
    sub, parent_ids = _acting(h)
    l1, l2 = t.l1, t.l2
    r1, mats1, _ = _coefficient_data(l1, parent_ids)
    r2, mats2, _ = _coefficient_data(l2, parent_ids)
    diff = t.differential.matrix
    order = sub.order
    d_n = total_differential(sub, mats1, mats2, r1, r2, diff, n, normalized)
    dim_n = (cochain_dim(order, r1, n + 1, normalized)
             + cochain_dim(order, r2, n, normalized))
    ker = la.kernel_basis(d_n)
    if n >= 0:
        d_prev = total_differential(sub, mats1, mats2, r1, r2, diff, n - 1,
                                    normalized)
        im = la.columns(d_prev)
    else:
        im = []
    pres = la.abgroup_from_subquotient(ker, im, dim_n)
    out = CohomologyGroup(n, pres.factors, pres.generators, pres,
                          order, r1 + r2)
    _COH_CACHE[key] = (h, t, out)
    return out


def hyper_restriction(gamma: FiniteGroup, h: SubgroupHandle, t, n: int,
                      normalized: bool = True) -> CohMap:
    """Restriction on hypercohomology of a two-term complex."""
    src = hypercohomology(gamma, t, n, normalized)
    tgt = hypercohomology(h, t, n, normalized)
    sub = h.as_group()
    r1, r2 = t.l1.rank, t.l2.rank
    split_src = cochain_dim(gamma.order, r1, n + 1, normalized)
    cols = []
    for gen in src.generators:
        part1 = gen[:split_src]
        part2 = gen[split_src:]
        res1 = _restrict_cochain(part1, gamma.order, sub, h, r1, n + 1,
                                 normalized)
        res2 = _restrict_cochain(part2, gamma.order, sub, h, r2, n,
                                 normalized) if n >= 0 else []
        cols.append(list(tgt.reduce(list(res1) + list(res2))))
    matrix = la.from_columns(cols, len(tgt.invariant_factors))
    return CohMap(src, tgt, matrix)


@dataclass(frozen=True)
class ShapiroVerdict:
    isomorphic: bool
    induced_side: CohomologyGroup
    subgroup_side: CohomologyGroup


def shapiro_compare(gamma: FiniteGroup, h: SubgroupHandle, lat: GLattice,
                    n: int) -> ShapiroVerdict:
    """Compare H^n(Gamma, Ind L) with H^n(H, L) (Shapiro's lemma)."""
    ind = induce(lat, h)
    big = group_cohomology(gamma, ind, n)
    small = group_cohomology(lat.group, lat, n)
    return ShapiroVerdict(big.invariant_factors == small.invariant_factors,
                          big, small)
