"""G-lattices and equivariant maps: exact integer modules with a group
action by unimodular matrices.

A GLattice stores one matrix per group generator; matrices for all
elements are derived from the BFS generator words and cached.  FgModule is
the only torsion-capable type (cokernels live there); lattices are always
free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import intlinalg as la
from .groups import (FiniteGroup, MembershipError, SubgroupHandle,
                     coset_action, enumerate_subgroups)
from .intlinalg import IntMatrix


class EquivarianceError(Exception):
    """A map or action fails an equivariance / well-definedness check."""


@dataclass(frozen=True, eq=False)
class GLattice:
    """Free Z-module of finite rank with a group action by unimodular
    matrices (one per generator)."""

    group: FiniteGroup
    rank: int
    action: tuple[IntMatrix, ...]
    permutation_subgroups: Optional[tuple[SubgroupHandle, ...]] = None

    def __post_init__(self):
        if len(self.action) != len(self.group.generators):
            raise ValueError("one action matrix per generator required")
        for m in self.action:
            if la.shape(m) != (self.rank, self.rank):
                raise ValueError("action matrix has wrong shape")

    def validate(self) -> None:
        """Check unimodularity and that the action respects the full
        multiplication table."""
        for m in self.action:
            if self.rank and not la.is_unimodular(m):
                raise EquivarianceError("action matrix is not unimodular")
        mats = self.element_matrices()
        g = self.group
        for a in g.elements():
            for b in g.elements():
                if not la.mat_eq(la.mat_mul(mats[a], mats[b]),
                                 mats[g.mul(a, b)]):
                    raise EquivarianceError(
                        f"action violates the relation {a}*{b}")

    def element_matrices(self) -> tuple[IntMatrix, ...]:
        cached = getattr(self, "_elem_mats", None)
        if cached is None:
            mats = []
            ident = la.identity(self.rank)
            for e in self.group.elements():
                m = ident
                for gi in self.group.word(e):
                    m = la.mat_mul(m, self.action[gi])
                mats.append(m)
            cached = tuple(mats)
            object.__setattr__(self, "_elem_mats", cached)
        return cached

    def element_matrix(self, e: int) -> IntMatrix:
        return self.element_matrices()[e]

    @property
    def is_permutation_certified(self) -> bool:
        return self.permutation_subgroups is not None

    def __repr__(self):
        return f"GLattice(rank={self.rank}, group={self.group.name or self.group.order})"


@dataclass(frozen=True, eq=False)
class LatticeMap:
    """Equivariant map of G-lattices; ``matrix`` is target.rank x
    source.rank acting on column coordinate vectors."""

    source: GLattice
    target: GLattice
    matrix: IntMatrix

    def __post_init__(self):
        r, c = la.shape(self.matrix)
        # zero-row matrices cannot carry a column count
        if r != self.target.rank or (r > 0 and c != self.source.rank):
            raise ValueError("map matrix has wrong shape")

    def validate(self) -> None:
        for ms, mt in zip(self.source.action, self.target.action):
            if not la.mat_eq(la.mat_mul(mt, self.matrix),
                             la.mat_mul(self.matrix, ms)):
                raise EquivarianceError("map is not equivariant")

    def is_zero(self) -> bool:
        return la.is_zero(self.matrix)

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self after other."""
        return LatticeMap(other.source, self.target,
                          la.mat_mul(self.matrix, other.matrix))


@dataclass(frozen=True, eq=False)
class FgModule:
    """Finitely generated abelian group Z^n / span(relations) with a group
    action descending to the quotient."""

    group: FiniteGroup
    ngens: int
    relations: IntMatrix  # ngens x nrel, columns are relations
    action: tuple[IntMatrix, ...]

    def validate(self) -> None:
        rel_cols = la.columns(self.relations)
        for m in self.action:
            if la.shape(m) != (self.ngens, self.ngens):
                raise ValueError("action matrix has wrong shape")
            for col in la.columns(la.mat_mul(m, self.relations)):
                if not la.in_span(rel_cols, col):
                    raise EquivarianceError(
                        "action does not preserve the relations")

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Canonical invariant factors (1s dropped, 0 per free summand)."""
        pres = la.abgroup_from_subquotient(
            la.columns(la.identity(self.ngens)), la.columns(self.relations),
            self.ngens)
        return pres.factors

    def presentation(self) -> la.AbGroupPresentation:
        return la.abgroup_from_subquotient(
            la.columns(la.identity(self.ngens)), la.columns(self.relations),
            self.ngens)

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def is_torsion_free(self) -> bool:
        return all(f == 0 for f in self.invariant_factors)

    def element_matrices(self) -> tuple[IntMatrix, ...]:
        cached = getattr(self, "_elem_mats", None)
        if cached is None:
            mats = []
            ident = la.identity(self.ngens)
            for e in self.group.elements():
                m = ident
                for gi in self.group.word(e):
                    m = la.mat_mul(m, self.action[gi])
                mats.append(m)
            cached = tuple(mats)
            object.__setattr__(self, "_elem_mats", cached)
        return cached


@dataclass(frozen=True, eq=False)
class FgModuleMap:
    """Map of FgModules given on generators."""

    source: FgModule
    target: FgModule
    matrix: IntMatrix

    def validate(self) -> None:
        tgt_rel = la.columns(self.target.relations)
        for col in la.columns(la.mat_mul(self.matrix, self.source.relations)):
            if not la.in_span(tgt_rel, col):
                raise EquivarianceError("map is not well defined on classes")


def lattice_as_module(lat: GLattice) -> FgModule:
    return FgModule(lat.group, lat.rank, la.zeros(lat.rank, 0), lat.action)


def trivial_lattice(group: FiniteGroup, rank: int = 1) -> GLattice:
    ident = la.identity(rank)
    return GLattice(group, rank, tuple(ident for _ in group.generators))


def zero_lattice(group: FiniteGroup) -> GLattice:
    return GLattice(group, 0, tuple(la.zeros(0, 0) for _ in group.generators))


def make_permutation_lattice(group: FiniteGroup,
                             subgroups: Sequence[SubgroupHandle]) -> GLattice:
    """Direct sum of coset lattices Z[G/H]; basis permuted by the group,
    carrying a permutation certificate."""
    spaces = []
    for h in subgroups:
        if h.parent is not group and h.parent.table != group.table:
            raise MembershipError("subgroup from a different group")
        spaces.append(coset_action(group, h))
    rank = sum(cs.size for cs in spaces)
    action = []
    for gen in group.generators:
        m = [[0] * rank for _ in range(rank)]
        off = 0
        for cs in spaces:
            for c in range(cs.size):
                m[off + cs.act(gen, c)][off + c] = 1
            off += cs.size
        action.append(la.freeze(m))
    return GLattice(group, rank, tuple(action),
                    permutation_subgroups=tuple(subgroups))


def regular_lattice(group: FiniteGroup) -> GLattice:
    from .groups import trivial_subgroup
    return make_permutation_lattice(group, [trivial_subgroup(group)])


def sign_lattice(group: FiniteGroup, values: Sequence[int]) -> GLattice:
    """Rank-1 lattice where generator i acts by values[i] (each +-1)."""
    if any(v not in (1, -1) for v in values):
        raise ValueError("sign action must be +-1 per generator")
    return GLattice(group, 1, tuple(((int(v),),) for v in values))


def dual_lattice(lat: GLattice) -> GLattice:
    """Hom(L, Z) with the contragredient action (inverse transpose)."""
    action = tuple(
        la.transpose(la.mat_inverse_unimodular(m)) if lat.rank else m
        for m in lat.action)
    perm = lat.permutation_subgroups
    return GLattice(lat.group, lat.rank, action,
                    permutation_subgroups=perm)


def dual_map(f: LatticeMap) -> LatticeMap:
    """The transposed map between dual lattices (direction reversed)."""
    return LatticeMap(dual_lattice(f.target), dual_lattice(f.source),
                      la.transpose_shaped(f.matrix, f.source.rank,
                                          f.target.rank))


def direct_sum(a: GLattice, b: GLattice) -> GLattice:
    if a.group is not b.group and a.group.table != b.group.table:
        raise ValueError("summands over different groups")
    action = tuple(la.block_diag(ma, mb)
                   for ma, mb in zip(a.action, b.action))
    perm = None
    if a.permutation_subgroups is not None and b.permutation_subgroups is not None:
        perm = a.permutation_subgroups + b.permutation_subgroups
    return GLattice(a.group, a.rank + b.rank, action, perm)


def induced_action_on_sublattice(lat: GLattice,
                                 basis_cols: Sequence[Sequence[int]]) -> GLattice:
    """Action on an invariant sublattice in terms of the given basis."""
    k = len(basis_cols)
    action = []
    for m in lat.action:
        imgs = [la.mat_vec(m, c) for c in basis_cols]
        x = la.solve_columns([list(c) for c in basis_cols],
                             [list(v) for v in imgs]) if k else []
        action.append(la.from_columns(x, k) if k else la.zeros(0, 0))
    return GLattice(lat.group, k, tuple(action))


@dataclass(frozen=True)
class MapDecomposition:
    kernel: GLattice
    kernel_inclusion: LatticeMap
    image: GLattice
    image_inclusion: LatticeMap
    cokernel: FgModule
    # cokernel projection is the identity on target coordinates


def map_decompose(f: LatticeMap) -> MapDecomposition:
    """Saturated kernel, exact image, and cokernel presentation of an
    equivariant map."""
    kb = la.kernel_basis(f.matrix)
    kernel = induced_action_on_sublattice(f.source, kb)
    kinc = LatticeMap(kernel, f.source, la.from_columns(kb, f.source.rank))
    ib = la.image_basis(f.matrix)
    image = induced_action_on_sublattice(f.target, ib)
    iinc = LatticeMap(image, f.target, la.from_columns(ib, f.target.rank))
    coker = FgModule(f.target.group, f.target.rank, f.matrix,
                     f.target.action)
    return MapDecomposition(kernel, kinc, image, iinc, coker)


def fixed_points(lat: GLattice, h: SubgroupHandle) -> list[list[int]]:
    """Saturated basis (columns) of the H-fixed sublattice."""
    mats = lat.element_matrices()
    blocks = []
    ident = la.identity(lat.rank)
    for m in h.members:
        if m == 0:
            continue
        blocks.append(la.mat_add(mats[m], la.mat_neg(ident)))
    if not blocks:
        return la.columns(la.identity(lat.rank))
    return la.kernel_basis(la.vstack(*blocks))


def module_fixed_points(mod: FgModule, h: SubgroupHandle) -> list[list[int]]:
    """Generators (lifts in Z^ngens) of the H-fixed submodule of an
    FgModule, including torsion contributions."""
    mats = mod.element_matrices()
    ident = la.identity(mod.ngens)
    blocks = []
    for m in h.members:
        if m == 0:
            continue
        blocks.append(la.mat_add(mats[m], la.mat_neg(ident)))
    if not blocks:
        return la.columns(la.identity(mod.ngens))
    nrel = la.shape(mod.relations)[1]
    stacked = la.vstack(*blocks)
    if nrel:
        rel_stack = la.vstack(*[mod.relations for _ in blocks])
        big = la.hstack(stacked, rel_stack)
        kb = la.kernel_basis(big)
        proj = [[v[i] for i in range(mod.ngens)] for v in kb]
    else:
        proj = la.kernel_basis(stacked)
    return la.image_basis(la.from_columns(proj + la.columns(mod.relations),
                                          mod.ngens)) if (proj or nrel) else []


def restrict_lattice(lat: GLattice, h: SubgroupHandle) -> GLattice:
    """The same lattice viewed over a subgroup of its group."""
    sub = h.as_group()
    mats = lat.element_matrices()
    action = tuple(mats[h.to_parent(g)] for g in sub.generators)
    return GLattice(sub, lat.rank, action,
                    permutation_subgroups=None)


def restrict_module(mod: FgModule, h: SubgroupHandle) -> FgModule:
    sub = h.as_group()
    mats = mod.element_matrices()
    action = tuple(mats[h.to_parent(g)] for g in sub.generators)
    return FgModule(sub, mod.ngens, mod.relations, action)


def induce(lat: GLattice, h: SubgroupHandle) -> GLattice:
    """Induction from a subgroup to its parent.

    ``lat`` must live over ``h.as_group()``.  Basis is (coset, source
    basis) pairs; coset representatives are the minimal element per left
    coset.
    """
    gamma = h.parent
    if h.is_whole_group() and lat.group.table == gamma.table:
        to_sub = lambda g: g
    elif lat.group.table == h.as_group().table:
        to_sub = h.from_parent
    else:
        raise MembershipError("lattice group does not match the subgroup")
    cs = coset_action(gamma, h)
    reps = cs.representatives
    r = lat.rank
    n = cs.size
    sub_mats = lat.element_matrices()
    action = []
    for gen in gamma.generators:
        m = [[0] * (n * r) for _ in range(n * r)]
        for j in range(n):
            tgt = cs.act(gen, j)
            # gen * reps[j] = reps[tgt] * hh with hh in H
            hh = gamma.mul(gamma.inv(reps[tgt]), gamma.mul(gen, reps[j]))
            block = sub_mats[to_sub(hh)]
            for a in range(r):
                for b in range(r):
                    m[tgt * r + a][j * r + b] = block[a][b]
        action.append(la.freeze(m))
    return GLattice(gamma, n * r, tuple(action))


def fg_iso_check(phi: FgModuleMap) -> bool:
    """True iff the map is an isomorphism of finitely generated abelian
    groups (injective and surjective, decided by SNF)."""
    phi.validate()
    src = phi.source
    tgt = phi.target
    # surjectivity: target generated by image + target relations
    coker = la.abgroup_from_subquotient(
        la.columns(la.identity(tgt.ngens)),
        la.columns(phi.matrix) + la.columns(tgt.relations),
        tgt.ngens)
    if not coker.is_trivial:
        return False
    # injectivity: kernel (preimage of target relations mod source
    # relations) trivial
    nrel_t = la.shape(tgt.relations)[1]
    if nrel_t:
        big = la.hstack(phi.matrix, tgt.relations)
        kb = la.kernel_basis(big)
        proj = [[v[i] for i in range(src.ngens)] for v in kb]
    else:
        proj = la.kernel_basis(phi.matrix)
    ker = la.abgroup_from_subquotient(
        proj + la.columns(src.relations), la.columns(src.relations),
        src.ngens)
    return ker.is_trivial


def conjugate_lattice(lat: GLattice, u: IntMatrix) -> GLattice:
    """Change of basis by a unimodular matrix: action -> u a u^-1."""
    uinv = la.mat_inverse_unimodular(u)
    action = tuple(la.mat_mul(la.mat_mul(u, m), uinv) for m in lat.action)
    return GLattice(lat.group, lat.rank, action)
