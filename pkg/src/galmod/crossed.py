"""Finite crossed modules and their nonabelian H^-1 / H^0.

A crossed module is a homomorphism d: G -> H of finite groups with a left
H-action on G satisfying g g' g^-1 = d(g).g' and d(h.g) = h d(g) h^-1,
plus an outer action of a finite group Gamma on both G and H.  H^0 is
computed by exhaustive enumeration of 0-cocycles (alpha: Gamma -> G,
h in H) modulo coboundaries, with the cochain group law
(alpha, h)(beta, h') = ((h . beta) alpha, h h').
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .groups import FiniteGroup, SizeLimitError, group_from_table

DEFAULT_ENUMERATION_BOUND = 10 ** 6


@dataclass(frozen=True, eq=False)
class FiniteCrossedModule:
    """d: G -> H with an H-action on G and a Gamma-action on both."""

    g: FiniteGroup
    h: FiniteGroup
    boundary: tuple[int, ...]  # value table G -> H
    h_action: tuple[tuple[int, ...], ...]  # h_action[h][g]
    galois: FiniteGroup
    galois_on_g: tuple[tuple[int, ...], ...]  # per Gamma element
    galois_on_h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.boundary) != self.g.order:
            raise ValueError("boundary table has wrong length")
        if len(self.h_action) != self.h.order:
            raise ValueError("H-action table has wrong length")
        if len(self.galois_on_g) != self.galois.order \
                or len(self.galois_on_h) != self.galois.order:
            raise ValueError("Galois action tables have wrong length")

    def act_h(self, h: int, g: int) -> int:
        return self.h_action[h][g]

    def act_gal_g(self, s: int, g: int) -> int:
        return self.galois_on_g[s][g]

    def act_gal_h(self, s: int, h: int) -> int:
        return self.galois_on_h[s][h]

    def kernel_elements(self) -> tuple[int, ...]:
        return tuple(x for x in self.g.elements() if self.boundary[x] == 0)


@dataclass(frozen=True)
class CrossedVerdict:
    ok: bool
    failure: Optional[tuple]  # (description, witness tuple)


def validate_crossed_module(c: FiniteCrossedModule) -> CrossedVerdict:
    """Exhaustively check the crossed-module axioms; returns the first
    violating tuple on failure."""
    g, h = c.g, c.h
    d = c.boundary
    # boundary is a homomorphism
    for a in g.elements():
        for b in g.elements():
            if d[g.mul(a, b)] != h.mul(d[a], d[b]):
                return CrossedVerdict(False,
                                      ("boundary not a homomorphism", (a, b)))
    # H acts by automorphisms
    for x in h.elements():
        row = c.h_action[x]
        if row[0] != 0:
            return CrossedVerdict(False, ("action does not fix identity",
                                          (x,)))
        for a in g.elements():
            for b in g.elements():
                if row[g.mul(a, b)] != g.mul(row[a], row[b]):
                    return CrossedVerdict(
                        False, ("action not by automorphisms", (x, a, b)))
    for x in h.elements():
        for y in h.elements():
            for a in g.elements():
                if c.act_h(h.mul(x, y), a) != c.act_h(x, c.act_h(y, a)):
                    return CrossedVerdict(
                        False, ("H-action not associative", (x, y, a)))
    # Peiffer identities
    for a in g.elements():
        for b in g.elements():
            if g.mul(g.mul(a, b), g.inv(a)) != c.act_h(d[a], b):
                return CrossedVerdict(False, ("conjugation identity fails",
                                              (a, b)))
    for x in h.elements():
        for a in g.elements():
            if d[c.act_h(x, a)] != h.mul(h.mul(x, d[a]), h.inv(x)):
                return CrossedVerdict(False, ("boundary twist fails", (x, a)))
    # Galois acts by automorphisms compatible with everything
    gal = c.galois
    for s in gal.elements():
        rg, rh = c.galois_on_g[s], c.galois_on_h[s]
        for a in g.elements():
            for b in g.elements():
                if rg[g.mul(a, b)] != g.mul(rg[a], rg[b]):
                    return CrossedVerdict(
                        False, ("Galois not by automorphisms on G",
                                (s, a, b)))
        for x in h.elements():
            for y in h.elements():
                if rh[h.mul(x, y)] != h.mul(rh[x], rh[y]):
                    return CrossedVerdict(
                        False, ("Galois not by automorphisms on H",
                                (s, x, y)))
        for a in g.elements():
            if d[rg[a]] != rh[d[a]]:
                return CrossedVerdict(
                    False, ("Galois does not commute with boundary", (s, a)))
        for x in h.elements():
            for a in g.elements():
                if rg[c.act_h(x, a)] != c.act_h(rh[x], rg[a]):
                    return CrossedVerdict(
                        False, ("Galois incompatible with H-action",
                                (s, x, a)))
    for s in gal.elements():
        for t in gal.elements():
            st = gal.mul(s, t)
            for a in g.elements():
                if c.galois_on_g[s][c.galois_on_g[t][a]] \
                        != c.galois_on_g[st][a]:
                    return CrossedVerdict(
                        False, ("Galois tables not an action on G",
                                (s, t, a)))
            for x in h.elements():
                if c.galois_on_h[s][c.galois_on_h[t][x]] \
                        != c.galois_on_h[st][x]:
                    return CrossedVerdict(
                        False, ("Galois tables not an action on H",
                                (s, t, x)))
    # kernel of the boundary is central
    for z in c.kernel_elements():
        for a in g.elements():
            if g.mul(z, a) != g.mul(a, z):
                return CrossedVerdict(False, ("kernel not central", (z, a)))
    return CrossedVerdict(True, None)


@dataclass(frozen=True, eq=False)
class HMinusOne:
    """Gamma-fixed points of ker d, as an abelian group."""

    members: tuple[int, ...]  # element ids in G
    group: FiniteGroup


def h_minus_one(c: FiniteCrossedModule) -> HMinusOne:
    gal = c.galois
    members = tuple(
        x for x in c.kernel_elements()
        if all(c.act_gal_g(s, x) == x for s in gal.elements()))
    index = {x: i for i, x in enumerate(members)}
    # fixed kernel elements form a subgroup; reorder so identity is 0
    assert members and members[0] == 0
    table = tuple(tuple(index[c.g.mul(a, b)] for b in members)
                  for a in members)
    return HMinusOne(members, group_from_table(table))


Cocycle = tuple[tuple[int, ...], int]  # (alpha value table over Gamma, h)


@dataclass(frozen=True, eq=False)
class HZero:
    """H^0 of a crossed module: cocycle classes with their group law."""

    crossed: FiniteCrossedModule
    cocycles: tuple[Cocycle, ...]
    class_of: dict  # cocycle -> class index
    representatives: tuple[Cocycle, ...]  # lexicographic minimum per class
    table: tuple[tuple[int, ...], ...]
    group: FiniteGroup

    @property
    def order(self) -> int:
        return len(self.representatives)


def _cocycle_product(c: FiniteCrossedModule, z1: Cocycle,
                     z2: Cocycle) -> Cocycle:
    """(alpha, h)(beta, h') = (s -> (h . beta_s) alpha_s, h h')."""
    (alpha, h), (beta, hp) = z1, z2
    vals = tuple(c.g.mul(c.act_h(h, beta[s]), alpha[s])
                 for s in c.galois.elements())
    return (vals, c.h.mul(h, hp))


def _coboundary_transform(c: FiniteCrossedModule, z: Cocycle,
                          g: int) -> Cocycle:
    """The equivalent cocycle (s -> g alpha_s (s.g)^-1, d(g) h)."""
    alpha, h = z
    gg = c.g
    vals = tuple(
        gg.mul(gg.mul(g, alpha[s]), gg.inv(c.act_gal_g(s, g)))
        for s in c.galois.elements())
    return (vals, c.h.mul(c.boundary[g], h))


def enumerate_cocycles(c: FiniteCrossedModule,
                       bound: int = DEFAULT_ENUMERATION_BOUND
                       ) -> tuple[Cocycle, ...]:
    """All 0-cocycles in lexicographic (alpha, h) order."""
    gal, g, h = c.galois, c.g, c.h
    total = g.order ** gal.order
    if total > bound:
        raise SizeLimitError(
            f"{total} candidate maps exceed the bound {bound}")
    out = []
    elements = gal.elements()
    for alpha in itertools.product(range(g.order), repeat=gal.order):
        ok = True
        for s in elements:
            for t in elements:
                want = g.mul(alpha[s], c.act_gal_g(s, alpha[t]))
                if alpha[gal.mul(s, t)] != want:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for x in h.elements():
            if all(h.mul(c.boundary[alpha[s]], c.act_gal_h(s, x)) == x
                   for s in elements):
                out.append((tuple(alpha), x))
    return tuple(out)


def h_zero(c: FiniteCrossedModule,
           bound: int = DEFAULT_ENUMERATION_BOUND) -> HZero:
    """Cocycle classes with the induced group law, verified well-defined
    and associative."""
    cocycles = enumerate_cocycles(c, bound)
    cocycle_set = set(cocycles)
    class_of: dict = {}
    classes: list[list[Cocycle]] = []
    for z in cocycles:
        if z in class_of:
            continue
        orbit = sorted({_coboundary_transform(c, z, g)
                        for g in c.g.elements()})
        for w in orbit:
            if w not in cocycle_set:
                raise RuntimeError("coboundary left the cocycle set")
            class_of[w] = len(classes)
        classes.append(orbit)
    reps = [cls[0] for cls in classes]
    neutral = ((0,) * c.galois.order, 0)
    order_key = sorted(range(len(reps)),
                       key=lambda i: (reps[i] != neutral, reps[i]))
    relabel = {old: new for new, old in enumerate(order_key)}
    class_of = {z: relabel[i] for z, i in class_of.items()}
    reps = [reps[i] for i in order_key]
    n = len(reps)
    table = tuple(
        tuple(class_of[_cocycle_product(c, reps[i], reps[j])]
              for j in range(n))
        for i in range(n))
    # well-definedness: products of arbitrary representatives agree
    for z1 in cocycles:
        for z2 in cocycles:
            prod = _cocycle_product(c, z1, z2)
            if class_of[prod] != table[class_of[z1]][class_of[z2]]:
                raise RuntimeError("group law not well defined on classes")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise RuntimeError("class multiplication not associative")
    group = group_from_table(table)
    return HZero(c, cocycles, class_of, tuple(reps), table, group)


def product_class(hz: HZero, i: int, j: int) -> int:
    """Class of the product of two classes, via the representative
    formula."""
    prod = _cocycle_product(hz.crossed, hz.representatives[i],
                            hz.representatives[j])
    return hz.class_of[prod]


# ---------------------------------------------------------------------------
# Convenience constructors.

def trivial_galois_action(gal: FiniteGroup,
                          target: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    row = tuple(target.elements())
    return tuple(row for _ in gal.elements())


def trivial_h_action(h: FiniteGroup,
                     g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    row = tuple(g.elements())
    return tuple(row for _ in h.elements())


def conjugation_h_action(g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(g.conj(x, a) for a in g.elements())
                 for x in g.elements())


def identity_crossed(g: FiniteGroup, gal: FiniteGroup,
                     gal_action: Optional[tuple] = None
                     ) -> FiniteCrossedModule:
    """[G -> id -> G] with the conjugation action."""
    act = gal_action if gal_action is not None \
        else trivial_galois_action(gal, g)
    return FiniteCrossedModule(g, g, tuple(g.elements()),
                               conjugation_h_action(g), gal, act, act)


def degenerate_crossed(h: FiniteGroup, gal: FiniteGroup,
                       gal_action: Optional[tuple] = None
                       ) -> FiniteCrossedModule:
    """[1 -> H]: H^0 reduces to the Gamma-fixed points of H."""
    from .groups import cyclic_group
    one = cyclic_group(1)
    act = gal_action if gal_action is not None \
        else trivial_galois_action(gal, h)
    return FiniteCrossedModule(
        one, h, (0,), tuple((0,) for _ in h.elements()), gal,
        tuple((0,) for _ in gal.elements()), act)
