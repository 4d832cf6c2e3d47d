"""Finite groups with enumerable elements, subgroup lattices, and coset
actions.

Elements are integers 0..n-1 with 0 the identity.  Groups are built by
breadth-first closure from generating permutations, so element ordering is
deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

DEFAULT_SIZE_LIMIT = 64


class SizeLimitError(Exception):
    """Closure exceeded the configured size bound."""


class MembershipError(Exception):
    """An element or subgroup does not belong where required."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the product a*b.  Labels are display names for the
    elements (permutation tuples when built from permutations).
    """

    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    labels: tuple[str, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        row = self.table[a]
        return row.index(0)

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, a: int) -> int:
        n = 1
        x = a
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def word(self, a: int) -> tuple[int, ...]:
        """Expression of ``a`` as generator indices (from BFS closure)."""
        return self._words()[a]

    def _words(self):
        cached = getattr(self, "_word_cache", None)
        if cached is None:
            cached = _bfs_words(self)
            object.__setattr__(self, "_word_cache", cached)
        return cached

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in self.elements() for b in self.elements())

    def verify(self) -> None:
        """Exhaustively check the group axioms; raises ValueError."""
        n = self.order
        for a in range(n):
            if len(set(self.table[a])) != n:
                raise ValueError(f"row {a} is not a permutation")
            if self.table[a][0] != a or self.table[0][a] != a:
                raise ValueError("0 is not an identity")
            if 0 not in self.table[a]:
                raise ValueError(f"element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise ValueError(f"associativity fails at {(a, b, c)}")
        gen = closure_of(self, set(self.generators) | {0})
        if len(gen) != n:
            raise ValueError("generators do not generate the group")

    def __repr__(self):
        label = self.name or f"group{self.order}"
        return f"FiniteGroup({label}, order={self.order})"


def _bfs_words(g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    words: dict[int, tuple[int, ...]] = {0: ()}
    queue = [0]
    while queue:
        nxt = []
        for e in queue:
            for gi, gen in enumerate(g.generators):
                p = g.mul(e, gen)
                if p not in words:
                    words[p] = words[e] + (gi,)
                    nxt.append(p)
        queue = nxt
    if len(words) != g.order:
        raise ValueError("generators do not generate the group")
    return tuple(words[i] for i in range(g.order))


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p*q)(i) = p(q(i)): apply q first."""
    return tuple(p[x] for x in q)


def build_group(generator_permutations, size_limit: int = DEFAULT_SIZE_LIMIT,
                name: str = "") -> FiniteGroup:
    """Closure of permutations under composition, breadth-first from the
    identity with generators in the given order."""
    perms = [tuple(p) for p in generator_permutations]
    if not perms:
        raise ValueError("need at least one generator permutation")
    deg = len(perms[0])
    if any(len(p) != deg for p in perms):
        raise ValueError("permutations act on different sets")
    for p in perms:
        if sorted(p) != list(range(deg)):
            raise ValueError(f"not a permutation of 0..{deg - 1}: {p}")
    ident = tuple(range(deg))
    index = {ident: 0}
    elems = [ident]
    queue = [ident]
    while queue:
        nxt = []
        for e in queue:
            for p in perms:
                prod = _compose(e, p)
                if prod not in index:
                    if len(elems) >= size_limit:
                        raise SizeLimitError(
                            f"closure exceeds size limit {size_limit}")
                    index[prod] = len(elems)
                    elems.append(prod)
                    nxt.append(prod)
        queue = nxt
    n = len(elems)
    table = tuple(tuple(index[_compose(a, b)] for b in elems) for a in elems)
    gens = tuple(index[p] for p in perms)
    labels = tuple(_cycle_notation(p) for p in elems)
    return FiniteGroup(table, gens, labels, name)


def group_from_table(table, generators=None, name: str = "") -> FiniteGroup:
    tbl = tuple(tuple(int(x) for x in row) for row in table)
    n = len(tbl)
    if generators is None:
        generators = tuple(range(1, n)) or (0,)
    g = FiniteGroup(tbl, tuple(generators), tuple(str(i) for i in range(n)),
                    name)
    g.verify()
    return g


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "e"


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse one-line cycle notation like "(1 2)(3 4)" on points 1..degree."""
    perm = list(range(degree))
    body = text.strip()
    if body in ("e", "()", ""):
        return tuple(perm)
    if body.count("(") == 0:
        raise ValueError(f"bad cycle notation: {text!r}")
    for chunk in body.replace(")(", ")|(").split("|"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad cycle notation: {text!r}")
        pts = [int(t) - 1 for t in chunk[1:-1].replace(",", " ").split()]
        if any(p < 0 or p >= degree for p in pts):
            raise ValueError(f"point out of range in {text!r}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    """A subgroup of ``parent`` given by its sorted member ids."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))
        mem = set(self.members)
        if 0 not in mem:
            raise MembershipError("subgroup must contain the identity")
        for a in self.members:
            for b in self.members:
                if self.parent.mul(a, b) not in mem:
                    raise MembershipError(
                        f"members not closed under multiplication: {a}*{b}")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    def contains(self, g: int) -> bool:
        return g in set(self.members)

    def is_cyclic(self) -> bool:
        return any(self.parent.element_order(a) == self.order
                   for a in self.members)

    def conjugate(self, g: int) -> "SubgroupHandle":
        p = self.parent
        return SubgroupHandle(p, tuple(p.conj(g, x) for x in self.members))

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup.

        Element i corresponds to parent id ``self.members_bfs()[i]``;
        ordering is BFS from the identity over a generating set, so the
        standalone identity is 0.
        """
        cached = getattr(self, "_as_group", None)
        if cached is None:
            cached = self._build_group()
            object.__setattr__(self, "_as_group", cached)
        return cached

    def members_bfs(self) -> tuple[int, ...]:
        self.as_group()
        return getattr(self, "_bfs_order")

    def to_parent(self, i: int) -> int:
        return self.members_bfs()[i]

    def from_parent(self, g: int) -> int:
        self.as_group()
        return getattr(self, "_parent_index")[g]

    def _build_group(self) -> FiniteGroup:
        p = self.parent
        gens = minimal_generators(p, self.members)
        order = [0]
        seen = {0}
        queue = [0]
        while queue:
            nxt = []
            for e in queue:
                for g in gens:
                    prod = p.mul(e, g)
                    if prod not in seen:
                        seen.add(prod)
                        order.append(prod)
                        nxt.append(prod)
            queue = nxt
        index = {g: i for i, g in enumerate(order)}
        table = tuple(tuple(index[p.mul(a, b)] for b in order) for a in order)
        labels = tuple(p.labels[g] for g in order)
        sub = FiniteGroup(table, tuple(index[g] for g in gens), labels)
        object.__setattr__(self, "_bfs_order", tuple(order))
        object.__setattr__(self, "_parent_index", index)
        return sub

    def __repr__(self):
        return f"SubgroupHandle(order={self.order}, members={self.members})"


def minimal_generators(g: FiniteGroup, members) -> tuple[int, ...]:
    """A small deterministic generating set for a subgroup (greedy)."""
    mem = sorted(members)
    gens: list[int] = []
    span = {0}
    for x in mem:
        if x in span:
            continue
        gens.append(x)
        span = closure_of(g, span | {x})
        if len(span) == len(mem):
            break
    return tuple(gens) or (0,)


def closure_of(g: FiniteGroup, seed) -> set[int]:
    out = set(seed) | {0}
    queue = list(out)
    while queue:
        a = queue.pop()
        for b in list(out):
            for p in (g.mul(a, b), g.mul(b, a)):
                if p not in out:
                    out.add(p)
                    queue.append(p)
    return out


def enumerate_subgroups(g: FiniteGroup,
                        size_limit: int = DEFAULT_SIZE_LIMIT):
    """All subgroups of ``g`` plus conjugacy-class representatives.

    Returns ``(subgroups, representatives)``.  Both lists are sorted by
    (order, member tuple); each subgroup appears exactly once.
    """
    if g.order > size_limit:
        raise SizeLimitError(f"group order {g.order} exceeds {size_limit}")
    cached = getattr(g, "_subgroup_cache", None)
    if cached is not None:
        return cached
    found: set[tuple[int, ...]] = {(0,)}
    # closures of single elements, then saturate under adjoining elements
    for a in g.elements():
        found.add(tuple(sorted(closure_of(g, {a}))))
    changed = True
    while changed:
        changed = False
        for mem in list(found):
            memset = set(mem)
            for a in g.elements():
                if a in memset:
                    continue
                new = tuple(sorted(closure_of(g, memset | {a})))
                if new not in found:
                    found.add(new)
                    changed = True
    ordered = sorted(found, key=lambda m: (len(m), m))
    subgroups = [SubgroupHandle(g, m) for m in ordered]
    # conjugacy classes
    reps = []
    seen: set[tuple[int, ...]] = set()
    for h in subgroups:
        if h.members in seen:
            continue
        reps.append(h)
        for a in g.elements():
            seen.add(tuple(sorted(g.conj(a, x) for x in h.members)))
    result = (subgroups, reps)
    object.__setattr__(g, "_subgroup_cache", result)
    return result


def subgroup(g: FiniteGroup, members) -> SubgroupHandle:
    return SubgroupHandle(g, tuple(members))


def trivial_subgroup(g: FiniteGroup) -> SubgroupHandle:
    return SubgroupHandle(g, (0,))


def whole_subgroup(g: FiniteGroup) -> SubgroupHandle:
    return SubgroupHandle(g, tuple(g.elements()))


@dataclass(frozen=True, eq=False)
class CosetSpace:
    """Left cosets of a subgroup with the left-translation action."""

    parent: FiniteGroup
    subgroup: SubgroupHandle
    cosets: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]  # action[g][c] -> coset index

    @property
    def size(self) -> int:
        return len(self.cosets)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.cosets)

    def act(self, g: int, c: int) -> int:
        return self.action[g][c]


def coset_action(g: FiniteGroup, h: SubgroupHandle) -> CosetSpace:
    """Left cosets xH with g . xH = (gx)H; coset 0 is H itself."""
    if h.parent is not g:
        if h.parent.table != g.table:
            raise MembershipError("subgroup belongs to a different group")
    mem = set(h.members)
    coset_of: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for x in g.elements():
        if x in coset_of:
            continue
        cos = tuple(sorted(g.mul(x, m) for m in mem))
        idx = len(cosets)
        cosets.append(cos)
        for y in cos:
            coset_of[y] = idx
    reps = [min(c) for c in cosets]
    action = tuple(tuple(coset_of[g.mul(a, r)] for r in reps)
                   for a in g.elements())
    return CosetSpace(g, h, tuple(cosets), action)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sylow_all_cyclic(g: FiniteGroup) -> bool:
    """True iff every Sylow subgroup of ``g`` is cyclic."""
    subgroups, _ = enumerate_subgroups(g)
    n = g.order
    for p in prime_factors(n):
        pk = 1
        m = n
        while m % p == 0:
            pk *= p
            m //= p
        sylow = next(h for h in subgroups if h.order == pk)
        if not sylow.is_cyclic():
            return False
    return True


# Handy constructors for common groups.

def cyclic_group(n: int, name: str = "") -> FiniteGroup:
    perm = tuple((i + 1) % n for i in range(n))
    return build_group([perm], name=name or f"Z{n}")


def symmetric_group_3(name: str = "S3") -> FiniteGroup:
    return build_group([(1, 0, 2), (1, 2, 0)], name=name)


def klein_four(name: str = "Z2xZ2") -> FiniteGroup:
    return build_group([(1, 0, 2, 3), (0, 1, 3, 2)], name=name)


def dihedral_group_4(name: str = "D4") -> FiniteGroup:
    # symmetries of a square on vertices 0..3
    rot = (1, 2, 3, 0)
    flip = (1, 0, 3, 2)
    return build_group([rot, flip], name=name)


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str = "") -> FiniteGroup:
    """Direct product realized on the disjoint union of permutation
    domains of regular representations."""
    na, nb = a.order, b.order
    perms = []
    for gen in a.generators:
        p = tuple(a.mul(gen, x) for x in range(na)) + tuple(
            na + i for i in range(nb))
        perms.append(p)
    for gen in b.generators:
        p = tuple(range(na)) + tuple(na + b.mul(gen, x) for x in range(nb))
        perms.append(p)
    return build_group(perms, size_limit=max(DEFAULT_SIZE_LIMIT, na * nb),
                       name=name or f"{a.name}x{b.name}")
