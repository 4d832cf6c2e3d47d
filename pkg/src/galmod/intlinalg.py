"""Exact integer linear algebra: Smith normal form, kernels, saturation,
and finitely generated abelian group presentations.

All matrices are row-major sequences of rows with Python ``int`` entries,
so intermediate values never overflow.  Frozen (tuple-of-tuples) matrices
are used in public data types; plain lists are accepted everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

IntMatrix = tuple[tuple[int, ...], ...]


class SolveError(Exception):
    """No exact integer solution exists."""


def freeze(rows: Iterable[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def thaw(m: Iterable[Sequence[int]]) -> list[list[int]]:
    return [list(row) for row in m]


def zeros(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(m)
    return rows, (len(m[0]) if rows else 0)


def transpose(m: Sequence[Sequence[int]]) -> IntMatrix:
    rows, cols = shape(m)
    return tuple(tuple(m[i][j] for i in range(rows)) for j in range(cols))


def transpose_shaped(m: Sequence[Sequence[int]], rows: int,
                     cols: int) -> IntMatrix:
    """Transpose with an explicit result shape, for empty matrices whose
    column count the row-tuple representation cannot carry."""
    t = transpose(m)
    if len(t) != rows:
        return zeros(rows, cols)
    return t


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        # row-tuple matrices cannot encode 0 x k shapes faithfully; an
        # empty factor always yields a zero product
        if ca == 0 or rb == 0:
            return tuple((0,) * cb for _ in range(ra))
        raise ValueError(f"dimension mismatch {ra}x{ca} @ {rb}x{cb}")
    bt = [list(col) for col in zip(*b)] if rb else []
    out = []
    for i in range(ra):
        arow = a[i]
        out.append(tuple(sum(x * y for x, y in zip(arow, bcol)) for bcol in bt)
                   if rb else (0,) * cb)
    return tuple(out)


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_eq(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return shape(a) == shape(b) and all(
        all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_zero(a: Sequence[Sequence[int]]) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def hstack(*mats: Sequence[Sequence[int]]) -> IntMatrix:
    wide = [m for m in mats if shape(m)[1] > 0]
    if not wide:
        rows = max((len(m) for m in mats), default=0)
        return tuple(() for _ in range(rows))
    mats = wide
    rows = len(mats[0])
    return tuple(tuple(x for m in mats for x in m[i]) for i in range(rows))


def vstack(*mats: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(row) for m in mats for row in m)


def block_diag(*mats: Sequence[Sequence[int]]) -> IntMatrix:
    rows = sum(shape(m)[0] for m in mats)
    cols = sum(shape(m)[1] for m in mats)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        mr, mc = shape(m)
        for i in range(mr):
            out[r0 + i][c0:c0 + mc] = [int(x) for x in m[i]]
        r0 += mr
        c0 += mc
    return freeze(out)


def columns(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Matrix as a list of column vectors."""
    rows, cols = shape(m)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int | None = None) -> IntMatrix:
    if not cols:
        return zeros(nrows or 0, 0)
    n = len(cols[0])
    return tuple(tuple(c[i] for c in cols) for i in range(n))


@dataclass(frozen=True)
class SnfResult:
    """Decomposition U @ A @ V = D with U, V unimodular and D diagonal
    satisfying the divisibility chain d1 | d2 | ... (nonzero entries
    positive)."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        r = min(shape(self.D))
        return tuple(self.D[i][i] for i in range(r))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def _round_div(x: int, d: int) -> int:
    """Quotient leaving the remainder of least absolute value.

    Keeps the entries of the transformation matrices from blowing up on
    dense inputs, where floor division lets them grow by a factor of the
    pivot at every step.
    """
    q, r = divmod(x, d)
    if 2 * abs(r) > abs(d):
        q += 1
    return q


def smith_normal_form(a: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with transformation matrices.

    Pivot choice is deterministic: the smallest nonzero entry in absolute
    value, ties broken in row-major order.
    """
    m = thaw(a)
    rows, cols = shape(m) if m else (0, 0)
    if m and cols == 0:
        rows, cols = len(m), 0
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        if i != j:
            m[i], m[j] = m[j], m[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in m:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        mr = m[src]
        md = m[dst]
        for j in range(cols):
            md[j] += k * mr[j]
        ur = u[src]
        ud = u[dst]
        for j in range(rows):
            ud[j] += k * ur[j]

    def add_col(src, dst, k):
        for row in m:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < rows and t < cols:
        # locate pivot: smallest |entry| != 0, row-major tie-break
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = _round_div(m[i][t], m[t][t])
                    if q:
                        add_row(t, i, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = _round_div(m[t][j], m[t][t])
                    if q:
                        add_col(t, j, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            break
        t += 1
    # second pass: fix divisibility chain
    r = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for t in range(r - 1):
            if m[t][t] == 0:
                continue
            for i in range(t + 1, r):
                if m[i][i] % m[t][t] != 0:
                    # bring the offending entry into reach and rediagonalize
                    add_col(i, t, 1)
                    _rediagonalize(m, u, v, t, rows, cols)
                    changed = True
    for t in range(r):
        if m[t][t] < 0:
            for j in range(cols):
                m[t][j] = -m[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]
    return SnfResult(freeze(u), freeze(m), freeze(v))


def _rediagonalize(m, u, v, start, rows, cols):
    """Re-run elimination from column/row ``start`` after a chain fix."""
    t = start
    while t < rows and t < cols:
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            return
        if piv[0] != t:
            m[t], m[piv[0]] = m[piv[0]], m[t]
            u[t], u[piv[0]] = u[piv[0]], u[t]
        if piv[1] != t:
            for row in m:
                row[t], row[piv[1]] = row[piv[1]], row[t]
            for row in v:
                row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = _round_div(m[i][t], m[t][t])
                    if q:
                        for j in range(cols):
                            m[i][j] -= q * m[t][j]
                        for j in range(len(u)):
                            u[i][j] -= q * u[t][j]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = _round_div(m[t][j], m[t][t])
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                        for row in v:
                            row[j] -= q * row[t]
                    if m[t][j] != 0:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            break
        t += 1


def invariant_factors(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(a).invariant_factors


def mat_rank(a: Sequence[Sequence[int]]) -> int:
    return len(_column_echelon(columns(a))[0])


def det_sign_unimodular(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a matrix known to be square; raises if not ±1."""
    n, c = shape(a)
    if n != c:
        raise ValueError("not square")
    d = _det_pm1(a)
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    return d


def _det_pm1(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    m = thaw(a)
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * (m[n - 1][n - 1] if n else 1)


def is_unimodular(a: Sequence[Sequence[int]]) -> bool:
    n, c = shape(a)
    if n != c:
        return False
    return abs(_det_pm1(a)) == 1


def mat_inverse_unimodular(a: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of an integer matrix with determinant ±1."""
    res = smith_normal_form(a)
    n, c = shape(a)
    if n != c or res.rank != n or any(d != 1 for d in res.diagonal):
        raise ValueError("matrix is not unimodular")
    return mat_mul(res.V, res.U)


# ---------------------------------------------------------------------------
# Sparse column elimination.  Used for the large, sparse cochain matrices,
# where a dense SNF would be too slow.

def _column_echelon(cols: list[list[int]], track: bool = False):
    """Reduce a list of column vectors to column echelon form.

    Returns ``(pivots, echelon_cols, combos)``: pivots is a list of
    (row, column-index-into-echelon_cols) with strictly increasing rows;
    echelon_cols the reduced nonzero columns; combos (if ``track``) the
    unimodular combinations expressing each output column, including the
    ones that vanished (those span the kernel).
    """
    n = len(cols)
    sp = []
    for j, col in enumerate(cols):
        d = {i: int(x) for i, x in enumerate(col) if x != 0}
        sp.append(d)
    combos = [{j: 1} for j in range(n)] if track else [None] * n
    active = list(range(n))
    # row -> active columns touching it
    rowmap: dict[int, set[int]] = {}
    for j in active:
        for r in sp[j]:
            rowmap.setdefault(r, set()).add(j)
    pivots = []
    frozen: set[int] = set()

    def addmul(dst, src, k):
        # col[dst] += k * col[src]
        sd = sp[src]
        dd = sp[dst]
        for r, val in sd.items():
            nv = dd.get(r, 0) + k * val
            if nv:
                if r not in dd:
                    rowmap.setdefault(r, set()).add(dst)
                dd[r] = nv
            elif r in dd:
                del dd[r]
                rowmap[r].discard(dst)
        if track:
            sc = combos[src]
            dc = combos[dst]
            for r, val in sc.items():
                nv = dc.get(r, 0) + k * val
                if nv:
                    dc[r] = nv
                elif r in dc:
                    del dc[r]

    for row in sorted(rowmap):
        cands = [j for j in rowmap.get(row, ()) if j not in frozen]
        if not cands:
            continue
        while len(cands) > 1:
            cands.sort(key=lambda j: (abs(sp[j][row]), j))
            a = cands[0]
            for b in cands[1:]:
                q = sp[b][row] // sp[a][row]
                addmul(b, a, -q)
            cands = [j for j in cands if row in sp[j]]
        piv = cands[0]
        if sp[piv][row] < 0:
            sp[piv] = {r: -v for r, v in sp[piv].items()}
            if track:
                combos[piv] = {r: -v for r, v in combos[piv].items()}
        frozen.add(piv)
        pivots.append((row, piv))
    echelon = [(r, sp[j], combos[j]) for r, j in pivots]
    kernel_combos = [combos[j] for j in range(n)
                     if j not in frozen and not sp[j]] if track else []
    return pivots, sp, (echelon, kernel_combos)


def kernel_basis(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (as column vectors) of the integer kernel {x : a @ x = 0}.

    The basis spans a saturated sublattice of Z^cols.
    """
    rows, cols = shape(a)
    _, _, (_, kernel_combos) = _column_echelon(columns(a), track=True)
    out = []
    for combo in kernel_combos:
        vec = [0] * cols
        for j, v in combo.items():
            vec[j] = v
        out.append(vec)
    return out


def image_basis(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (columns) of the lattice spanned by the columns of ``a``.

    Not saturated: spans exactly the integer column span.
    """
    rows, _ = shape(a)
    pivots, sp, _ = _column_echelon(columns(a))
    out = []
    for row, j in pivots:
        vec = [0] * rows
        for r, v in sp[j].items():
            vec[r] = v
        out.append(vec)
    return out


def saturate(cols: Sequence[Sequence[int]], ambient_rows: int) -> list[list[int]]:
    """Basis of the saturation of the column span inside Z^ambient_rows."""
    if not cols:
        return []
    a = from_columns(cols, ambient_rows)
    left = kernel_basis(transpose(a))  # vectors y orthogonal to all columns
    if not left:
        return columns(identity(ambient_rows))
    return kernel_basis(freeze(left))


def solve_columns(basis_cols: Sequence[Sequence[int]],
                  b_cols: Sequence[Sequence[int]]) -> list[list[int]]:
    """Solve basis @ X = B exactly over Z, columnwise.

    ``basis_cols`` must be linearly independent.  Raises SolveError when a
    column of B is not in the integer span.
    """
    k = len(basis_cols)
    if k == 0:
        for b in b_cols:
            if any(x != 0 for x in b):
                raise SolveError("nonzero target with empty basis")
        return [[] for _ in b_cols]
    pivots, sp, (echelon, kernel_combos) = _column_echelon(
        [list(c) for c in basis_cols], track=True)
    if kernel_combos:
        raise ValueError("basis columns are linearly dependent")
    sols = []
    for b in b_cols:
        resid = {i: int(x) for i, x in enumerate(b) if x != 0}
        y = [0] * k  # coefficients in echelon columns
        for idx, (row, col_dict, _) in enumerate(echelon):
            val = resid.get(row, 0)
            if val == 0:
                continue
            pivval = col_dict[row]
            if val % pivval != 0:
                raise SolveError("column not in integer span")
            q = val // pivval
            y[idx] = q
            for r, v in col_dict.items():
                nv = resid.get(r, 0) - q * v
                if nv:
                    resid[r] = nv
                elif r in resid:
                    del resid[r]
        if resid:
            raise SolveError("column not in span")
        # convert echelon coefficients back to original basis coefficients
        x = [0] * k
        for idx, (_, _, combo) in enumerate(echelon):
            if y[idx]:
                for j, v in combo.items():
                    x[j] += y[idx] * v
        sols.append(x)
    return sols


def in_span(cols: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    basis = image_basis(from_columns(list(cols), len(vec))) if cols else []
    try:
        solve_columns(basis, [list(vec)])
        return True
    except SolveError:
        return False


# ---------------------------------------------------------------------------
# Finitely generated abelian groups presented as subquotients of Z^n.

@dataclass(frozen=True)
class AbGroupPresentation:
    """Subquotient L_num / L_den of Z^n, reduced to invariant factors.

    ``factors`` lists the invariant factors in divisibility order; 1s are
    dropped and 0 encodes a free summand (listed last).  ``generators``
    holds one ambient vector per listed factor.
    """

    ambient_dim: int
    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    _basis: tuple[tuple[int, ...], ...]  # columns: basis of L_num
    _uinv_cols: tuple[tuple[int, ...], ...]  # adapted basis coords in _basis
    _diag: tuple[int, ...]  # full diagonal incl. 1s, aligned with _uinv_cols

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        n = 1
        for f in self.factors:
            if f == 0:
                return None
            n *= f
        return n

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of ``vec`` on the stored generators."""
        if self.ambient_dim == 0 or not self._basis:
            return (0,) * len(self.factors)
        y = solve_columns([list(c) for c in self._basis], [list(vec)])[0]
        # adapted coordinates: z = U @ y, but we stored columns of U^{-1};
        # solve U^{-1} z = y
        z = solve_columns([list(c) for c in self._uinv_cols], [list(y)])[0]
        coords = []
        for zi, d in zip(z, self._diag):
            if d == 1:
                continue
            coords.append(zi % d if d > 1 else zi)
        return tuple(coords)

    def contains_class_zero(self, vec: Sequence[int]) -> bool:
        return all(c == 0 for c in self.reduce(vec))


def abgroup_from_subquotient(num_cols: Sequence[Sequence[int]],
                             den_cols: Sequence[Sequence[int]],
                             ambient_dim: int) -> AbGroupPresentation:
    """The group span(num)/span(den); den must lie inside span(num)."""
    basis = image_basis(from_columns(list(num_cols), ambient_dim)) if num_cols else []
    k = len(basis)
    if k == 0:
        return AbGroupPresentation(ambient_dim, (), (), (), (), ())
    x = solve_columns(basis, [list(c) for c in den_cols]) if den_cols else []
    xmat = from_columns(x, k) if x else zeros(k, 0)
    res = smith_normal_form(xmat)
    uinv = mat_inverse_unimodular(res.U)
    diag = list(res.diagonal) + [0] * (k - len(res.diagonal))
    basis_mat = from_columns(basis, ambient_dim)
    adapted = mat_mul(basis_mat, uinv)  # ambient vectors of adapted basis
    # SNF diagonal is already in divisibility order (1s, then larger
    # factors, then 0s for free summands)
    factors = []
    gens = []
    for i, d in enumerate(diag):
        if d == 1:
            continue
        factors.append(d)
        gens.append(tuple(adapted[r][i] for r in range(ambient_dim)))
    return AbGroupPresentation(
        ambient_dim,
        tuple(factors),
        tuple(gens),
        tuple(tuple(c) for c in basis),
        tuple(tuple(row[i] for row in uinv) for i in range(k)),
        tuple(diag),
    )


def quotient_group(kernel_cols: Sequence[Sequence[int]],
                   image_cols: Sequence[Sequence[int]],
                   ambient_dim: int) -> AbGroupPresentation:
    """ker/im quotient for a cochain complex position."""
    return abgroup_from_subquotient(kernel_cols, image_cols, ambient_dim)


def relation_columns(factors: Sequence[int], dim: int) -> list[list[int]]:
    """Columns of the relation lattice of a group given by invariant factors
    on standard coordinates (one coordinate per factor)."""
    cols = []
    for i, f in enumerate(factors):
        if f > 0:
            col = [0] * dim
            col[i] = f
            cols.append(col)
    return cols


def hom_kernel(matrix: Sequence[Sequence[int]],
               src_factors: Sequence[int],
               tgt_factors: Sequence[int]) -> AbGroupPresentation:
    """Kernel of a homomorphism of f.g. abelian groups in generator
    coordinates."""
    tr, sc = shape(matrix)
    tgt_rel = relation_columns(tgt_factors, tr)
    big = hstack(matrix, from_columns(tgt_rel, tr)) if tgt_rel else freeze(matrix)
    kb = kernel_basis(big) if shape(big)[1] else []
    proj = [[v[i] for i in range(sc)] for v in kb]
    src_rel = relation_columns(src_factors, sc)
    return abgroup_from_subquotient(proj + src_rel, src_rel, sc)


def hom_cokernel(matrix: Sequence[Sequence[int]],
                 tgt_factors: Sequence[int]) -> AbGroupPresentation:
    tr, _ = shape(matrix)
    tgt_rel = relation_columns(tgt_factors, tr)
    full = columns(identity(tr))
    return abgroup_from_subquotient(full, columns(matrix) + tgt_rel, tr)


def hom_image_in(matrix: Sequence[Sequence[int]],
                 tgt_factors: Sequence[int]) -> AbGroupPresentation:
    """Image of a homomorphism as a subgroup of the target."""
    tr, _ = shape(matrix)
    tgt_rel = relation_columns(tgt_factors, tr)
    return abgroup_from_subquotient(columns(matrix) + tgt_rel, tgt_rel, tr)
