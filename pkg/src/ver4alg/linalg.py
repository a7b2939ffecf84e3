"""Exact dense linear algebra over F_{2^e}.

Vectors are "plane rows": a tuple of e ints, where bit j of the p-th int is
the p-th F_2-coordinate of the j-th entry.  Linear maps act on row vectors
from the right (image of v is v @ M), so a map between spaces of dimensions
m and n is stored as an m x n matrix whose i-th row is the image of the i-th
basis vector.
"""

from __future__ import annotations

from itertools import combinations

from .field import F2e


def zero_row(field: F2e) -> tuple:
    return (0,) * field.degree


def row_entry(field: F2e, row: tuple, j: int) -> int:
    v = 0
    for p in range(field.degree):
        v |= ((row[p] >> j) & 1) << p
    return v


def row_set_entry(field: F2e, row: tuple, j: int, value: int) -> tuple:
    planes = list(row)
    for p in range(field.degree):
        if (value >> p) & 1:
            planes[p] |= 1 << j
        else:
            planes[p] &= ~(1 << j)
    return tuple(planes)


def row_xor(r1: tuple, r2: tuple) -> tuple:
    return tuple(a ^ b for a, b in zip(r1, r2))


def row_scale(field: F2e, s: int, row: tuple) -> tuple:
    if s == 0:
        return zero_row(field)
    if s == 1:
        return row
    maps = field.scale_maps[s]
    out = []
    for p in range(field.degree):
        acc = 0
        mask = maps[p]
        for i in range(field.degree):
            if (mask >> i) & 1:
                acc ^= row[i]
        out.append(acc)
    return tuple(out)


def row_from_entries(field: F2e, entries) -> tuple:
    planes = [0] * field.degree
    for j, v in enumerate(entries):
        for p in range(field.degree):
            if (v >> p) & 1:
                planes[p] |= 1 << j
    return tuple(planes)


def row_entries(field: F2e, row: tuple, n: int) -> list:
    return [row_entry(field, row, j) for j in range(n)]


def row_is_zero(row: tuple) -> bool:
    return all(p == 0 for p in row)


def row_support(field: F2e, row: tuple) -> int:
    mask = 0
    for p in row:
        mask |= p
    return mask


def row_lowest_pivot(field: F2e, row: tuple) -> int:
    """Index of the first nonzero entry, or -1."""
    mask = row_support(field, row)
    if mask == 0:
        return -1
    return (mask & -mask).bit_length() - 1


class Mat:
    """Immutable matrix over F_{2^e} with rows in plane representation."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: F2e, nrows: int, ncols: int, rows):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)
        assert len(self.rows) == nrows

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols, [zero_row(field)] * nrows)

    @classmethod
    def identity(cls, field, n):
        rows = [row_set_entry(field, zero_row(field), i, 1) for i in range(n)]
        return cls(field, n, n, rows)

    @classmethod
    def from_entries(cls, field, entries):
        entries = [list(r) for r in entries]
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        return cls(field, nrows, ncols, [row_from_entries(field, r) for r in entries])

    @classmethod
    def from_rows(cls, field, rows, ncols):
        rows = list(rows)
        return cls(field, len(rows), ncols, rows)

    def entry(self, i, j):
        return row_entry(self.field, self.rows[i], j)

    def entries(self):
        return [row_entries(self.field, r, self.ncols) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.show(v) for v in row) for row in self.entries()
        )
        return f"Mat({self.nrows}x{self.ncols}: {body})"

    def is_zero(self):
        return all(row_is_zero(r) for r in self.rows)

    def add(self, other):
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return Mat(
            self.field,
            self.nrows,
            self.ncols,
            [row_xor(a, b) for a, b in zip(self.rows, other.rows)],
        )

    def mul(self, other: "Mat") -> "Mat":
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        fld = self.field
        out = []
        for row in self.rows:
            acc = zero_row(fld)
            mask = row_support(fld, row)
            j = 0
            while mask:
                if mask & 1:
                    s = row_entry(fld, row, j)
                    acc = row_xor(acc, row_scale(fld, s, other.rows[j]))
                mask >>= 1
                j += 1
            out.append(acc)
        return Mat(fld, self.nrows, other.ncols, out)

    def apply(self, row: tuple) -> tuple:
        """Image of a single row vector under this map."""
        fld = self.field
        acc = zero_row(fld)
        mask = row_support(fld, row)
        j = 0
        while mask:
            if mask & 1:
                s = row_entry(fld, row, j)
                acc = row_xor(acc, row_scale(fld, s, self.rows[j]))
            mask >>= 1
            j += 1
        return acc

    def transpose(self):
        fld = self.field
        entries = self.entries()
        out = [[entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Mat.from_entries(fld, out) if out else Mat.zeros(fld, self.ncols, self.nrows)

    def scale(self, s):
        return Mat(
            self.field,
            self.nrows,
            self.ncols,
            [row_scale(self.field, s, r) for r in self.rows],
        )

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product; basis order (i, j) -> i * other_dim + j."""
        fld = self.field
        out = []
        for i1 in range(self.nrows):
            r1 = row_entries(fld, self.rows[i1], self.ncols)
            for i2 in range(other.nrows):
                r2 = row_entries(fld, other.rows[i2], other.ncols)
                ent = [0] * (self.ncols * other.ncols)
                for j1, a in enumerate(r1):
                    if a == 0:
                        continue
                    for j2, b in enumerate(r2):
                        if b:
                            ent[j1 * other.ncols + j2] = fld.mul(a, b)
                out.append(row_from_entries(fld, ent))
        return Mat(fld, self.nrows * other.nrows, self.ncols * other.ncols, out)

    def stack(self, other: "Mat") -> "Mat":
        assert self.ncols == other.ncols
        return Mat(
            self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows
        )

    def rank(self):
        return len(Subspace.from_rows(self.field, self.ncols, self.rows).rows)

    def row_space(self) -> "Subspace":
        return Subspace.from_rows(self.field, self.ncols, self.rows)

    def right_kernel(self) -> "Subspace":
        """Basis of {v : v @ self = 0}."""
        fld = self.field
        n = self.nrows
        ident = Mat.identity(fld, n)
        aug = [row_concat(self.rows[i], ident.rows[i], self.ncols) for i in range(n)]
        width = self.ncols + n
        basis, pivots = _rref_rows(fld, aug, width, pivot_limit=self.ncols)
        out = []
        for row, piv in zip(basis, pivots):
            if piv == -1 and not row_is_zero(row):
                out.append(_slice_row(fld, row, self.ncols, width))
        return Subspace.from_rows(fld, n, out)

    def solve_left(self, target: tuple):
        """Some x with x @ self = target, or None."""
        fld = self.field
        n = self.nrows
        ident = Mat.identity(fld, n)
        aug = [row_concat(self.rows[i], ident.rows[i], self.ncols) for i in range(n)]
        width = self.ncols + n
        basis, pivots = _rref_rows(fld, aug, width, pivot_limit=self.ncols)
        residue = row_concat(target, zero_row(fld), self.ncols)
        for row, piv in zip(basis, pivots):
            if piv == -1:
                continue
            c = row_entry(fld, residue, piv)
            if c:
                residue = row_xor(residue, row_scale(fld, c, row))
        if not row_is_zero(_slice_row(fld, residue, 0, self.ncols)):
            return None
        return _slice_row(fld, residue, self.ncols, width)

    def inverse(self):
        assert self.nrows == self.ncols
        fld = self.field
        n = self.nrows
        ident = Mat.identity(fld, n)
        aug = [row_concat(self.rows[i], ident.rows[i], n) for i in range(n)]
        width = 2 * n
        basis, pivots = _rref_rows(fld, aug, width, pivot_limit=n)
        rows = [None] * n
        for row, piv in zip(basis, pivots):
            if piv == -1:
                continue
            rows[piv] = _slice_row(fld, row, n, width)
        if any(r is None for r in rows):
            return None
        return Mat(fld, n, n, rows)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


def row_concat(r1: tuple, r2: tuple, n1: int) -> tuple:
    """Concatenate plane rows: r1 in columns [0, n1), r2 shifted after it."""
    return tuple(a | (b << n1) for a, b in zip(r1, r2))


def _slice_row(field: F2e, row: tuple, lo: int, hi: int) -> tuple:
    mask = (1 << (hi - lo)) - 1
    return tuple((p >> lo) & mask for p in row)


def _rref_rows(field: F2e, rows, width, pivot_limit=None):
    """Reduced row echelon form; returns (rows, pivot columns, -1 for zero rows).

    Only columns < pivot_limit are eligible as pivots; trailing columns ride
    along (used for augmented solves).
    """
    if pivot_limit is None:
        pivot_limit = width
    work = [tuple(r) for r in rows]
    m = len(work)
    pivots = [-1] * m
    r = 0
    for c in range(pivot_limit):
        sel = None
        for i in range(r, m):
            if row_entry(field, work[i], c) != 0:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        pv = row_entry(field, work[r], c)
        if pv != 1:
            work[r] = row_scale(field, field.inv(pv), work[r])
        for i in range(m):
            if i != r:
                ci = row_entry(field, work[i], c)
                if ci:
                    work[i] = row_xor(work[i], row_scale(field, ci, work[r]))
        pivots[r] = c
        r += 1
        if r == m:
            break
    return work, pivots


class Subspace:
    """Row space in canonical reduced echelon form."""

    __slots__ = ("field", "ncols", "rows", "pivots")

    def __init__(self, field, ncols, rows, pivots):
        self.field = field
        self.ncols = ncols
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, field, ncols, rows):
        work, pivots = _rref_rows(field, rows, ncols)
        keep = [(r, p) for r, p in zip(work, pivots) if p != -1]
        return cls(field, ncols, [r for r, _ in keep], [p for _, p in keep])

    @classmethod
    def zero(cls, field, ncols):
        return cls(field, ncols, [], [])

    @classmethod
    def full(cls, field, ncols):
        ident = Mat.identity(field, ncols)
        return cls(field, ncols, ident.rows, list(range(ncols)))

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec: tuple) -> tuple:
        fld = self.field
        for row, piv in zip(self.rows, self.pivots):
            c = row_entry(fld, vec, piv)
            if c:
                vec = row_xor(vec, row_scale(fld, c, row))
        return vec

    def contains(self, vec: tuple) -> bool:
        return row_is_zero(self.reduce(vec))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def plus(self, other: "Subspace") -> "Subspace":
        return Subspace.from_rows(self.field, self.ncols, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via joint kernel."""
        fld = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(fld, self.ncols)
        gens = Mat.from_rows(fld, self.rows, self.ncols)
        # v = x @ gens in other  <=>  x in kernel of (gens reduced mod other)
        reduced = [other.reduce(r) for r in self.rows]
        red_mat = Mat.from_rows(fld, reduced, self.ncols)
        coeffs = red_mat.right_kernel()
        vecs = [gens.apply(x) for x in coeffs.rows]
        return Subspace.from_rows(fld, self.ncols, vecs)

    def key(self):
        return (self.ncols, self.rows)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ncols})"

    def basis_entries(self):
        return [row_entries(self.field, r, self.ncols) for r in self.rows]

    def elements(self):
        """Iterate all vectors of the subspace (desk scale only)."""
        fld = self.field
        q = fld.order
        if self.dim == 0:
            yield zero_row(fld)
            return
        idx = [0] * self.dim
        total = q ** self.dim
        for count in range(total):
            v = zero_row(fld)
            c = count
            for r in self.rows:
                s = c % q
                c //= q
                if s:
                    v = row_xor(v, row_scale(fld, s, r))
            yield v

    def quotient_maps(self):
        """(proj, lift): k^n -> k^d and back, with kernel(proj) = self.

        Quotient coordinates are the non-pivot columns of the echelon basis;
        proj(v) reads those coordinates after reduction, lift places them back.
        """
        fld = self.field
        n = self.ncols
        free = [j for j in range(n) if j not in self.pivots]
        d = len(free)
        proj_rows = []
        ident = Mat.identity(fld, n)
        for i in range(n):
            red = self.reduce(ident.rows[i])
            ent = [row_entry(fld, red, j) for j in free]
            proj_rows.append(row_from_entries(fld, ent))
        lift_rows = []
        for j in free:
            lift_rows.append(ident.rows[j])
        proj = Mat(fld, n, d, proj_rows)
        lift = Mat(fld, d, n, lift_rows)
        return proj, lift


def all_subspaces_gf2(n: int):
    """All subspaces of F_2^n as tuples of echelon basis rows (raw int rows).

    Enumerates reduced echelon forms by pivot set and free entries.
    """
    for k in range(n + 1):
        if k == 0:
            yield ()
            continue
        for pivots in combinations(range(n), k):
            free_positions = []
            for r, p in enumerate(pivots):
                cols = [
                    c
                    for c in range(p + 1, n)
                    if c not in pivots
                ]
                free_positions.append(cols)
            counts = [len(c) for c in free_positions]
            total_bits = sum(counts)
            for assignment in range(1 << total_bits):
                rows = []
                shift = 0
                for r, p in enumerate(pivots):
                    row = 1 << p
                    for c in free_positions[r]:
                        if (assignment >> shift) & 1:
                            row |= 1 << c
                        shift += 1
                    rows.append(row)
                yield tuple(rows)


def gf2_rows_to_subspace(field: F2e, ncols: int, int_rows) -> Subspace:
    assert field.degree == 1
    return Subspace.from_rows(field, ncols, [(r,) for r in int_rows])
