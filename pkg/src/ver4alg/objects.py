"""Objects and morphisms of the category of k[D]/D^2-modules in char 2.

An object is a finite-dimensional space with a square-zero endomorphism D;
the braiding is v (x) w  |->  w (x) v + (Dw) (x) (Dv).  Matrices act on row
vectors from the right, so the i-th row of D is the image of the i-th basis
vector.
"""

from __future__ import annotations

from .field import F2e
from .linalg import (
    Mat,
    Subspace,
    row_from_entries,
    row_is_zero,
    zero_row,
)


class Ver4Object:
    """A finite-dimensional k[D]/D^2-module: dimension plus D with D^2 = 0."""

    __slots__ = ("field", "dim", "D", "label")

    def __init__(self, field: F2e, dim: int, D: Mat, label: str = ""):
        if D.nrows != dim or D.ncols != dim:
            raise ValueError("D must be square of the object dimension")
        if not D.mul(D).is_zero():
            raise ValueError("D^2 != 0")
        self.field = field
        self.dim = dim
        self.D = D
        self.label = label

    def __repr__(self):
        return f"Ver4Object({self.label or self.dim}, rank {self.D.rank()})"

    def __eq__(self, other):
        return (
            isinstance(other, Ver4Object)
            and self.field == other.field
            and self.dim == other.dim
            and self.D == other.D
        )

    def __hash__(self):
        return hash((self.dim, self.D))


class Ver4Morphism:
    """A D-equivariant linear map; mat rows are images of source basis vectors."""

    __slots__ = ("source", "target", "mat")

    def __init__(self, source: Ver4Object, target: Ver4Object, mat: Mat, check=True):
        if mat.nrows != source.dim or mat.ncols != target.dim:
            raise ValueError("matrix shape does not match source/target")
        if check and source.D.mul(mat) != mat.mul(target.D):
            raise ValueError("map does not commute with D")
        self.source = source
        self.target = target
        self.mat = mat

    def is_valid(self):
        return self.source.D.mul(self.mat) == self.mat.mul(self.target.D)

    def then(self, other: "Ver4Morphism") -> "Ver4Morphism":
        assert self.target.dim == other.source.dim
        return Ver4Morphism(self.source, other.target, self.mat.mul(other.mat), check=False)

    def __eq__(self, other):
        return isinstance(other, Ver4Morphism) and self.mat == other.mat

    def __repr__(self):
        return f"Ver4Morphism({self.source!r} -> {self.target!r})"

    def is_zero(self):
        return self.mat.is_zero()


def unit_object(field: F2e) -> Ver4Object:
    return Ver4Object(field, 1, Mat.zeros(field, 1, 1), label="1")


def projective_object(field: F2e) -> Ver4Object:
    """P with basis {v1, v2}, D v1 = v2 and v2 spanning the socle."""
    D = Mat.from_entries(field, [[0, 1], [0, 0]])
    return Ver4Object(field, 2, D, label="P")


def direct_sum(X: Ver4Object, Y: Ver4Object) -> Ver4Object:
    fld = X.field
    n = X.dim + Y.dim
    ent = [[0] * n for _ in range(n)]
    for i in range(X.dim):
        for j in range(X.dim):
            ent[i][j] = X.D.entry(i, j)
    for i in range(Y.dim):
        for j in range(Y.dim):
            ent[X.dim + i][X.dim + j] = Y.D.entry(i, j)
    return Ver4Object(fld, n, Mat.from_entries(fld, ent))


def tensor_object(X: Ver4Object, Y: Ver4Object) -> Ver4Object:
    """X (x) Y with D primitive: D = D_X (x) 1 + 1 (x) D_Y."""
    if X.field != Y.field:
        raise ValueError("objects over different base fields")
    fld = X.field
    ix = Mat.identity(fld, X.dim)
    iy = Mat.identity(fld, Y.dim)
    D = X.D.kron(iy).add(ix.kron(Y.D))
    return Ver4Object(fld, X.dim * Y.dim, D)


def tensor_morphism(f: Ver4Morphism, g: Ver4Morphism) -> Ver4Morphism:
    src = tensor_object(f.source, g.source)
    tgt = tensor_object(f.target, g.target)
    return Ver4Morphism(src, tgt, f.mat.kron(g.mat), check=False)


def identity_morphism(X: Ver4Object) -> Ver4Morphism:
    return Ver4Morphism(X, X, Mat.identity(X.field, X.dim), check=False)


def braiding(X: Ver4Object, Y: Ver4Object) -> Ver4Morphism:
    """The symmetric braiding X (x) Y -> Y (x) X."""
    if X.field != Y.field:
        raise ValueError("objects over different base fields")
    fld = X.field
    nx, ny = X.dim, Y.dim
    rows = []
    for i in range(nx):
        di = [X.D.entry(i, k) for k in range(nx)]
        for j in range(ny):
            ent = [0] * (ny * nx)
            ent[j * nx + i] ^= 1
            dj = [Y.D.entry(j, l) for l in range(ny)]
            for l, bl in enumerate(dj):
                if bl == 0:
                    continue
                for k, ak in enumerate(di):
                    if ak:
                        ent[l * nx + k] ^= fld.mul(bl, ak)
            rows.append(row_from_entries(fld, ent))
    mat = Mat(fld, nx * ny, ny * nx, rows)
    return Ver4Morphism(tensor_object(X, Y), tensor_object(Y, X), mat)


def dual_object(X: Ver4Object) -> Ver4Object:
    """Dual with D the transpose, forced by evaluation being a morphism."""
    return Ver4Object(X.field, X.dim, X.D.transpose())


def evaluation(X: Ver4Object) -> Ver4Morphism:
    """X^v (x) X -> 1."""
    fld = X.field
    n = X.dim
    rows = []
    for j in range(n):
        for i in range(n):
            rows.append(row_from_entries(fld, [1 if i == j else 0]))
    mat = Mat(fld, n * n, 1, rows)
    return Ver4Morphism(tensor_object(dual_object(X), X), unit_object(fld), mat)


def coevaluation(X: Ver4Object) -> Ver4Morphism:
    """1 -> X (x) X^v."""
    fld = X.field
    n = X.dim
    ent = [0] * (n * n)
    for i in range(n):
        ent[i * n + i] = 1
    mat = Mat(fld, 1, n * n, [row_from_entries(fld, ent)])
    return Ver4Morphism(unit_object(fld), tensor_object(X, dual_object(X)), mat)


def h0(X: Ver4Object) -> Subspace:
    """Basis of the kernel of D (the image of Hom(1, X) inside X)."""
    return X.D.right_kernel()


def decompose(X: Ver4Object):
    """(multiplicity of 1, multiplicity of P); the only indecomposables."""
    r = X.D.rank()
    n1 = X.dim - 2 * r
    if n1 < 0:
        raise AssertionError("rank(D) exceeds dim/2; D^2 = 0 violated")
    return (n1, r)


def _braid_operator(X: Ver4Object, n: int, i: int, c_mat: Mat) -> Mat:
    """id^(i) (x) c (x) id^(n-i-2) acting on X^(x n)."""
    fld = X.field
    left = Mat.identity(fld, X.dim ** i)
    right = Mat.identity(fld, X.dim ** (n - i - 2))
    return left.kron(c_mat).kron(right)


def tensor_power(X: Ver4Object, n: int) -> Ver4Object:
    fld = X.field
    out = unit_object(fld)
    for _ in range(n):
        out = tensor_object(out, X)
    if n >= 1:
        # strip the harmless leading unit factor for exact dimensions
        D = out.D
        return Ver4Object(fld, X.dim ** n, D)
    return out


def sym_power(X: Ver4Object, n: int):
    """(Sym^n X, projection from X^(x n), lift with proj . lift = id).

    Sym^n is the quotient of X^(x n) by the images of id + c_i over the
    adjacent braidings c_i (char-2 coinvariants).
    """
    fld = X.field
    if n == 0:
        one = unit_object(fld)
        return one, identity_morphism(one), Mat.identity(fld, 1)
    Tn = tensor_power(X, n)
    if n == 1:
        return X, Ver4Morphism(Tn, X, Mat.identity(fld, X.dim), check=False), Mat.identity(fld, X.dim)
    c = braiding(X, X).mat
    dim = Tn.dim
    rel = Subspace.zero(fld, dim)
    ident = Mat.identity(fld, dim)
    for i in range(n - 1):
        op = _braid_operator(X, n, i, c).add(ident)
        rel = rel.plus(op.row_space())
    proj, lift = rel.quotient_maps()
    Dq = lift.mul(Tn.D).mul(proj)
    S = Ver4Object(fld, proj.ncols, Dq)
    return S, Ver4Morphism(Tn, S, proj), lift


def check_MN2(alpha: Ver4Morphism, n_max: int):
    """Least n <= n_max with alpha^n : 1 -> Sym^n X zero, else None."""
    X = alpha.target
    if alpha.source.dim != 1:
        raise ValueError("alpha must have source 1")
    if alpha.mat.is_zero():
        raise ValueError("alpha must be a monomorphism")
    power = alpha.mat
    for n in range(1, n_max + 1):
        if n > 1:
            power = power.kron(alpha.mat)
        _, proj, _ = sym_power(X, n)
        if power.mul(proj.mat).is_zero():
            return n
    return None


def check_GR(eps: Ver4Morphism, n_max: int):
    """Least n in 1..n_max such that Sym^n(eps) : Sym^n X ->> 1 splits."""
    X = eps.source
    if eps.target.dim != 1 or eps.mat.is_zero():
        raise ValueError("eps must be a nonzero map onto 1")
    fld = X.field
    power = eps.mat
    for n in range(1, n_max + 1):
        if n > 1:
            power = power.kron(eps.mat)
        S, proj, lift = sym_power(X, n)
        eps_n = lift.mul(power)
        # section: v with v @ D_S = 0 and v @ eps_n = 1
        width = S.dim + 1
        rows = []
        for i in range(S.dim):
            combined = list(S.D.entries()[i]) + [eps_n.entry(i, 0)]
            rows.append(row_from_entries(fld, combined))
        system = Mat(fld, S.dim, width, rows)
        target = row_from_entries(fld, [0] * S.dim + [1])
        if system.solve_left(target) is not None:
            return n
    return None


def socle_inclusion(field: F2e) -> Ver4Morphism:
    """The monomorphism 1 -> P onto the socle span{v2}."""
    P = projective_object(field)
    mat = Mat.from_entries(field, [[0, 1]])
    return Ver4Morphism(unit_object(field), P, mat)


def projective_cover_map(field: F2e) -> Ver4Morphism:
    """The epimorphism P ->> 1 (v1 -> 1, v2 -> 0)."""
    P = projective_object(field)
    mat = Mat.from_entries(field, [[1], [0]])
    return Ver4Morphism(P, unit_object(field), mat)


def sum_of_indecomposables(field: F2e, n1: int, nP: int) -> Ver4Object:
    out = None
    for _ in range(n1):
        out = unit_object(field) if out is None else direct_sum(out, unit_object(field))
    for _ in range(nP):
        p = projective_object(field)
        out = p if out is None else direct_sum(out, p)
    if out is None:
        return Ver4Object(field, 0, Mat.zeros(field, 0, 0))
    return out


def random_invertible(field: F2e, n: int, rng) -> Mat:
    while True:
        ent = [[rng.randrange(field.order) for _ in range(n)] for _ in range(n)]
        m = Mat.from_entries(field, ent)
        if m.is_invertible():
            return m


def random_object(field: F2e, dim: int, rng) -> Ver4Object:
    """Random object of the given dimension: random change of basis of a sum of 1's and P's."""
    r = rng.randint(0, dim // 2)
    base = sum_of_indecomposables(field, dim - 2 * r, r)
    if dim == 0:
        return base
    g = random_invertible(field, dim, rng)
    D = g.inverse().mul(base.D).mul(g)
    return Ver4Object(field, dim, D)


def morphism_space(X: Ver4Object, Y: Ver4Object) -> list:
    """Basis (as Mats) of the space of D-equivariant maps X -> Y."""
    fld = X.field
    nx, ny = X.dim, Y.dim
    rows = []
    for i in range(nx):
        for j in range(ny):
            # E_ij as a map; condition D_X E - E D_Y = 0, flattened
            e = Mat.zeros(fld, nx, ny)
            ent = [[0] * ny for _ in range(nx)]
            ent[i][j] = 1
            e = Mat.from_entries(fld, ent)
            comm = X.D.mul(e).add(e.mul(Y.D))
            flat = []
            for a in range(nx):
                flat.extend(comm.entries()[a])
            rows.append(row_from_entries(fld, flat))
    op = Mat(fld, nx * ny, nx * ny, rows)
    kern = op.right_kernel()
    mats = []
    for v in kern.rows:
        ent = [[0] * ny for _ in range(nx)]
        from .linalg import row_entry

        for i in range(nx):
            for j in range(ny):
                ent[i][j] = row_entry(fld, v, i * ny + j)
        mats.append(Mat.from_entries(fld, ent))
    return mats


def random_morphism(X: Ver4Object, Y: Ver4Object, rng) -> Ver4Morphism:
    basis = morphism_space(X, Y)
    while True:
        m = Mat.zeros(X.field, X.dim, Y.dim)
        any_nonzero = False
        for b in basis:
            s = rng.randrange(X.field.order)
            if s:
                m = m.add(b.scale(s))
                any_nonzero = True
        if any_nonzero or not basis:
            return Ver4Morphism(X, Y, m, check=False)


def find_isomorphism(X: Ver4Object, Y: Ver4Object, rng, tries: int = 200):
    """A D-equivariant bijection X -> Y, or None (types must agree)."""
    if X.dim != Y.dim or decompose(X) != decompose(Y):
        return None
    basis = morphism_space(X, Y)
    for _ in range(tries):
        m = Mat.zeros(X.field, X.dim, Y.dim)
        for b in basis:
            s = rng.randrange(X.field.order)
            if s:
                m = m.add(b.scale(s))
        if m.is_invertible():
            return Ver4Morphism(X, Y, m)
    return None
