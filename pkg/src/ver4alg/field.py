"""Arithmetic in the finite fields F_{2^e}.

Field elements are plain ints in [0, 2^e): bit i is the coefficient of w^i,
where w is the class of the variable modulo the chosen irreducible polynomial.
Polynomials over F_2 are likewise encoded as ints (bit i = coefficient of x^i).
"""

from __future__ import annotations

from functools import lru_cache

# Irreducible moduli used when the caller does not supply one (e >= 2).
DEFAULT_MODULI = {
    2: 0b111,        # x^2 + x + 1
    3: 0b1011,       # x^3 + x + 1
    4: 0b10011,      # x^4 + x + 1
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}

_MAX_TABLE_DEGREE = 8


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two F_2[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while poly_degree(a) >= dm and a:
        a ^= m << (poly_degree(a) - dm)
    return a


def is_irreducible(p: int, degree: int) -> bool:
    """Trial division by every polynomial of degree 1..degree//2."""
    if poly_degree(p) != degree or degree < 1:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, g) == 0:
                return False
    return True


class F2e:
    """The field F_{2^e}, with table-driven multiplication (e <= 8)."""

    characteristic = 2

    def __init__(self, e: int = 1, modulus: int | None = None):
        if e < 1 or e > _MAX_TABLE_DEGREE:
            raise ValueError(f"unsupported extension degree {e}")
        if e == 1:
            modulus = None
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI[e]
            if not is_irreducible(modulus, e):
                raise ValueError(f"modulus {bin(modulus)} is not irreducible of degree {e}")
        self.degree = e
        self.modulus = modulus
        self.order = 1 << e
        self.zero = 0
        self.one = 1
        self._mul = self._build_mul_table()
        self._inv = self._build_inv_table()
        # SCALE[s][p] = bitmask over input planes contributing to output plane p
        # of the F_2-linear map "multiply by s" in the plane representation.
        self.scale_maps = self._build_scale_maps()

    def _build_mul_table(self):
        q, e, m = self.order, self.degree, self.modulus
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = poly_mul(a, b)
                if e > 1:
                    v = poly_mod(v, m)
                table[a][b] = v
                table[b][a] = v
        return table

    def _build_inv_table(self):
        inv = [0] * self.order
        for a in range(1, self.order):
            for b in range(1, self.order):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise AssertionError("non-invertible nonzero element; modulus not irreducible")
        return inv

    def _build_scale_maps(self):
        e = self.degree
        maps = []
        for s in range(self.order):
            cols = []
            for p in range(e):
                mask = 0
                for i in range(e):
                    if (self._mul[s][1 << i] >> p) & 1:
                        mask |= 1 << i
                cols.append(mask)
            maps.append(tuple(cols))
        return tuple(maps)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def square(self, a: int) -> int:
        return self._mul[a][a]

    def elements(self) -> range:
        return range(self.order)

    def show(self, a: int) -> str:
        if self.degree == 1 or a < 2:
            return str(a)
        terms = []
        for i in reversed(range(self.degree)):
            if (a >> i) & 1:
                terms.append("w" if i == 1 else ("1" if i == 0 else f"w^{i}"))
        return "+".join(terms)

    def __eq__(self, other):
        return (
            isinstance(other, F2e)
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.degree, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return "F2"
        return f"F2^{self.degree}"


@lru_cache(maxsize=None)
def GF(e: int = 1, modulus: int | None = None) -> F2e:
    return F2e(e, modulus)


GF2 = GF(1)
GF4 = GF(2)
