"""Exact scalar arithmetic and dense linear algebra over Q and F_p.

Scalars are `fractions.Fraction` values over Q and reduced int residues over
F_p; every operation is exact, so equality of maps is decidable equality of
entries.  Matrices are stored dense and row-major.  Kernel bases are returned
in reduced column echelon form, which makes them canonical representatives of
their column space: pivot rows strictly increasing, pivots equal to 1, and
each pivot row zero outside its pivot column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, NoFactorization, NotInvertible

_RATIONAL_RE = re.compile(r"[+-]?\d+(/[1-9]\d*)?")


class Field:
    """Arithmetic of an exact scalar domain."""

    name = "?"

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse an exact literal "n" or "p/q".  Floats are rejected."""
        text = text.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise InputError(f"not an exact rational literal: {text!r}")
        if "/" in text:
            num, den = text.split("/")
            return self.coerce(Fraction(int(num), int(den)))
        return self.coerce(int(text))

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def is_zero(self, a) -> bool:
        # avoids Fraction.__eq__, which is slow in hot loops
        return a.numerator == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def coerce(self, value):
        if isinstance(value, float):
            raise InputError("floating point values are not accepted")
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise InputError(f"cannot coerce {value!r} into Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not (2 <= p < 2**31 and _is_prime(p)):
            raise InputError(f"modulus must be a prime below 2^31, got {p}")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def coerce(self, value):
        if isinstance(value, float):
            raise InputError("floating point values are not accepted")
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        if isinstance(value, int):
            return value % self.p
        raise InputError(f"cannot coerce {value!r} into F_{self.p}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3,317,044,064,679,887,385,961,981
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class DenseMap:
    """A rows x cols matrix of exact scalars, acting on column vectors."""

    rows: int
    cols: int
    entries: tuple
    field: Field

    def __post_init__(self):
        assert len(self.entries) == self.rows * self.cols

    @classmethod
    def from_rows(cls, rows, field: Field) -> "DenseMap":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        assert all(len(r) == ncols for r in rows)
        return cls(nrows, ncols, tuple(field.coerce(v) for row in rows for v in row), field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "DenseMap":
        return cls(n, n, tuple(field.one if i == j else field.zero
                               for i in range(n) for j in range(n)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "DenseMap":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "DenseMap":
        return DenseMap(self.cols, self.rows,
                        tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
                        self.field)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for v in self.entries)

    def __matmul__(self, other: "DenseMap") -> "DenseMap":
        return compose(self, other)

    def __sub__(self, other: "DenseMap") -> "DenseMap":
        _check_same_shape(self, other)
        f = self.field
        return DenseMap(self.rows, self.cols,
                        tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)), f)

    def __str__(self):
        body = "; ".join(" ".join(self.field.to_str(self.entry(i, j)) for j in range(self.cols))
                         for i in range(self.rows))
        return f"[{body}]({self.rows}x{self.cols} over {self.field.name})"


def _check_same_field(f: DenseMap, g: DenseMap):
    if f.field is not g.field:
        raise ValueError(f"field mismatch: {f.field.name} vs {g.field.name}")


def _check_same_shape(f: DenseMap, g: DenseMap):
    _check_same_field(f, g)
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ValueError(f"shape mismatch: {f.rows}x{f.cols} vs {g.rows}x{g.cols}")


def compose(g: DenseMap, f: DenseMap) -> DenseMap:
    """Matrix product g.f, i.e. apply f first and then g."""
    _check_same_field(f, g)
    if f.rows != g.cols:
        raise ValueError(f"dimension mismatch: cannot compose {g.rows}x{g.cols} after {f.rows}x{f.cols}")
    fld = f.field
    zero = fld.zero
    is_zero = fld.is_zero
    add = fld.add
    mul = fld.mul
    out = []
    frows = f.row_lists()
    ge = g.entries
    for i in range(g.rows):
        base = i * g.cols
        nz = [(k, ge[base + k]) for k in range(g.cols) if not is_zero(ge[base + k])]
        if not nz:
            out.extend([zero] * f.cols)
            continue
        for j in range(f.cols):
            acc = zero
            for k, v in nz:
                w = frows[k][j]
                if not is_zero(w):
                    acc = add(acc, mul(v, w))
            out.append(acc)
    return DenseMap(g.rows, f.cols, tuple(out), fld)


def kronecker(f: DenseMap, g: DenseMap) -> DenseMap:
    """Kronecker product, left factor major on rows and columns alike.

    Basis pair (i, j) of the product corresponds to flat index i*dim_right + j.
    """
    _check_same_field(f, g)
    fld = f.field
    is_zero = fld.is_zero
    mul = fld.mul
    rows, cols = f.rows * g.rows, f.cols * g.cols
    out = [fld.zero] * (rows * cols)
    for i1 in range(f.rows):
        for j1 in range(f.cols):
            a = f.entry(i1, j1)
            if is_zero(a):
                continue
            for i2 in range(g.rows):
                base_r = i1 * g.rows + i2
                for j2 in range(g.cols):
                    b = g.entry(i2, j2)
                    if not is_zero(b):
                        out[base_r * cols + j1 * g.cols + j2] = mul(a, b)
    return DenseMap(rows, cols, tuple(out), fld)


def _rref(rows: list[list], field: Field) -> list[int]:
    """In-place reduced row echelon form; returns the pivot column list."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    is_zero = field.is_zero
    mul = field.mul
    sub = field.sub
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if not is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        if rows[r][c] != field.one:
            inv = field.inv(rows[r][c])
            rows[r] = [mul(inv, v) for v in rows[r]]
        for i in range(m):
            if i != r and not is_zero(rows[i][c]):
                coef = rows[i][c]
                rows[i] = [sub(a, mul(coef, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def kernel_basis(f: DenseMap) -> DenseMap:
    """A (cols x k) basis of ker f, in reduced column echelon form."""
    fld = f.field
    rows = f.row_lists()
    pivots = _rref(rows, fld)
    pivot_set = set(pivots)
    free = [c for c in range(f.cols) if c not in pivot_set]
    # one basis vector per free column, written as rows of the transpose
    vt = []
    for fc in free:
        v = [fld.zero] * f.cols
        v[fc] = fld.one
        for i, pc in enumerate(pivots):
            v[pc] = fld.neg(rows[i][fc])
        vt.append(v)
    _rref(vt, fld)
    k = len(vt)
    entries = tuple(vt[j][i] for i in range(f.cols) for j in range(k))
    return DenseMap(f.cols, k, entries, fld)


def column_space_canonical(f: DenseMap) -> DenseMap:
    """Canonical reduced-column-echelon basis of the column space of f."""
    fld = f.field
    vt = f.transpose().row_lists()
    _rref(vt, fld)
    vt = [row for row in vt if not all(fld.is_zero(v) for v in row)]
    k = len(vt)
    entries = tuple(vt[j][i] for i in range(f.rows) for j in range(k))
    return DenseMap(f.rows, k, entries, fld)


def solve_factor(mono: DenseMap, g: DenseMap) -> DenseMap:
    """The unique h with mono.h = g, for mono of full column rank."""
    _check_same_field(mono, g)
    if mono.rows != g.rows:
        raise ValueError(f"dimension mismatch: {mono.rows} vs {g.rows} rows")
    fld = mono.field
    aug = [mrow + grow for mrow, grow in zip(mono.row_lists(), g.row_lists())]
    pivots = _rref(aug, fld)
    mono_pivots = [p for p in pivots if p < mono.cols]
    if len(mono_pivots) != mono.cols:
        raise ValueError("mono does not have full column rank")
    if len(pivots) != len(mono_pivots):
        raise NoFactorization("column space of the target is not contained in the image")
    entries = tuple(aug[i][mono.cols + j] for i in range(mono.cols) for j in range(g.cols))
    return DenseMap(mono.cols, g.cols, entries, fld)


def two_sided_inverse(f: DenseMap) -> DenseMap:
    """The inverse of a square map, certifying f.g = g.f = identity."""
    if f.rows != f.cols:
        raise ValueError(f"not square: {f.rows}x{f.cols}")
    n = f.rows
    fld = f.field
    ident = DenseMap.identity(n, fld)
    aug = [frow + irow for frow, irow in zip(f.row_lists(), ident.row_lists())]
    pivots = _rref(aug, fld)
    if pivots != list(range(n)):
        raise NotInvertible(f"singular {n}x{n} map")
    entries = tuple(aug[i][n + j] for i in range(n) for j in range(n))
    inv = DenseMap(n, n, entries, fld)
    assert compose(f, inv) == ident and compose(inv, f) == ident
    return inv
