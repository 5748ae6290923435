"""Dense square matrices over Q with exact big-integer arithmetic.

A matrix is stored as an integer numerator grid sharing one positive
denominator, kept in lowest terms (the gcd of the denominator and every
numerator is 1).  Products then reduce to integer multiply-accumulate plus
a single gcd pass, which keeps powers with exponents in the tens of
thousands cheap.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import NotMonic, Singular
from .polynomial import IntPolynomial

Number = int | Fraction


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact matrix entry")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class RationalMatrix:
    __slots__ = ("n", "_num", "_den", "_hash")

    def __init__(self, rows: Iterable[Iterable[Number | str]]):
        grid = [[_to_fraction(x) for x in row] for row in rows]
        n = len(grid)
        if n == 0 or any(len(r) != n for r in grid):
            raise ValueError("RationalMatrix must be square and non-empty")
        den = 1
        for row in grid:
            for x in row:
                den = _lcm(den, x.denominator)
        num = tuple(tuple(x.numerator * (den // x.denominator) for x in row) for row in grid)
        self._init(n, num, den)

    def _init(self, n, num, den):
        self.n = n
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, num, den: int) -> "RationalMatrix":
        if den < 0:
            num = [[-x for x in row] for row in num]
            den = -den
        g = den
        for row in num:
            for x in row:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g == 1:
                break
        if g != 1:
            num = [[x // g for x in row] for row in num]
            den //= g
        m = object.__new__(cls)
        m._init(n, tuple(tuple(row) for row in num), den)
        return m

    # -- constructors ---------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._raw(n, [[int(i == j) for j in range(n)] for i in range(n)], 1)

    @classmethod
    def zero(cls, n: int) -> "RationalMatrix":
        return cls._raw(n, [[0] * n for _ in range(n)], 1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> "RationalMatrix":
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)])

    # -- access ---------------------------------------------------------
    @property
    def denominator(self) -> int:
        return self._den

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return Fraction(self._num[i][j], self._den)

    def rows(self) -> list[list[Fraction]]:
        d = self._den
        return [[Fraction(x, d) for x in row] for row in self._num]

    def row(self, i: int) -> list[Fraction]:
        return [Fraction(x, self._den) for x in self._num[i]]

    def column(self, j: int) -> list[Fraction]:
        return [Fraction(row[j], self._den) for row in self._num]

    def is_integral(self) -> bool:
        return self._den == 1

    def int_rows(self) -> list[list[int]]:
        if self._den != 1:
            raise ValueError("matrix has non-integer entries")
        return [list(r) for r in self._num]

    def max_entry_bits(self) -> int:
        big = max((abs(x) for row in self._num for x in row), default=0)
        return big.bit_length() + self._den.bit_length() - 1

    def is_zero(self) -> bool:
        return not any(x for row in self._num for x in row)

    def is_identity(self) -> bool:
        d = self._den
        return all(x == (d if i == j else 0)
                   for i, row in enumerate(self._num) for j, x in enumerate(row))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.n == other.n and self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._den, self._num))
        return self._hash

    def canonical_key(self) -> tuple:
        """Hashable exact serialization used for deduplication."""
        return (self.n, self._den, self._num)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows()]})"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows()]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        _same_dim(self, other)
        d = _lcm(self._den, other._den)
        s, t = d // self._den, d // other._den
        num = [[x * s + y * t for x, y in zip(r1, r2)] for r1, r2 in zip(self._num, other._num)]
        return RationalMatrix._raw(self.n, num, d)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._raw(self.n, [[-x for x in r] for r in self._num], self._den)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, q: Number) -> "RationalMatrix":
        q = _to_fraction(q)
        return RationalMatrix._raw(
            self.n, [[x * q.numerator for x in r] for r in self._num], self._den * q.denominator)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        _same_dim(self, other)
        cols = tuple(zip(*other._num))
        num = [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in self._num]
        return RationalMatrix._raw(self.n, num, self._den * other._den)

    def apply(self, vec: Sequence[Number]) -> list[Fraction]:
        """Matrix times column vector."""
        vec = [_to_fraction(x) for x in vec]
        return [sum((Fraction(x, self._den) * v for x, v in zip(r, vec)), Fraction(0))
                for r in self._num]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix._raw(self.n, [list(c) for c in zip(*self._num)], self._den)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def inverse(self) -> "RationalMatrix":
        # (N/d)^-1 = d * N^-1, with N^-1 from Gauss-Jordan over Q
        n = self.n
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self._num)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise Singular("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            prow = [x / p for x in aug[col]]
            aug[col] = prow
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
        return RationalMatrix([row[n:] for row in aug]).scale(self._den)

    def __pow__(self, k: int) -> "RationalMatrix":
        return power(self, k)

    def det(self) -> Fraction:
        # Bareiss fraction-free elimination on the integer numerators
        n = self.n
        m = [list(r) for r in self._num]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if m[r][k]), None)
                if swap is None:
                    return Fraction(0)
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], self._den ** n)

    def charpoly(self) -> list[Fraction]:
        """Characteristic polynomial det(xI - M), coefficients low-to-high (Faddeev-LeVerrier)."""
        n = self.n
        ident = RationalMatrix.identity(n)
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = RationalMatrix.zero(n)
        for k in range(1, n + 1):
            mk = self @ mk + ident.scale(coeffs[n - k + 1])
            am = self @ mk
            coeffs[n - k] = -sum((am[i, i] for i in range(n)), Fraction(0)) / k
        return coeffs


def _same_dim(x: RationalMatrix, y: RationalMatrix) -> None:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")


def matrix_unit(n: int, i: int, j: int, value: Number = 1) -> RationalMatrix:
    """value * E_ij with 1-based (i, j), as in the usual E_16 notation."""
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = value
    return RationalMatrix(rows)


def identity(n: int) -> RationalMatrix:
    return RationalMatrix.identity(n)


def mul(*factors: RationalMatrix) -> RationalMatrix:
    if not factors:
        raise ValueError("mul() needs at least one factor")
    return reduce(lambda x, y: x @ y, factors)


def inverse(m: RationalMatrix) -> RationalMatrix:
    return m.inverse()


def transpose(m: RationalMatrix) -> RationalMatrix:
    return m.transpose()


def power(m: RationalMatrix, k: int) -> RationalMatrix:
    """Binary exponentiation; negative exponents go through the inverse."""
    if k < 0:
        m, k = m.inverse(), -k
    result = RationalMatrix.identity(m.n)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


class Convention(str, Enum):
    """Bracket convention; capital letters denote inverses."""

    FORWARD = "xyXY"  # [x, y] = x y x^-1 y^-1
    INVERSE_FIRST = "XYxy"  # [x, y] = x^-1 y^-1 x y

    @classmethod
    def parse(cls, text: str) -> "Convention":
        for c in cls:
            if c.value == text.strip():
                return c
        raise ValueError(f"unknown commutator convention {text!r}; use 'xyXY' or 'XYxy'")


def commutator(x: RationalMatrix, y: RationalMatrix,
               convention: Convention = Convention.FORWARD) -> RationalMatrix:
    xi, yi = x.inverse(), y.inverse()
    if Convention(convention) is Convention.FORWARD:
        return x @ y @ xi @ yi
    return xi @ yi @ x @ y


def companion(f: IntPolynomial) -> RationalMatrix:
    """Companion matrix sending e_i to e_{i+1}, last column -c_0 .. -c_{n-1}."""
    if f.degree < 1 or f.coeffs[-1] != 1:
        raise NotMonic(f"companion matrix needs a monic polynomial of degree >= 1, got {f}")
    n = f.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -f.coeffs[i]
    return RationalMatrix(rows)


def is_unipotent(m: RationalMatrix) -> bool:
    """True iff (M - I)^n = 0."""
    nil = m - RationalMatrix.identity(m.n)
    acc = nil
    for _ in range(m.n - 1):
        if acc.is_zero():
            return True
        acc = acc @ nil
    return acc.is_zero()


def rref(rows: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[_to_fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} over Q, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            x[pcol] = -row[fcol]
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(rref(rows)[1]) if rows else 0
