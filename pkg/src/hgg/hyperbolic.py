"""Hyperbolic bases: change of basis making a symplectic form anti-diagonal."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import Degenerate, InvarianceFailed
from .exactmat import RationalMatrix
from .invariant_form import BasisTag, SymplecticForm


@dataclass(frozen=True)
class HyperbolicBasis:
    """Columns eps_1..eps_m, eps_m*..eps_1*; lambdas[i] = Omega(eps_i, eps_i*)."""

    X: RationalMatrix
    lambdas: tuple[Fraction, ...]

    def transformed_form(self, omega: SymplecticForm) -> SymplecticForm:
        return SymplecticForm(self.X.transpose() @ omega.matrix @ self.X, BasisTag.HYPERBOLIC)


def _primitive(vec: list[Fraction]) -> list[Fraction]:
    den = reduce(lambda x, y: x * y // gcd(x, y), (q.denominator for q in vec), 1)
    ints = [int(q * den) for q in vec]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    return [Fraction(x // g) for x in ints]


def hyperbolic_basis(omega: SymplecticForm, first: list | None = None) -> HyperbolicBasis:
    """Greedy symplectic Gram-Schmidt starting from the standard basis.

    With first given, eps_1 is the primitive integer multiple of that vector.
    """
    n = omega.n
    if n % 2 or omega.matrix.det() == 0:
        raise Degenerate("form is singular or of odd dimension")
    pool = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    if first is not None:
        if len(first) != n or not any(first):
            raise ValueError("first vector must be nonzero of the form's dimension")
        pool.insert(0, [Fraction(q) for q in first])
    firsts, partners = [], []
    while pool:
        pick = None
        for i, u in enumerate(pool):
            for j in range(len(pool)):
                if j != i and omega.pair(u, pool[j]):
                    pick = (i, j)
                    break
            if pick:
                break
        if pick is None:
            raise Degenerate("no hyperbolic pair left; form is degenerate")
        i, j = pick
        u, w = pool[i], pool[j]
        lam = omega.pair(u, w)
        firsts.append(u)
        partners.append(w)
        rest = []
        for k, x in enumerate(pool):
            if k in (i, j):
                continue
            # remove the components pairing with u and with w
            alpha = -omega.pair(x, w) / lam
            beta = omega.pair(x, u) / lam
            y = [xi + alpha * ui + beta * wi for xi, ui, wi in zip(x, u, w)]
            if any(y):
                rest.append(y)
        pool = rest
    if len(firsts) * 2 != n:
        raise Degenerate("form is degenerate")
    cols = [_primitive(v) for v in firsts] + [_primitive(v) for v in reversed(partners)]
    x = RationalMatrix.from_columns(cols)
    lambdas = verify_antidiagonal(x, omega)
    assert lambdas is not None
    return HyperbolicBasis(x, lambdas)


def verify_antidiagonal(x: RationalMatrix, omega: SymplecticForm) -> tuple[Fraction, ...] | None:
    """(lambda_1, ..., lambda_m) if X^t Omega X is anti-diagonal of the expected shape."""
    if x.n != omega.n:
        raise ValueError("dimension mismatch")
    n = x.n
    g = x.transpose() @ omega.matrix @ x
    for i in range(n):
        for j in range(n):
            if j != n - 1 - i and g[i, j] != 0:
                return None
    lambdas = tuple(g[i, n - 1 - i] for i in range(n // 2))
    if any(lam == 0 for lam in lambdas):
        return None
    for i in range(n // 2):
        if g[n - 1 - i, i] != -lambdas[i]:
            return None
    return lambdas


def conjugate_generators(a: RationalMatrix, b: RationalMatrix, x: RationalMatrix,
                         omega: SymplecticForm | None = None
                         ) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """a = X^-1 A X, b = X^-1 B X, c = a^-1 b; with omega given, checks invariance of X^t Omega X."""
    xi = x.inverse()
    ca = xi @ a @ x
    cb = xi @ b @ x
    cc = ca.inverse() @ cb
    if omega is not None:
        g = x.transpose() @ omega.matrix @ x
        for m in (ca, cb):
            if m.transpose() @ g @ m != g:
                raise InvarianceFailed("conjugated generator does not preserve the transformed form")
    return ca, cb, cc


def transvection_axis(m: RationalMatrix) -> list[Fraction] | None:
    """Primitive integer vector spanning the image of M - I when that image is a line."""
    n = m.n
    d = m - RationalMatrix.identity(n)
    cols = [d.column(j) for j in range(n)]
    nonzero = [col for col in cols if any(col)]
    if not nonzero:
        return None
    u = nonzero[0]
    k = next(i for i, x in enumerate(u) if x)
    for col in nonzero[1:]:
        r = col[k] / u[k]
        if any(x != r * y for x, y in zip(col, u)):
            return None
    return _primitive(list(u))


def adapted_basis(a: RationalMatrix, b: RationalMatrix, omega: SymplecticForm) -> HyperbolicBasis:
    """Hyperbolic basis whose first vector spans the image of A^-1 B - I.

    A^-1 B is a transvection for every hypergeometric pair, so in this basis
    c = a^-1 b lies in the highest root group.
    """
    axis = transvection_axis(a.inverse() @ b)
    if axis is None:
        raise Degenerate("A^-1 B is not a transvection")
    return hyperbolic_basis(omega, first=axis)

