"""The alternating form preserved by a hypergeometric group.

Two independent routes produce the form in the standard basis:

* ``form_via_orbit`` uses the vector v = (A^-1 B - I) e_n.  It is orthogonal
  to e_1 .. e_{n-1}, so after normalising Omega(v, e_n) = 1 every pairing
  Omega(v, M^k v) is the e_n-coordinate of M^k v.  This fills the Gram
  matrix on the basis v, Mv, ..., M^{n-1} v, which is then pulled back.
* ``form_via_linear_solve`` writes the form as a skew Toeplitz matrix
  (A shifts e_i to e_{i+1}, so entries are constant along diagonals) with
  unknowns w_1 .. w_{n-1} on the superdiagonals and solves the invariance
  equations for A and B.

The two are compared with ``forms_agree``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InvarianceFailed, OrbitDegenerate, SolutionSpaceNotLine
from .exactmat import RationalMatrix, nullspace, rank


class BasisTag(str, Enum):
    STANDARD = "Standard"
    ORBIT = "OrbitBasis"
    HYPERBOLIC = "HyperbolicBasis"


@dataclass(frozen=True)
class SymplecticForm:
    matrix: RationalMatrix
    basis: BasisTag = BasisTag.STANDARD

    @property
    def n(self) -> int:
        return self.matrix.n

    def pair(self, x, y) -> Fraction:
        """Omega(x, y) = x^t M y."""
        my = self.matrix.apply(y)
        return sum((Fraction(a) * b for a, b in zip(x, my)), Fraction(0))

    def is_skew(self) -> bool:
        return self.matrix.transpose() == -self.matrix

    def preserved_by(self, m: RationalMatrix) -> bool:
        return m.transpose() @ self.matrix @ m == self.matrix

    def int_rows(self) -> list[list[int]]:
        return self.matrix.int_rows()


def canonical_scaling(m: RationalMatrix) -> RationalMatrix:
    """Primitive integer multiple whose first nonzero entry in row 1 is positive."""
    rows = m.rows()
    den = reduce(lambda x, y: x * y // gcd(x, y), (q.denominator for r in rows for q in r), 1)
    ints = [[int(q * den) for q in r] for r in rows]
    g = reduce(gcd, (abs(x) for r in ints for x in r), 0)
    if g == 0:
        raise ValueError("cannot canonicalise the zero matrix")
    lead = next((x for x in ints[0] if x), None)
    if lead is None:
        lead = next(x for r in ints for x in r if x)
    sign = 1 if lead > 0 else -1
    return RationalMatrix([[sign * x // g for x in r] for r in ints])


def orbit_vector(a: RationalMatrix, b: RationalMatrix) -> list[Fraction]:
    """v = (A^-1 B - I) e_n, the last column of A^-1 B minus e_n."""
    c = a.inverse() @ b
    v = c.column(c.n - 1)
    v[-1] -= 1
    return v


def orbit_gram(a: RationalMatrix, b: RationalMatrix, generator: str = "B"
               ) -> tuple[RationalMatrix, RationalMatrix]:
    """Gram matrix on the orbit basis and the column matrix Y = [v | Mv | ...]."""
    m = b if generator == "B" else a
    n = m.n
    v = orbit_vector(a, b)
    vecs = [v]
    for _ in range(n - 1):
        vecs.append(m.apply(vecs[-1]))
    if rank(vecs) < n:
        raise OrbitDegenerate(f"the {generator}-orbit of v does not span Q^{n}")
    # Omega(M^i v, M^j v) = Omega(v, M^(j-i) v) = e_n-coordinate of M^(j-i) v
    last = [w[-1] for w in vecs]
    gram = [[last[j - i] if j >= i else -last[i - j] for j in range(n)] for i in range(n)]
    return RationalMatrix(gram), RationalMatrix.from_columns(vecs)


def form_via_orbit(a: RationalMatrix, b: RationalMatrix, generator: str = "B") -> SymplecticForm:
    gram, y = orbit_gram(a, b, generator)
    z = y.inverse()
    form = canonical_scaling(z.transpose() @ gram @ z)
    if not (a.transpose() @ form @ a == form and b.transpose() @ form @ b == form):
        raise InvarianceFailed("orbit form is not preserved by A and B")
    return SymplecticForm(form, BasisTag.STANDARD)


def toeplitz_skew(weights) -> RationalMatrix:
    """Skew matrix with weights[k-1] on the k-th superdiagonal."""
    n = len(weights) + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if j > i:
                rows[i][j] = weights[j - i - 1]
            elif j < i:
                rows[i][j] = -weights[i - j - 1]
    return RationalMatrix(rows)


def form_via_linear_solve(a: RationalMatrix, b: RationalMatrix) -> SymplecticForm:
    n = a.n
    basis = [toeplitz_skew([int(k == j) for k in range(n - 1)]) for j in range(n - 1)]
    # one equation per matrix entry of M^t S M - S, for M = A and M = B
    columns = []
    for s in basis:
        col = []
        for m in (a, b):
            col.extend(x for row in (m.transpose() @ s @ m - s).rows() for x in row)
        columns.append(col)
    equations = [list(r) for r in zip(*columns)]
    sols = nullspace(equations, n - 1)
    if len(sols) != 1:
        raise SolutionSpaceNotLine(f"invariant Toeplitz forms span dimension {len(sols)}, expected 1")
    form = canonical_scaling(toeplitz_skew(sols[0]))
    return SymplecticForm(form, BasisTag.STANDARD)


def forms_agree(x: SymplecticForm, y: SymplecticForm) -> bool:
    """True iff x = q * y for a nonzero rational q."""
    if x.n != y.n:
        raise ValueError("forms of different dimension")
    if x.basis != y.basis:
        return False
    xr, yr = x.matrix.rows(), y.matrix.rows()
    ratio = None
    for rx, ry in zip(xr, yr):
        for p, q in zip(rx, ry):
            if (p == 0) != (q == 0):
                return False
            if p:
                if ratio is None:
                    ratio = p / q
                elif p != ratio * q:
                    return False
    return ratio is not None
