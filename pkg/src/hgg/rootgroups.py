"""Roots of Sp_6 for the diagonal torus in a hyperbolic basis, and root-group tests.

The torus diag(t1, t2, t3, 1/t3, 1/t2, 1/t1) acts on the matrix unit E_ij
by the character weight(i) - weight(j), written as an exponent vector over
(t1, t2, t3).  A root group is supported exactly on the units carrying its
character.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exactmat import RationalMatrix
from .invariant_form import SymplecticForm

Character = tuple[int, int, int]


def basis_weights(rank: int = 3) -> list[tuple[int, ...]]:
    """Torus weights of eps_1..eps_m, eps_m*..eps_1*."""
    unit = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    return unit + [tuple(-x for x in w) for w in reversed(unit)]


def character_name(ch: Character) -> str:
    parts = []
    for i, e in enumerate(ch, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e:
            parts.append(f"t{i}^{e}")
    return "".join(parts) or "1"


@dataclass(frozen=True)
class RootDatum:
    positive_roots: tuple[Character, ...] = (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (1, 0, -1), (1, -1, 0),
        (0, 2, 0), (0, 1, 1), (0, 1, -1), (0, 0, 2),
    )
    highest: Character = (2, 0, 0)
    second_highest: Character = (1, 1, 0)
    # lambda_3 plays no role in the two root groups tested here
    lambdas: tuple[Fraction, ...] | None = field(default=None, compare=False)

    @property
    def roots(self) -> tuple[Character, ...]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg

    def support(self, ch: Character) -> list[tuple[int, int]]:
        """1-based matrix positions (i, j) on which the root group of ch lives."""
        w = basis_weights(len(ch))
        n = len(w)
        return [(i + 1, j + 1) for i, j in product(range(n), repeat=2)
                if i != j and tuple(p - q for p, q in zip(w[i], w[j])) == ch]


SP6 = RootDatum()


def _offdiag(m: RationalMatrix) -> dict[tuple[int, int], Fraction] | None:
    """Nonzero entries of M - I keyed by 1-based position."""
    out = {}
    for i in range(m.n):
        for j in range(m.n):
            d = m[i, j] - (1 if i == j else 0)
            if d:
                out[(i + 1, j + 1)] = d
    return out


def in_highest_root_group(m: RationalMatrix) -> Fraction | None:
    """y if M = I + y E_16 with y != 0."""
    if m.n != 6:
        raise ValueError("root groups are defined for 6x6 matrices")
    diff = _offdiag(m)
    if set(diff) != {(1, 6)}:
        return None
    return diff[(1, 6)]


def in_second_highest_root_group(m: RationalMatrix, lambda1, lambda2) -> Fraction | None:
    """x if M = I + x E_15 + (lambda1/lambda2) x E_26 with x != 0."""
    if m.n != 6:
        raise ValueError("root groups are defined for 6x6 matrices")
    ratio = Fraction(lambda1) / Fraction(lambda2)
    diff = _offdiag(m)
    if set(diff) != {(1, 5), (2, 6)}:
        return None
    x = diff[(1, 5)]
    return x if diff[(2, 6)] == ratio * x else None


def preserves_form(m: RationalMatrix, omega: SymplecticForm | RationalMatrix) -> bool:
    g = omega.matrix if isinstance(omega, SymplecticForm) else omega
    if g.n != m.n:
        raise ValueError("dimension mismatch")
    return m.transpose() @ g @ m == g


def classify_unipotent(m: RationalMatrix, datum: RootDatum = SP6) -> str:
    """Name of the single root whose support contains every entry of M - I.

    Returns "identity", a character name such as "t1^2" or "t1^-2", or
    "other" when the support spans several roots.
    """
    diff = _offdiag(m)
    if not diff:
        return "identity"
    for ch in datum.roots:
        if set(diff) <= set(datum.support(ch)):
            return character_name(ch)
    return "other"
