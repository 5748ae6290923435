"""Hypergeometric parameters, cyclotomic products and the closure classification.

Parameters are multisets of rationals in [0, 1); a Galois-closed multiset
corresponds to a product of cyclotomic polynomials.  Everything here is
exact: fractions are compared by cross-multiplication and no roots are
ever computed numerically.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .errors import (InvalidPair, NotCyclotomicProduct, NotGaloisClosed,
                     SharedEntry, ZeroDifference)
from .polynomial import IntPolynomial, poly_gcd


@dataclass(frozen=True)
class ParameterVector:
    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Fraction | int | str]):
        vals = []
        for e in entries:
            q = Fraction(e.strip()) if isinstance(e, str) else Fraction(e)
            if not 0 <= q < 1:
                raise ValueError(f"parameter {q} outside [0, 1)")
            vals.append(q)
        object.__setattr__(self, "entries", tuple(sorted(vals)))

    @classmethod
    def parse(cls, text: str) -> "ParameterVector":
        """Parse the comma-separated form, e.g. ``"0,0,1/2,1/2"``."""
        parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p.strip()]
        if not parts:
            raise ValueError("empty parameter list")
        try:
            return cls(parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad parameter list {text!r}: {exc}") from None

    @property
    def degree(self) -> int:
        return len(self.entries)

    def shifted(self, r: Fraction) -> "ParameterVector":
        return ParameterVector((q + r) % 1 for q in self.entries)

    def __str__(self) -> str:
        return ",".join(str(q) for q in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CycloProduct:
    """Factorization d -> multiplicity of a product of cyclotomic polynomials."""

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = factors.items() if isinstance(factors, Mapping) else factors
        merged: Counter[int] = Counter()
        for d, m in items:
            if d < 1 or m < 0:
                raise ValueError(f"bad factor Phi_{d}^{m}")
            merged[d] += m
        object.__setattr__(self, "factors", tuple(sorted((d, m) for d, m in merged.items() if m)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return sum(m * totient(d) for d, m in self.factors)

    def multiplicity(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    def expand(self) -> IntPolynomial:
        out = IntPolynomial([1])
        for d, m in self.factors:
            out = out * cyclotomic_poly(d) ** m
        return out

    def parameters(self) -> ParameterVector:
        vals = []
        for d, m in self.factors:
            vals.extend(Fraction(k, d) for k in _units(d) for _ in range(m))
        return ParameterVector(vals)

    def __str__(self) -> str:
        return "*".join(f"Phi{d}" + (f"^{m}" if m > 1 else "") for d, m in self.factors) or "1"


def totient(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def _units(d: int) -> list[int]:
    if d == 1:
        return [0]
    return [k for k in range(1, d) if gcd(k, d) == 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPolynomial:
    """Phi_d, obtained by dividing x^d - 1 by Phi_e for every proper divisor e."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    out = IntPolynomial([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            out, rem = out.divmod_monic(cyclotomic_poly(e))
            assert rem.is_zero()
    return out


def params_to_poly(p: ParameterVector) -> tuple[IntPolynomial, CycloProduct]:
    if not p.entries:
        raise ValueError("empty parameter vector")
    by_den: dict[int, Counter[int]] = {}
    for q in p.entries:
        by_den.setdefault(q.denominator, Counter())[q.numerator] += 1
    factors = {}
    for d, counts in sorted(by_den.items()):
        units = _units(d)
        mults = {counts.get(k, 0) for k in units}
        if len(mults) != 1 or 0 in mults:
            missing = [f"{k}/{d}" for k in units if not counts.get(k)]
            detail = f"missing {', '.join(missing)}" if missing else "unequal multiplicities"
            raise NotGaloisClosed(f"orbit of denominator {d} is not Galois closed ({detail})")
        factors[d] = mults.pop()
    prod = CycloProduct(factors)
    return prod.expand(), prod


def factor_cyclotomic(f: IntPolynomial) -> CycloProduct:
    if not f.is_monic():
        raise NotCyclotomicProduct(f"{f} is not monic")
    n = f.degree
    rest = f
    factors: dict[int, int] = {}
    # phi(d) >= sqrt(d/2), so every d with phi(d) <= n lies below this bound
    for d in range(1, 2 * n * n + 3):
        if rest.degree == 0:
            break
        phi = cyclotomic_poly(d)
        if phi.degree > rest.degree:
            continue
        while True:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            factors[d] = factors.get(d, 0) + 1
    if rest.degree != 0:
        raise NotCyclotomicProduct(f"{f} has a non-cyclotomic factor {rest}")
    return CycloProduct(factors)


def poly_to_params(f: IntPolynomial) -> ParameterVector:
    return factor_cyclotomic(f).parameters()


def is_self_reciprocal(f: IntPolynomial) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    r = f.reciprocal()
    return r == f or r == -f


def is_primitive_pair(f: IntPolynomial, g: IntPolynomial) -> bool:
    support = [i for i, c in enumerate(f.coeffs) if c] + [i for i, c in enumerate(g.coeffs) if c]
    top = max(f.degree, g.degree)
    return not any(all(i % k == 0 for i in support) for k in range(2, top + 1))


def have_common_root(f: IntPolynomial, g: IntPolynomial) -> bool:
    return len(poly_gcd(f, g)) > 1


def roots_interlace(alpha: ParameterVector, beta: ParameterVector) -> bool:
    if alpha.degree != beta.degree:
        raise ValueError("interlacing needs parameter vectors of equal length")
    if set(alpha.entries) & set(beta.entries):
        raise SharedEntry("alpha and beta share an entry")
    merged = sorted([(q, 0) for q in alpha.entries] + [(q, 1) for q in beta.entries])
    return all(merged[i][1] != merged[i + 1][1] for i in range(len(merged) - 1))


class ClosureClass(str, Enum):
    FINITE = "Finite"
    SYMPLECTIC = "Symplectic"
    ORTHOGONAL = "Orthogonal"
    OTHER = "Other"


def check_pair(f: IntPolynomial, g: IntPolynomial) -> None:
    """Raise InvalidPair unless (f, g) is a valid hypergeometric pair."""
    if f.degree != g.degree or f.degree < 1:
        raise InvalidPair("f and g must have the same positive degree")
    if not (f.is_monic() and g.is_monic()):
        raise InvalidPair("f and g must be monic")
    if have_common_root(f, g):
        raise InvalidPair("f and g have a common root")
    if not is_primitive_pair(f, g):
        raise InvalidPair("f and g are not a primitive pair")
    if not (is_self_reciprocal(f) and is_self_reciprocal(g)):
        raise InvalidPair("f and g must be self-reciprocal")


def zariski_closure_class(f: IntPolynomial, g: IntPolynomial) -> ClosureClass:
    check_pair(f, g)
    try:
        alpha, beta = poly_to_params(f), poly_to_params(g)
    except NotCyclotomicProduct as exc:
        raise InvalidPair(str(exc)) from None
    if roots_interlace(alpha, beta):
        return ClosureClass.FINITE
    f0, g0 = f.coeff(0), g.coeff(0)
    if f.degree % 2 == 0 and f0 == 1 and g0 == 1:
        return ClosureClass.SYMPLECTIC
    if f0 == -g0:
        return ClosureClass.ORTHOGONAL
    return ClosureClass.OTHER


def difference_leading_data(f: IntPolynomial, g: IntPolynomial) -> tuple[int, tuple[int, ...]]:
    """Leading coefficient of f - g and v = (a_1-b_1, ..., a_{n-1}-b_{n-1}, 0)."""
    n = f.degree
    if g.degree != n or not (f.is_monic() and g.is_monic()):
        raise ValueError("difference data needs two monic polynomials of equal degree")
    diff = f - g
    if diff.is_zero():
        raise ZeroDifference("f and g coincide")
    v = tuple(f.coeff(i) - g.coeff(i) for i in range(1, n)) + (0,)
    return diff.leading, v
