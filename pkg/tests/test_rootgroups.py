from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hgg.exactmat import RationalMatrix, is_unipotent, matrix_unit
from hgg.rootgroups import (SP6, basis_weights, character_name, classify_unipotent,
                            in_highest_root_group, in_second_highest_root_group,
                            preserves_form)

I6 = RationalMatrix.identity(6)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=7).filter(bool)
lambda_values = st.fractions(min_value=-20, max_value=20, max_denominator=4).filter(bool)


def antidiagonal(l1, l2, l3):
    rows = [[0] * 6 for _ in range(6)]
    for i, lam in enumerate((l1, l2, l3)):
        rows[i][5 - i] = lam
        rows[5 - i][i] = -lam
    return RationalMatrix(rows)


def u_highest(y):
    return I6 + matrix_unit(6, 1, 6, y)


def u_second(x, l1, l2):
    return I6 + matrix_unit(6, 1, 5, x) + matrix_unit(6, 2, 6, Fraction(l1) / Fraction(l2) * x)


def test_weights_and_names():
    assert basis_weights() == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (0, -1, 0),
                               (-1, 0, 0)]
    assert character_name((2, 0, 0)) == "t1^2"
    assert character_name((1, 1, 0)) == "t1t2"
    assert character_name((0, 0, -2)) == "t3^-2"


def test_root_supports_partition_off_diagonal():
    seen = []
    for root in SP6.roots:
        seen.extend(SP6.support(root))
    off = [(i, j) for i, j in product(range(1, 7), repeat=2) if i != j]
    assert sorted(seen) == sorted(off)
    assert SP6.support((2, 0, 0)) == [(1, 6)]
    assert SP6.support((1, 1, 0)) == [(1, 5), (2, 6)]
    assert SP6.support((-2, 0, 0)) == [(6, 1)]
    assert len(SP6.positive_roots) == 9


@given(rationals, rationals, lambda_values, lambda_values, lambda_values)
def test_root_groups_preserve_the_form_and_add(y1, y2, l1, l2, l3):
    om = antidiagonal(l1, l2, l3)
    assert preserves_form(u_highest(y1), om)
    assert preserves_form(u_second(y1, l1, l2), om)
    assert u_highest(y1) @ u_highest(y2) == u_highest(y1 + y2)
    assert u_second(y1, l1, l2) @ u_second(y2, l1, l2) == u_second(y1 + y2, l1, l2)
    assert is_unipotent(u_second(y1, l1, l2))
    assert in_highest_root_group(u_highest(y1)) == y1
    assert in_second_highest_root_group(u_second(y1, l1, l2), l1, l2) == y1


@given(rationals, lambda_values, lambda_values, lambda_values)
def test_wrong_ratio_breaks_the_form(x, l1, l2, l3):
    bad = I6 + matrix_unit(6, 1, 5, x) + matrix_unit(6, 2, 6, x * (Fraction(l1) / l2 + 1))
    assert not preserves_form(bad, antidiagonal(l1, l2, l3))
    assert in_second_highest_root_group(bad, l1, l2) is None


def test_membership_rejects_identity_and_extra_entries():
    assert in_highest_root_group(I6) is None
    assert in_highest_root_group(u_highest(3) + matrix_unit(6, 2, 5, 1)) is None
    assert in_second_highest_root_group(u_highest(3), 1, 1) is None
    with pytest.raises(ValueError):
        in_highest_root_group(RationalMatrix.identity(4))


def test_classify():
    assert classify_unipotent(I6) == "identity"
    assert classify_unipotent(u_highest(5)) == "t1^2"
    assert classify_unipotent(I6 + matrix_unit(6, 6, 1, -3)) == "t1^-2"
    assert classify_unipotent(u_second(2, 1, 1)) == "t1t2"
    assert classify_unipotent(I6 + matrix_unit(6, 4, 3, -3)) == "t3^-2"
    assert classify_unipotent(u_highest(1) @ u_second(1, 1, 1)) == "other"
