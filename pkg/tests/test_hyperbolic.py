import pytest

from hgg.errors import Degenerate, InvarianceFailed
from hgg.exactmat import RationalMatrix, matrix_unit
from hgg.hyperbolic import (adapted_basis, conjugate_generators, hyperbolic_basis,
                            transvection_axis, verify_antidiagonal)
from hgg.invariant_form import BasisTag, SymplecticForm, form_via_orbit, toeplitz_skew
from hgg.rootgroups import in_highest_root_group
from printed_data import CASES


@pytest.mark.parametrize("label", list(CASES))
def test_printed_basis_reproduces_printed_form_and_generators(label):
    d = CASES[label]
    omega = SymplecticForm(d["omega1"])
    lambdas = verify_antidiagonal(d["X"], omega)
    assert [str(q) for q in lambdas] == list(d["lambdas"])
    assert d["X"].transpose() @ d["omega1"] @ d["X"] == d["omega2"]
    a, b, c = conjugate_generators(d["A"], d["B"], d["X"], omega)
    assert (a, b, c) == (d["a"], d["b"], d["c"])


@pytest.mark.parametrize("label", list(CASES))
def test_greedy_basis_is_hyperbolic(label):
    d = CASES[label]
    omega = form_via_orbit(d["A"], d["B"])
    hb = hyperbolic_basis(omega)
    assert hb.X.det() != 0
    assert verify_antidiagonal(hb.X, omega) == hb.lambdas
    g = hb.transformed_form(omega)
    assert g.basis is BasisTag.HYPERBOLIC
    assert all(g.matrix[i, 5 - i] == hb.lambdas[i] for i in range(3))


@pytest.mark.parametrize("label", list(CASES))
def test_adapted_basis_puts_c_in_highest_root_group(label):
    d = CASES[label]
    omega = form_via_orbit(d["A"], d["B"])
    hb = adapted_basis(d["A"], d["B"], omega)
    _, _, c = conjugate_generators(d["A"], d["B"], hb.X, omega)
    assert in_highest_root_group(c) is not None


def test_transvection_axis():
    t = RationalMatrix.identity(4) + matrix_unit(4, 1, 3, 2) + matrix_unit(4, 2, 3, 4)
    assert transvection_axis(t) == [1, 2, 0, 0]
    assert transvection_axis(RationalMatrix.identity(4)) is None
    two = RationalMatrix.identity(4) + matrix_unit(4, 1, 2, 1) + matrix_unit(4, 3, 4, 1)
    assert transvection_axis(two) is None


def test_degenerate_forms_rejected():
    with pytest.raises(Degenerate):
        hyperbolic_basis(SymplecticForm(toeplitz_skew([0, 0, 0, 0, 1]).scale(0)))
    with pytest.raises(Degenerate):
        hyperbolic_basis(SymplecticForm(toeplitz_skew([1, 0])))  # odd dimension


def test_non_antidiagonal_is_rejected():
    omega = SymplecticForm(CASES["C-1"]["omega1"])
    assert verify_antidiagonal(RationalMatrix.identity(6), omega) is None


def test_conjugation_checks_invariance():
    d = CASES["C-1"]
    with pytest.raises(InvarianceFailed):
        conjugate_generators(d["A"], d["B"], d["X"], SymplecticForm(toeplitz_skew([1, 0, 0, 0, 0])))
