"""Arithmeticity certificates and their end-to-end verification.

A certificate names a parameter pair, optionally a change of basis X, a
commutator convention and a word program over the conjugated generators
a, b, c returning (q1, q2).  Verification rebuilds everything from the
parameters and accepts when q1 is a nontrivial element of the highest root
group and q2 of the second highest one.  Zariski density is not re-checked:
it is inherited from the symplectic classification of the pair.

Certificate file format (UTF-8, ``#`` starts a comment)::

    label: C-59
    alpha: 0,0,1/12,5/12,7/12,11/12
    beta: 1/3,2/3,1/4,3/4,1/4,3/4
    convention: xyXY
    X: -3,0,0,0,0,0; -3,0,0,0,-6,-3; ...      (optional, rows split by ';')
    begin program
    let w1 = comm(a, b);
    ...
    return c, w3^180 w5
    end program
    expect q1: 1,0,0,0,0,-3; ...              (optional)
    expect q2: ...                            (optional)
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from . import cyclotomic as cy
from .errors import HggError, ParseError
from .exactmat import Convention, RationalMatrix, companion
from .hyperbolic import conjugate_generators, hyperbolic_basis, verify_antidiagonal
from .invariant_form import (SymplecticForm, form_via_linear_solve, form_via_orbit,
                             forms_agree)
from .rootgroups import (in_highest_root_group, in_second_highest_root_group,
                         preserves_form)
from .words import WordProgram, evaluate_word, parse_program

FIXTURE_LABELS = ("C-1", "C-10", "C-42", "C-59")


@dataclass(frozen=True)
class Certificate:
    label: str
    alpha: cy.ParameterVector
    beta: cy.ParameterVector
    convention: Convention
    program: WordProgram
    basis_matrix: RationalMatrix | None = None
    expected_q1: RationalMatrix | None = None
    expected_q2: RationalMatrix | None = None


class Stage(str, Enum):
    PAIR = "pair"
    CLASS = "class"
    FORM = "form"
    BASIS = "basis"
    GENERATORS = "generators"
    PROGRAM = "program"
    Q1 = "q1-membership"
    Q2 = "q2-membership"
    PRESERVED = "forms-preserved"
    EXPECTED = "expected-matrices"


@dataclass
class VerificationReport:
    label: str
    stages: dict[str, bool] = field(default_factory=dict)
    failed_stage: Stage | None = None
    detail: str = ""
    y: Fraction | None = None
    x: Fraction | None = None
    lambdas: tuple[Fraction, ...] | None = None
    omega: RationalMatrix | None = None
    basis: RationalMatrix | None = None
    q1: RationalMatrix | None = None
    q2: RationalMatrix | None = None
    closure: str | None = None

    @property
    def certified(self) -> bool:
        return self.failed_stage is None and all(self.stages.values())

    @property
    def conclusion(self) -> str:
        if self.certified:
            return "ArithmeticCertified"
        return f"Failed({self.failed_stage.value if self.failed_stage else 'unknown'})"

    def lambda_ratio(self) -> Fraction | None:
        if not self.lambdas:
            return None
        return self.lambdas[0] / self.lambdas[1]

    def summary_line(self) -> str:
        if self.certified:
            return f"{self.conclusion}; y={self.y}, x={self.x}"
        return f"{self.conclusion}: {self.detail}" if self.detail else self.conclusion

    def lines(self) -> list[str]:
        out = [f"label\t{self.label}"]
        if self.closure:
            out.append(f"closure\t{self.closure}")
        for name, ok in self.stages.items():
            out.append(f"stage\t{name}\t{'pass' if ok else 'FAIL'}")
        if self.lambdas:
            out.append("lambdas\t" + ",".join(str(q) for q in self.lambdas))
            out.append(f"lambda_ratio\t{self.lambda_ratio()}")
        if self.y is not None:
            out.append(f"y\t{self.y}")
        if self.x is not None:
            out.append(f"x\t{self.x}")
        out.append("zariski_density\tinherited from the Symplectic closure class")
        out.append(self.summary_line())
        return out


def _fail(report: VerificationReport, stage: Stage, detail: str) -> VerificationReport:
    report.stages[stage.value] = False
    report.failed_stage = stage
    report.detail = detail
    return report


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Run the full pipeline; every failure is reported, never raised."""
    rep = VerificationReport(cert.label)
    try:
        f, _ = cy.params_to_poly(cert.alpha)
        g, _ = cy.params_to_poly(cert.beta)
        cls = cy.zariski_closure_class(f, g)
    except (HggError, ValueError) as exc:
        return _fail(rep, Stage.PAIR, str(exc))
    rep.stages[Stage.PAIR.value] = True
    rep.closure = cls.value
    if cls is not cy.ClosureClass.SYMPLECTIC or f.degree != 6:
        return _fail(rep, Stage.CLASS, f"closure class is {cls.value} in degree {f.degree}")
    rep.stages[Stage.CLASS.value] = True

    a_std, b_std = companion(f), companion(g)
    try:
        om_orbit = form_via_orbit(a_std, b_std)
        om_solve = form_via_linear_solve(a_std, b_std)
    except HggError as exc:
        return _fail(rep, Stage.FORM, str(exc))
    if not forms_agree(om_orbit, om_solve):
        return _fail(rep, Stage.FORM, "orbit and linear-solve forms disagree")
    rep.stages[Stage.FORM.value] = True
    rep.omega = om_orbit.matrix

    try:
        if cert.basis_matrix is not None:
            x_mat = cert.basis_matrix
            lambdas = verify_antidiagonal(x_mat, om_orbit)
            if lambdas is None:
                return _fail(rep, Stage.BASIS, "X does not anti-diagonalize the form")
        else:
            hb = hyperbolic_basis(om_orbit)
            x_mat, lambdas = hb.X, hb.lambdas
    except HggError as exc:
        return _fail(rep, Stage.BASIS, str(exc))
    rep.stages[Stage.BASIS.value] = True
    rep.basis, rep.lambdas = x_mat, lambdas
    omega2 = x_mat.transpose() @ om_orbit.matrix @ x_mat

    try:
        a, b, c = conjugate_generators(a_std, b_std, x_mat, om_orbit)
    except HggError as exc:
        return _fail(rep, Stage.GENERATORS, str(exc))
    rep.stages[Stage.GENERATORS.value] = True

    try:
        results = evaluate_word(cert.program, {"a": a, "b": b, "c": c}, cert.convention)
    except (HggError, ValueError) as exc:
        return _fail(rep, Stage.PROGRAM, f"{type(exc).__name__}: {exc}")
    rep.stages[Stage.PROGRAM.value] = True
    q1 = results[0]
    q2 = results[1] if len(results) > 1 else None
    rep.q1, rep.q2 = q1, q2

    rep.y = in_highest_root_group(q1)
    if rep.y is None:
        return _fail(rep, Stage.Q1, "q1 is not a nontrivial element of U_{t1^2}")
    rep.stages[Stage.Q1.value] = True
    if q2 is None:
        return _fail(rep, Stage.Q2, "program returns no q2")
    rep.x = in_second_highest_root_group(q2, lambdas[0], lambdas[1])
    if rep.x is None:
        return _fail(rep, Stage.Q2, "q2 is not a nontrivial element of U_{t1 t2}")
    rep.stages[Stage.Q2.value] = True

    if not (preserves_form(q1, omega2) and preserves_form(q2, omega2)):
        return _fail(rep, Stage.PRESERVED, "q1 or q2 does not preserve the anti-diagonal form")
    rep.stages[Stage.PRESERVED.value] = True

    if cert.expected_q1 is not None or cert.expected_q2 is not None:
        if cert.expected_q1 is not None and q1 != cert.expected_q1:
            return _fail(rep, Stage.EXPECTED, "q1 differs from the expected matrix")
        if cert.expected_q2 is not None and q2 != cert.expected_q2:
            return _fail(rep, Stage.EXPECTED, "q2 differs from the expected matrix")
        rep.stages[Stage.EXPECTED.value] = True
    return rep


# -- file format ---------------------------------------------------------

def format_matrix(m: RationalMatrix) -> str:
    return "; ".join(",".join(str(q) for q in row) for row in m.rows())


def parse_matrix(text: str, line: int | None = None) -> RationalMatrix:
    try:
        rows = [[Fraction(t.strip()) for t in r.split(",")] for r in text.split(";") if r.strip()]
        return RationalMatrix(rows)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix: {exc}", line, None) from None


def dumps_certificate(cert: Certificate) -> str:
    out = [f"label: {cert.label}", f"alpha: {cert.alpha}", f"beta: {cert.beta}",
           f"convention: {cert.convention.value}"]
    if cert.basis_matrix is not None:
        out.append(f"X: {format_matrix(cert.basis_matrix)}")
    out.append("begin program")
    out.append(cert.program.to_text())
    out.append("end program")
    if cert.expected_q1 is not None:
        out.append(f"expect q1: {format_matrix(cert.expected_q1)}")
    if cert.expected_q2 is not None:
        out.append(f"expect q2: {format_matrix(cert.expected_q2)}")
    return "\n".join(out) + "\n"


def loads_certificate(text: str) -> Certificate:
    fields: dict[str, tuple[str, int]] = {}
    program_lines: list[str] = []
    program_start = None
    in_program = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if in_program:
            if stripped == "end program":
                in_program = False
            else:
                program_lines.append(line)
            continue
        if not stripped:
            continue
        if stripped == "begin program":
            if program_start is not None:
                raise ParseError("duplicate program block", lineno, 1)
            in_program, program_start = True, lineno + 1
            continue
        key, sep, value = stripped.partition(":")
        key = " ".join(key.split())
        if not sep or key not in ("label", "alpha", "beta", "convention", "X",
                                  "expect q1", "expect q2"):
            raise ParseError(f"unrecognised line {stripped!r}", lineno, 1)
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", lineno, 1)
        fields[key] = (value.strip(), lineno)
    if in_program:
        raise ParseError("program block is not closed with 'end program'", program_start, 1)
    for key in ("label", "alpha", "beta", "convention"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}", 1, 1)
    if program_start is None:
        raise ParseError("missing 'begin program' block", 1, 1)

    def params(key):
        value, lineno = fields[key]
        try:
            return cy.ParameterVector.parse(value)
        except ValueError as exc:
            raise ParseError(str(exc), lineno, 1) from None

    conv_text, conv_line = fields["convention"]
    try:
        conv = Convention.parse(conv_text)
    except ValueError as exc:
        raise ParseError(str(exc), conv_line, 1) from None
    program = parse_program("\n".join(program_lines), first_line=program_start)

    def matrix(key):
        if key not in fields:
            return None
        value, lineno = fields[key]
        return parse_matrix(value, lineno)

    return Certificate(
        label=fields["label"][0], alpha=params("alpha"), beta=params("beta"), convention=conv,
        program=program, basis_matrix=matrix("X"),
        expected_q1=matrix("expect q1"), expected_q2=matrix("expect q2"))


def save_certificate(cert: Certificate, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps_certificate(cert), encoding="utf-8")


def load_certificate(path: str | os.PathLike) -> Certificate:
    return loads_certificate(Path(path).read_text(encoding="utf-8"))


def fixture_dir() -> Path:
    env = os.environ.get("HGG_FIXTURE_DIR")
    return Path(env) if env else Path(__file__).with_name("fixtures")


def load_fixture(label: str) -> Certificate:
    if label not in FIXTURE_LABELS:
        raise KeyError(f"unknown fixture {label!r}; choose from {', '.join(FIXTURE_LABELS)}")
    return load_certificate(fixture_dir() / f"{label}.cert")


def builtin_fixtures() -> list[Certificate]:
    return [load_fixture(label) for label in FIXTURE_LABELS]
