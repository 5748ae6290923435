"""Command-line front end.

Exit codes: 0 on success, 1 when verification fails or a search finds no
certificate, 2 on input errors (bad parameters, unreadable or malformed
files).  All numbers are printed exactly.
"""
from __future__ import annotations

import argparse
import sys
from functools import reduce
from math import gcd

from . import catalog as cat
from . import cyclotomic as cy
from .certify import (FIXTURE_LABELS, format_matrix, load_certificate, load_fixture,
                      save_certificate, verify_certificate)
from .errors import HggError, ParseError
from .exactmat import Convention, RationalMatrix, companion
from .hyperbolic import adapted_basis, conjugate_generators, hyperbolic_basis
from .invariant_form import form_via_linear_solve, form_via_orbit, forms_agree
from .search import Budget, adapted_generators, search_certificates, verify_hit


class Output:
    """Collects key/value records and prints them as text or TSV."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []

    def field(self, key: str, value) -> None:
        if self.fmt == "tsv":
            self.lines.append(f"{key}\t{value}")
        else:
            self.lines.append(f"{key}: {value}")

    def matrix(self, key: str, m: RationalMatrix) -> None:
        if self.fmt == "tsv":
            self.lines.append(f"{key}\t{format_matrix(m)}")
            return
        rows = [[str(q) for q in row] for row in m.rows()]
        width = max(len(s) for row in rows for s in row)
        self.lines.append(f"{key}:")
        for row in rows:
            self.lines.append("  " + " ".join(s.rjust(width) for s in row))

    def raw(self, line: str) -> None:
        self.lines.append(line)

    def flush(self) -> None:
        if self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")
        self.lines = []


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _pair(args) -> tuple[cy.ParameterVector, cy.ParameterVector]:
    return cy.ParameterVector.parse(args.alpha), cy.ParameterVector.parse(args.beta)


def _companions(args):
    alpha, beta = _pair(args)
    f, _ = cy.params_to_poly(alpha)
    g, _ = cy.params_to_poly(beta)
    return alpha, beta, f, g


def cmd_classify(args, out: Output) -> int:
    alpha, beta, f, g = _companions(args)
    out.field("alpha", alpha)
    out.field("beta", beta)
    out.field("f", f)
    out.field("g", g)
    out.field("closure", cy.zariski_closure_class(f, g).value)
    lead, v = cy.difference_leading_data(f, g)
    out.field("v", _vec(v))
    out.field("gcd_v", reduce(gcd, (abs(x) for x in v), 0))
    out.field("lead_diff", lead)
    out.field("sv_flag", str(abs(lead) <= 2).lower())
    return 0


def cmd_form(args, out: Output) -> int:
    _, _, f, g = _companions(args)
    a, b = companion(f), companion(g)
    forms = {}
    if args.method in ("orbit", "both"):
        forms["orbit"] = form_via_orbit(a, b)
    if args.method in ("solve", "both"):
        forms["solve"] = form_via_linear_solve(a, b)
    if len(forms) == 2:
        agree = forms_agree(forms["orbit"], forms["solve"])
        out.field("methods_agree", str(agree).lower())
        if not agree:
            out.flush()
            return 1
    omega = next(iter(forms.values()))
    out.matrix("omega", omega.matrix)
    return 0


def cmd_basis(args, out: Output) -> int:
    _, _, f, g = _companions(args)
    big_a, big_b = companion(f), companion(g)
    omega = form_via_orbit(big_a, big_b)
    hb = adapted_basis(big_a, big_b, omega) if args.start == "adapted" else hyperbolic_basis(omega)
    a, b, c = conjugate_generators(big_a, big_b, hb.X, omega)
    out.matrix("X", hb.X)
    out.matrix("omega2", hb.transformed_form(omega).matrix)
    out.field("lambdas", _vec(hb.lambdas))
    out.matrix("a", a)
    out.matrix("b", b)
    out.matrix("c", c)
    return 0


def cmd_verify(args, out: Output) -> int:
    if args.fixture:
        cert = load_fixture(args.fixture)
    elif args.certfile:
        cert = load_certificate(args.certfile)
    else:
        raise ParseError("give a certificate file or --fixture")
    rep = verify_certificate(cert)
    for line in rep.lines():
        key, _, rest = line.partition("\t")
        out.raw(line if out.fmt == "tsv" or not rest else f"{key}: {rest.replace(chr(9), ' ')}")
    return 0 if rep.certified else 1


def cmd_search(args, out: Output) -> int:
    alpha, beta = _pair(args)
    a, b, c, hb = adapted_generators(alpha, beta)
    budget = Budget(args.max_depth, args.max_entry_bits, args.max_nodes)
    res = search_certificates(a, b, c, hb.lambdas[0], hb.lambdas[1], budget,
                              Convention.parse(args.convention), args.jobs, alpha, beta, hb.X)
    out.field("lambdas", _vec(hb.lambdas))
    out.field("nodes", res.nodes)
    out.field("depth_reached", res.depth_reached)
    conv = Convention.parse(args.convention)
    for name, hit in (("q1", res.highest), ("q2", res.second)):
        if hit is None:
            out.field(name, "none")
            continue
        ok = verify_hit(hit, alpha, beta, hb.X, name, conv)
        out.field(name, f"{hit.word}\t{hit.value}\t{'verified' if ok else 'NOT-VERIFIED'}"
                  if out.fmt == "tsv" else f"{hit.word} (value {hit.value}, "
                  f"{'verified' if ok else 'NOT verified'})")
    if res.certificate is None:
        out.raw("no certificate within budget")
        return 1
    rep = verify_certificate(res.certificate)
    out.raw(rep.summary_line())
    if args.out:
        save_certificate(res.certificate, args.out)
    return 0 if rep.certified else 1


def cmd_catalog_build(args, out: Output) -> int:
    catalog = cat.enumerate_pairs(args.degree, args.jobs)
    cat.save_catalog(catalog, args.out)
    out.field("raw_ordered_pairs", catalog.raw_count)
    out.field("classes", len(catalog.entries))
    out.field("written", args.out)
    return 0


def cmd_catalog_report(args, out: Output) -> int:
    catalog = cat.load_catalog(args.file)
    ann = cat.read_annotations(args.annotations) if args.annotations else {}
    catalog = cat.annotate_status(catalog, ann)
    for line in cat.counts(catalog).lines():
        key, _, rest = line.partition("\t")
        out.raw(line if out.fmt == "tsv" else f"{key}: {rest.replace(chr(9), ' ')}")
    return 0


def _add_pair(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", required=True, help="comma-separated parameters, e.g. 0,0,1/2,1/2")
    p.add_argument("--beta", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgg", description="Exact toolkit for Sp(6) "
                                     "hypergeometric groups.")
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="closure class, v, gcd(v), leading coefficient")
    _add_pair(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("form", help="canonical invariant form in the standard basis")
    _add_pair(p)
    p.add_argument("--method", choices=("orbit", "solve", "both"), default="both")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("basis", help="hyperbolic basis and conjugated generators")
    _add_pair(p)
    p.add_argument("--start", choices=("standard", "adapted"), default="standard",
                   help="greedy from the standard basis, or starting at the axis of A^-1 B")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="verify a certificate file or a shipped fixture")
    p.add_argument("certfile", nargs="?")
    p.add_argument("--fixture", choices=FIXTURE_LABELS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="bounded word search in the adapted basis")
    _add_pair(p)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--max-entry-bits", type=int, default=512)
    p.add_argument("--max-nodes", type=int, default=20000)
    p.add_argument("--convention", default="xyXY", help="xyXY or XYxy")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the certificate here when one is found")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="degree-6 catalog")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    b = csub.add_parser("build")
    b.add_argument("--degree", type=int, default=6)
    b.add_argument("--out", required=True)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_catalog_build)
    r = csub.add_parser("report")
    r.add_argument("file")
    r.add_argument("--annotations")
    r.set_defaults(func=cmd_catalog_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except ParseError as exc:
        print(f"hgg: ParseError: {exc}", file=sys.stderr)
        return 2
    except (HggError, ValueError, OSError) as exc:
        print(f"hgg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
