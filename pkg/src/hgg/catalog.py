"""Enumeration of symplectic hypergeometric pairs with cyclotomic f, g.

Pairs are enumerated over factorizations (never raw coefficients), filtered
to valid non-interlacing pairs with f(0) = g(0) = 1, and grouped into
equivalence classes generated by

* scalar shifts (alpha, beta) -> (alpha + r, beta + r) mod 1, for r with
  denominator dividing the lcm of all parameter denominators, whenever the
  image is again a catalog pair, and
* the swap (f, g) -> (g, f), which generates the same group.

Classes are the connected components of these moves (union-find), so the
grouping does not depend on enumeration order.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from pathlib import Path

from . import cyclotomic as cy
from .errors import ParseError, UnknownLabel
from .polynomial import IntPolynomial

STATUSES = ("arithmetic-SV", "arithmetic-BDSS", "arithmetic-BDN", "arithmetic-this-paper",
            "thin", "open")

# (label, alpha, beta, v) rows of the two published tables
TABLE_ROWS = (
    ("C-1", "0,0,0,0,1/2,1/2", "1/3,1/3,2/3,2/3,1/6,5/6", (-3, -3, 3, -3, -3, 0)),
    ("C-10", "0,0,0,0,1/3,2/3", "1/9,2/9,4/9,5/9,7/9,8/9", (-3, 3, -3, 3, -3, 0)),
    ("C-42", "0,0,1/4,1/4,3/4,3/4", "1/3,2/3,1/12,5/12,7/12,11/12", (-3, 3, -3, 3, -3, 0)),
    ("C-59", "0,0,1/12,5/12,7/12,11/12", "1/3,2/3,1/4,3/4,1/4,3/4", (-3, -3, 0, -3, -3, 0)),
    ("A-15", "0,0,0,0,0,0", "1/3,1/3,1/3,2/3,2/3,2/3", (-9, 9, -27, 9, -9, 0)),
    ("A-16", "0,0,0,0,0,0", "1/3,1/3,2/3,2/3,1/4,3/4", (-8, 11, -24, 11, -8, 0)),
    ("A-21", "0,0,0,0,0,0", "1/3,2/3,1/5,2/5,3/5,4/5", (-8, 12, -23, 12, -8, 0)),
    ("C-9", "0,0,0,0,1/3,2/3", "1/7,2/7,3/7,4/7,5/7,6/7", (-4, 2, -3, 2, -4, 0)),
    ("C-31", "0,0,0,0,1/6,5/6", "1/3,2/3,1/5,2/5,3/5,4/5", (-7, 8, -17, 8, -7, 0)),
    ("C-32", "0,0,0,0,1/6,5/6", "1/4,3/4,1/12,5/12,7/12,11/12", (-5, 11, -14, 11, -5, 0)),
    ("C-47", "0,0,1/5,2/5,3/5,4/5", "1/2,1/2,1/3,1/3,2/3,2/3", (-5, -8, -10, -8, -5, 0)),
    ("C-51", "0,0,1/6,1/6,5/6,5/6", "1/2,1/2,1/12,5/12,7/12,11/12", (-6, 8, -8, 8, -6, 0)),
    ("C-55", "0,0,1/8,3/8,5/8,7/8", "1/2,1/2,1/12,5/12,7/12,11/12", (-4, 1, 2, 1, -4, 0)),
    ("C-60", "1/3,1/3,1/3,2/3,2/3,2/3", "1/6,1/6,1/6,5/6,5/6,5/6", (6, 0, 14, 0, 6, 0)),
    ("C-61", "1/3,1/3,1/3,2/3,2/3,2/3", "1/9,2/9,4/9,5/9,7/9,8/9", (3, 6, 6, 6, 3, 0)),
)
ARITHMETIC_TABLE = ("C-1", "C-10", "C-42", "C-59")
OPEN_TABLE = tuple(r[0] for r in TABLE_ROWS if r[0] not in ARITHMETIC_TABLE)
# labels listed in print as obstructed by gcd(v) > 2
LISTED_PROP1_LABELS = ("A-1", "C-1", "C-10", "C-42", "C-59", "C-61")

Key = tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    alpha: cy.ParameterVector
    beta: cy.ParameterVector
    f: IntPolynomial
    g: IntPolynomial
    closure: cy.ClosureClass
    v: tuple[int, ...]
    gcd_v: int
    lead_diff: int
    sv_flag: bool
    prop1_obstructed: bool
    shift_class_id: str
    status: str = ""

    @property
    def key(self) -> Key:
        return (self.alpha.entries, self.beta.entries)


def make_entry(alpha: cy.ParameterVector, beta: cy.ParameterVector, label: str = "",
               class_id: str = "", status: str = "") -> CatalogEntry:
    f, _ = cy.params_to_poly(alpha)
    g, _ = cy.params_to_poly(beta)
    lead, v = cy.difference_leading_data(f, g)
    gv = reduce(gcd, (abs(x) for x in v), 0)
    return CatalogEntry(
        label=label, alpha=alpha, beta=beta, f=f, g=g,
        closure=cy.zariski_closure_class(f, g), v=v, gcd_v=gv, lead_diff=lead,
        sv_flag=abs(lead) <= 2, prop1_obstructed=gv > 2,
        shift_class_id=class_id or key_string((alpha.entries, beta.entries)), status=status)


def key_string(key: Key) -> str:
    return ",".join(map(str, key[0])) + "|" + ",".join(map(str, key[1]))


# -- enumeration ---------------------------------------------------------

def cyclotomic_indices(degree: int) -> list[int]:
    # phi(d) >= sqrt(d/2) bounds the search
    return [d for d in range(1, 2 * degree * degree + 3) if cy.totient(d) <= degree]


def factorizations(degree: int) -> list[cy.CycloProduct]:
    """All cyclotomic products of the given degree with even multiplicity of Phi_1."""
    ds = cyclotomic_indices(degree)

    def rec(deg, i):
        if deg == 0:
            yield {}
            return
        if i == len(ds):
            return
        d, phi = ds[i], cy.totient(ds[i])
        for m in range(deg // phi + 1):
            for rest in rec(deg - m * phi, i + 1):
                yield {d: m, **rest} if m else rest

    return [cy.CycloProduct(fac) for fac in rec(degree, 0) if fac.get(1, 0) % 2 == 0]


def _pairs_for(args) -> list[Key]:
    fac_f, all_facs = args
    f = fac_f.expand()
    alpha = fac_f.parameters()
    out = []
    for fac_g in all_facs:
        if set(fac_f.as_dict()) & set(fac_g.as_dict()):
            continue  # common cyclotomic factor, also rules out f == g
        g = fac_g.expand()
        if not cy.is_primitive_pair(f, g):
            continue
        beta = fac_g.parameters()
        if cy.roots_interlace(alpha, beta):
            continue
        out.append((alpha.entries, beta.entries))
    return out


def enumerate_raw(degree: int = 6, jobs: int = 1) -> list[Key]:
    """Ordered (alpha, beta) pairs of the symplectic class, before any identification."""
    if degree % 2:
        raise ValueError("symplectic pairs need even degree")
    facs = factorizations(degree)
    tasks = [(fac, facs) for fac in facs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_pairs_for, tasks))
    else:
        chunks = [_pairs_for(t) for t in tasks]
    return sorted(itertools.chain.from_iterable(chunks))


def shift_images(key: Key) -> list[Key]:
    """Images of key under every nonzero shift r with denominator dividing the lcm."""
    den = 1
    for q in key[0] + key[1]:
        den = lcm(den, q.denominator)
    nums = [[q.numerator * (den // q.denominator) for q in side] for side in key]
    return [tuple(tuple(Fraction(x, den) for x in sorted((x + k) % den for x in side))
                  for side in nums) for k in range(1, den)]


def equivalence_classes(raw: list[Key], swap: bool = True) -> dict[Key, list[Key]]:
    """Map each class representative (lexicographic minimum) to its sorted members."""
    # work with integer numerators over one common denominator; hashing
    # Fractions dominates the run time otherwise
    big = 1
    for k in raw:
        for q in k[0] + k[1]:
            big = lcm(big, q.denominator)
    ikeys = [tuple(tuple(int(q * big) for q in side) for side in k) for k in raw]
    members = set(ikeys)
    values = {x for k in ikeys for x in k[0]}
    parent = {k: k for k in ikeys}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for key, ik in zip(raw, ikeys):
        den = 1
        for q in key[0] + key[1]:
            den = lcm(den, q.denominator)
        step = big // den
        for t in values:
            shift = (t - ik[0][0]) % big
            if not shift or shift % step:
                continue
            img = tuple(tuple(sorted((x + shift) % big for x in side)) for side in ik)
            if img in members:
                union(ik, img)
        if swap and (ik[1], ik[0]) in members:
            union(ik, (ik[1], ik[0]))
    back = dict(zip(ikeys, raw))
    classes: dict[Key, list[Key]] = {}
    for ik in ikeys:
        classes.setdefault(find(ik), []).append(back[ik])
    return {min(v): sorted(v) for v in classes.values()}


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    raw_count: int = 0
    ordered_classes_without_swap: int = 0

    def by_label(self) -> dict[str, CatalogEntry]:
        return {e.label: e for e in self.entries}

    def find_class(self, alpha: cy.ParameterVector, beta: cy.ParameterVector) -> CatalogEntry | None:
        """Catalog entry whose class contains (alpha, beta)."""
        probe = (alpha.entries, beta.entries)
        cands = {probe, (probe[1], probe[0])}
        for k in list(cands):
            cands.update(shift_images(k))
        ids = {key_string(k) for k in cands}
        for e in self.entries:
            if e.shift_class_id in ids or key_string(e.key) in ids:
                return e
        return None


def enumerate_pairs(degree: int = 6, jobs: int = 1) -> Catalog:
    raw = enumerate_raw(degree, jobs)
    classes = equivalence_classes(raw)
    no_swap = len(equivalence_classes(raw, swap=False))
    labelled: dict[Key, tuple[str, Key]] = {}
    for label, a, b, _ in TABLE_ROWS:
        k = (cy.ParameterVector.parse(a).entries, cy.ParameterVector.parse(b).entries)
        for rep, mem in classes.items():
            if k in mem:
                labelled[rep] = (label, k)
    entries = []
    serial = 0
    for rep in sorted(classes):
        if rep in labelled:
            label, k = labelled[rep]
        else:
            serial += 1
            label, k = f"H-{serial:03d}", rep
        entries.append(make_entry(cy.ParameterVector(k[0]), cy.ParameterVector(k[1]),
                                  label, key_string(rep)))
    return Catalog(entries, raw_count=len(raw), ordered_classes_without_swap=no_swap)


# -- summaries -----------------------------------------------------------

@dataclass
class CatalogSummary:
    raw_count: int
    total: int
    sv_count: int
    prop1_count: int
    prop1_labels: list[str]
    prop1_table_labels: list[str]
    table_rows: list[tuple[str, bool, tuple[int, ...]]]
    status_counts: dict[str, int]

    def lines(self) -> list[str]:
        out = [f"raw_ordered_pairs\t{self.raw_count}", f"classes\t{self.total}",
               f"sv_flag\t{self.sv_count}", f"prop1_obstructed\t{self.prop1_count}",
               "prop1_labels\t" + ",".join(self.prop1_labels),
               f"prop1_table_rows\t{len(self.prop1_table_labels)}\t" +
               ",".join(self.prop1_table_labels)]
        listed_set = set(LISTED_PROP1_LABELS)
        got = set(self.prop1_table_labels)
        if got != listed_set:
            out.append("prop1_discrepancy\tcomputed-not-listed=" +
                       ",".join(sorted(got - listed_set)) + " listed-not-computed=" +
                       ",".join(sorted(listed_set - got)))
        for label, ok, v in self.table_rows:
            out.append(f"table_row\t{label}\t{'match' if ok else 'MISMATCH'}\t" +
                       ",".join(map(str, v)))
        for st, n in sorted(self.status_counts.items()):
            out.append(f"status\t{st}\t{n}")
        return out


def counts(catalog: Catalog) -> CatalogSummary:
    rows = []
    for label, a, b, v in TABLE_ROWS:
        alpha, beta = cy.ParameterVector.parse(a), cy.ParameterVector.parse(b)
        entry = catalog.find_class(alpha, beta)
        f, _ = cy.params_to_poly(alpha)
        g, _ = cy.params_to_poly(beta)
        _, computed = cy.difference_leading_data(f, g)
        ok = entry is not None and computed == v and entry.label == label and entry.v == v
        rows.append((label, ok, computed))
    status_counts: dict[str, int] = {}
    for e in catalog.entries:
        if e.status:
            status_counts[e.status] = status_counts.get(e.status, 0) + 1
    prop1 = [e for e in catalog.entries if e.prop1_obstructed]
    return CatalogSummary(
        raw_count=catalog.raw_count, total=len(catalog.entries),
        sv_count=sum(e.sv_flag for e in catalog.entries), prop1_count=len(prop1),
        prop1_labels=sorted(e.label for e in prop1),
        prop1_table_labels=[r[0] for r in TABLE_ROWS
                            if any(e.label == r[0] for e in prop1)],
        table_rows=rows,
        status_counts=status_counts)


# -- status annotation -----------------------------------------------------

def read_annotations(path: str | os.PathLike) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1].strip() not in STATUSES:
            raise ParseError(f"expected 'label<TAB>status' with status in {', '.join(STATUSES)}",
                             lineno, 1)
        out[parts[0].strip()] = parts[1].strip()
    return out


def default_annotations_path() -> Path:
    return Path(__file__).with_name("data") / "status.tsv"


def certified_labels() -> set[str]:
    """Labels whose shipped certificates verify end to end."""
    from .certify import fixture_dir, load_certificate, verify_certificate
    labels = set()
    for path in sorted(fixture_dir().glob("*.cert")):
        cert = load_certificate(path)
        if verify_certificate(cert).certified:
            labels.add(cert.label)
    return labels


def annotate_status(catalog: Catalog, external: dict[str, str] | None = None,
                    certified: set[str] | None = None) -> Catalog:
    """SV and certified statuses are computed; every other status is ingested as given."""
    labels = catalog.by_label()
    external = external or {}
    unknown = sorted(set(external) - set(labels))
    if unknown:
        raise UnknownLabel(f"labels not in the catalog: {', '.join(unknown)}")
    if certified is None:
        certified = certified_labels()
    out = []
    for e in catalog.entries:
        if e.sv_flag:
            status = "arithmetic-SV"
        elif e.label in certified:
            status = "arithmetic-this-paper"
        else:
            status = external.get(e.label, "")
        out.append(replace(e, status=status))
    return Catalog(out, catalog.raw_count, catalog.ordered_classes_without_swap)


# -- persistence -----------------------------------------------------------

HEADER = "#label\talpha\tbeta\tf\tg\tv\tgcd_v\tlead_diff\tflags\tstatus"


def _flags(e: CatalogEntry) -> str:
    flags = [name for name, on in (("sv", e.sv_flag), ("prop1", e.prop1_obstructed)) if on]
    return ",".join(flags) or "-"


def dumps_catalog(catalog: Catalog) -> str:
    lines = [HEADER, f"#raw_ordered_pairs\t{catalog.raw_count}"]
    for e in catalog.entries:
        lines.append("\t".join([
            e.label or "-", str(e.alpha), str(e.beta), e.f.coeff_list(), e.g.coeff_list(),
            ",".join(map(str, e.v)), str(e.gcd_v), str(e.lead_diff), _flags(e), e.status or "-"]))
    return "\n".join(lines) + "\n"


def loads_catalog(text: str) -> Catalog:
    entries, raw_count = [], 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#raw_ordered_pairs\t"):
            raw_count = int(line.split("\t")[1])
            continue
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 10:
            raise ParseError(f"expected 10 tab-separated fields, got {len(parts)}", lineno, 1)
        label, a, b, fc, gc, v, gv, lead, flags, status = parts
        try:
            alpha, beta = cy.ParameterVector.parse(a), cy.ParameterVector.parse(b)
            e = make_entry(alpha, beta, "" if label == "-" else label,
                           status="" if status == "-" else status)
        except Exception as exc:
            raise ParseError(f"bad catalog row: {exc}", lineno, 1) from None
        stored = (IntPolynomial.parse_coeff_list(fc), IntPolynomial.parse_coeff_list(gc),
                  tuple(int(x) for x in v.split(",")), int(gv), int(lead), flags)
        if stored != (e.f, e.g, e.v, e.gcd_v, e.lead_diff, _flags(e)):
            raise ParseError("stored fields are inconsistent with alpha/beta", lineno, 1)
        entries.append(e)
    return Catalog(entries, raw_count=raw_count)


def save_catalog(catalog: Catalog, path: str | os.PathLike) -> None:
    Path(path).write_text(dumps_catalog(catalog), encoding="utf-8")


def load_catalog(path: str | os.PathLike) -> Catalog:
    return loads_catalog(Path(path).read_text(encoding="utf-8"))
