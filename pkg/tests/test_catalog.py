import random

import pytest

from hgg import catalog as cat
from hgg import cyclotomic as cy
from hgg.errors import ParseError, UnknownLabel
from hgg.exactmat import companion


@pytest.fixture(scope="module")
def catalog():
    return cat.enumerate_pairs(6)


@pytest.fixture(scope="module")
def raw():
    return cat.enumerate_raw(6)


def test_counts(catalog):
    s = cat.counts(catalog)
    assert (s.raw_count, s.total, s.sv_count) == (1812, 458, 211)
    assert all(ok for _, ok, _ in s.table_rows)
    assert len(s.table_rows) == 15


def test_gcd_obstruction_among_table_rows(catalog):
    s = cat.counts(catalog)
    assert s.prop1_table_labels == ["C-1", "C-10", "C-42", "C-59", "A-15", "C-61"]
    labels = catalog.by_label()
    assert labels["C-61"].gcd_v == 3 and labels["A-15"].gcd_v == 9
    assert any(line.startswith("prop1_discrepancy") and "A-1" in line for line in s.lines())


def test_table_rows_keep_printed_orientation(catalog):
    e = catalog.by_label()["C-1"]
    assert str(e.alpha) == "0,0,0,0,1/2,1/2"
    assert e.v == (-3, -3, 3, -3, -3, 0)
    assert e.prop1_obstructed and not e.sv_flag


def test_entry_invariants(catalog):
    for e in catalog.entries:
        assert e.closure is cy.ClosureClass.SYMPLECTIC
        assert e.f.coeff(0) == 1 and e.g.coeff(0) == 1
        assert cy.is_self_reciprocal(e.f) and cy.is_self_reciprocal(e.g)
        assert cy.is_primitive_pair(e.f, e.g) and not cy.have_common_root(e.f, e.g)
        c = companion(e.f).inverse() @ companion(e.g)
        last = c.column(5)
        last[5] -= 1
        assert tuple(last) == e.v and e.v[-1] == 0
        assert cy.poly_to_params(e.f) == e.alpha and cy.poly_to_params(e.g) == e.beta


def test_dedup_is_order_independent_and_idempotent(raw):
    classes = cat.equivalence_classes(raw)
    shuffled = list(raw)
    random.Random(7).shuffle(shuffled)
    assert cat.equivalence_classes(shuffled) == classes
    reps = sorted(classes)
    assert sorted(cat.equivalence_classes(reps)) == reps
    assert len(cat.equivalence_classes(raw, swap=False)) == 906


def test_classes_share_gcd_and_sv(raw):
    for members in cat.equivalence_classes(raw).values():
        entries = [cat.make_entry(cy.ParameterVector(a), cy.ParameterVector(b)) for a, b in members]
        assert len({e.gcd_v for e in entries}) == 1
        assert len({e.sv_flag for e in entries}) == 1


def test_parallel_enumeration_is_identical(catalog):
    assert cat.dumps_catalog(cat.enumerate_pairs(6, jobs=2)) == cat.dumps_catalog(catalog)


def test_status_annotation(catalog):
    ann = cat.read_annotations(cat.default_annotations_path())
    done = cat.annotate_status(catalog, ann, certified={"C-1", "C-10", "C-42", "C-59"})
    s = cat.counts(done)
    assert s.status_counts["open"] == 11
    assert s.status_counts["arithmetic-SV"] == 211
    assert done.by_label()["C-1"].status == "arithmetic-this-paper"
    bare = cat.annotate_status(catalog, {}, certified=set())
    assert set(cat.counts(bare).status_counts) == {"arithmetic-SV"}
    with pytest.raises(UnknownLabel):
        cat.annotate_status(catalog, {"Z-99": "thin"}, certified=set())


def test_annotation_file_errors(tmp_path):
    p = tmp_path / "ann.tsv"
    p.write_text("C-1\tmaybe\n")
    with pytest.raises(ParseError):
        cat.read_annotations(p)
    p.write_text("# comment only\n\n")
    assert cat.read_annotations(p) == {}


def test_persistence_round_trip(catalog, tmp_path):
    path = tmp_path / "cat.tsv"
    cat.save_catalog(catalog, path)
    again = cat.load_catalog(path)
    assert cat.dumps_catalog(again) == cat.dumps_catalog(catalog)
    assert again.raw_count == 1812
    lines = path.read_text().splitlines()
    assert lines[0] == cat.HEADER
    assert all(len(line.split("\t")) == 10 for line in lines[2:])
    bad = path.read_text().replace("-3,-3,3,-3,-3,0", "-3,-3,3,-3,-3,1")
    with pytest.raises(ParseError):
        cat.loads_catalog(bad)
