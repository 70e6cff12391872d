import csv

import pytest

from zz_strips.catalog import (CATALOG_HEADER, canonical_shapes, catalog_entries, catalog_entry, closed_form_or_zero,
                               enumerate_shape_sequences, export_catalog_csv, is_kekulean_sequence,
                               symmetry_images)
from zz_strips.order_polynomials import ClosedForm, ExtensionGroup, closed_form, zz_polynomial
from zz_strips.strip_geometry import make_strip


def test_single_tier():
    assert enumerate_shape_sequences(1) == ["WN"]


def test_two_tiers_up_to_symmetry():
    assert enumerate_shape_sequences(2) == ["WN", "WRN"]
    assert enumerate_shape_sequences(2, dedup=False) == ["WN", "WLN", "WRN"]


def test_sequence_counts():
    counts = [len(enumerate_shape_sequences(t, dedup=False)) for t in range(1, 5)]
    assert counts == [1, 3, 9, 29]


def test_sequences_are_well_formed():
    for shapes in enumerate_shape_sequences(4, dedup=False):
        assert shapes[0] == "W" and shapes[-1] == "N"
        assert shapes.count("W") == shapes.count("N")


def test_symmetry_images():
    assert symmetry_images("WRN") == {"WRN", "WLN"}
    assert "WWNN" in symmetry_images("WWNN")
    assert symmetry_images("WRRN") == {"WRRN", "WLLN"}


def test_canonical_representatives():
    assert canonical_shapes("WLN") == "WRN"
    assert canonical_shapes("WLLN") == "WRRN"
    deduped = set(enumerate_shape_sequences(4))
    for shapes in enumerate_shape_sequences(4, dedup=False):
        assert canonical_shapes(shapes) in deduped


def test_kekulean_filter():
    assert not is_kekulean_sequence("WNNWWN")
    assert "WNNWWN" not in enumerate_shape_sequences(5, dedup=False)
    assert "WNNWWN" in enumerate_shape_sequences(5, dedup=False, kekulean_only=False)


def test_catalog_entry():
    entry = catalog_entry("WRN")
    assert entry.tiers == 2
    assert entry.minimal_length == 1
    assert entry.kekulean
    assert entry.form.p == 2
    assert entry.form.groups == (ExtensionGroup(0, 0, 1),)
    assert entry.to_row() == ["WRN", 2, 1, True, 2, 1, "0/0/1", "sum_{k=0}^{2} [C(2,k) C(n,k)] (1+x)^k"]


def test_non_kekulean_entry():
    entry = catalog_entry("WNNWWN")
    assert not entry.kekulean
    assert entry.form.to_text() == "0"


def test_entries_reproduce_zz():
    for entry in catalog_entries(3, workers=1):
        for n in range(entry.minimal_length, 5):
            zz = zz_polynomial(make_strip(entry.shapes, n))
            assert entry.form.evaluate(n) == zz


def test_entries_sorted():
    shapes = [e.shapes for e in catalog_entries(4, workers=1)]
    assert shapes == enumerate_shape_sequences(4)


@pytest.mark.slow
def test_pool_matches_serial():
    assert catalog_entries(4, workers=2) == catalog_entries(4, workers=1)


def test_export_uses_next_run_index(tmp_path):
    entries = catalog_entries(2, workers=1)
    first = export_catalog_csv(entries, 2, tmp_path)
    second = export_catalog_csv(entries, 2, tmp_path)
    assert first.name == "catalog_tiers_2_run_1.csv"
    assert second.name == "catalog_tiers_2_run_2.csv"
    with open(first, encoding="UTF8", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == CATALOG_HEADER
    assert [row[0] for row in rows[1:]] == ["WN", "WRN"]


def test_closed_form_or_zero():
    spec = make_strip("WWRNN", 1)
    assert closed_form_or_zero(spec) == closed_form(spec)
    zero = closed_form_or_zero(make_strip("WNNWWN", 3))
    assert zero == ClosedForm.zero("WNNWWN")
    assert zero.to_text() == catalog_entry("WNNWWN").form.to_text() == "0"
