"""Catalog integrity and bit-for-bit text serialization."""

from __future__ import annotations

import pytest

from delpezzo import catalog

EXPECTED_IDS = (
    "q-i", "q-ii", "q-iii", "q-iv", "q-v", "q-vi", "q-vii", "q-viii", "q-ix",
    "q-x", "q-xi", "q-xii", "q-xiii", "q-xiv", "q-xv",
    "q-v-work", "c-3a2", "c-cayley", "c-d4", "c-e6",
)


def test_catalog_has_twenty_records_in_order():
    records = catalog.list_surfaces()
    assert tuple(r.id for r in records) == EXPECTED_IDS


def test_every_record_verifies():
    reports = catalog.verify_catalog()
    failed = [r for r in reports if not r.passed]
    assert failed == [], failed


def test_get_unknown_surface():
    with pytest.raises(catalog.UnknownSurfaceError):
        catalog.get("q-xvi")


def test_ambient_and_degrees():
    for record in catalog.list_surfaces():
        n_eqs = len(record.equations)
        if record.id.startswith("q-"):
            assert record.ambient_dim == 4 and n_eqs == 2
            assert all(q.degree == 2 for q in record.equations)
        else:
            assert record.ambient_dim == 3 and n_eqs == 1
            assert record.equations[0].degree == 3
        assert record.degree == record.ambient_dim  # del Pezzo degree


def test_survey_table_line_counts():
    counts = {r.id: r.geometric_line_count for r in catalog.list_surfaces()}
    assert counts["q-i"] == 12 and counts["q-v"] == 6 and counts["q-xv"] == 1
    assert counts["c-cayley"] == 9 and counts["c-e6"] == 1


def test_picard_ranks_where_stated():
    assert catalog.get("q-v").picard_rank == 6
    assert catalog.get("q-v-work").picard_rank == 6
    assert catalog.get("q-xiii").picard_rank == 4
    assert catalog.get("q-xv").picard_rank == 6
    for sid in ("c-3a2", "c-cayley", "c-d4", "c-e6"):
        assert catalog.get(sid).picard_rank == 7
    assert catalog.get("q-i").picard_rank is None


def test_s3_known_data_is_complete():
    for sid in ("q-v", "q-v-work"):
        record = catalog.get(sid)
        assert len(record.known_lines) == 6
        assert len(record.known_singular_points) == 3
    assert len(catalog.get("c-e6").known_lines) == 1


def test_text_round_trip_is_bit_identical():
    records = catalog.list_surfaces()
    text = catalog.records_to_text(records)
    parsed = catalog.parse_text(text)
    assert parsed == records
    assert catalog.records_to_text(parsed) == text


def test_packaged_text_matches_in_memory_catalog():
    assert catalog.packaged_text() == catalog.records_to_text(catalog.list_surfaces())


def test_parse_ignores_comments_and_blank_lines():
    text = catalog.records_to_text(catalog.list_surfaces())
    noisy = "# prologue\n\n" + text + "\n# epilogue\n"
    assert catalog.parse_text(noisy) == catalog.list_surfaces()
