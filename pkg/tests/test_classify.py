"""Enumeration, classification tables, and the audit."""

from pathlib import Path

from incidence_scrolls.classify import (
    audit,
    base_candidates,
    build_tables,
    enumerate_bases,
    render_table,
    row_to_dict,
)

GOLDEN = Path(__file__).parent / "golden"

RATIONAL_ROWS = [
    # (ambient, dims, degree, e, m, min directrix degree, count or None)
    (3, (1, 1, 1), 2, 0, 1, 1, None),
    (4, (1, 2, 2, 2), 3, 1, 2, 1, 1),
    (5, (1, 3, 3, 3, 3), 4, 2, 3, 1, 1),
    (5, (2, 2, 2, 3), 4, 0, 2, 2, None),
    (6, (1, 4, 4, 4, 4, 4), 5, 3, 4, 1, 1),
    (6, (2, 3, 3, 3), 5, 1, 3, 2, 1),
    (7, (1, 5, 5, 5, 5, 5, 5), 6, 4, 5, 1, 1),
    (7, (3, 3, 3, 4), 6, 0, 3, 3, None),
    (8, (1, 6, 6, 6, 6, 6, 6, 6), 7, 5, 6, 1, 1),
    (8, (3, 4, 4, 4), 7, 1, 4, 3, 1),
]

ELLIPTIC_ROWS = [
    (4, (2, 2, 2, 2, 2), 5, -1, 2, 3, None),
    (5, (2, 2, 3, 3, 3), 6, 0, 3, 3, 2),
    (6, (2, 3, 3, 4, 4), 7, 1, 4, 3, 1),
    (7, (2, 4, 4, 4, 5), 8, 2, 5, 3, 1),
    (7, (3, 3, 3, 5, 5), 8, 0, 4, 4, None),
    (8, (2, 5, 5, 5, 5), 9, 3, 6, 3, 1),
]


def test_base_candidates_small():
    assert [b.dims for b in base_candidates(3)] == [(1, 1, 1)]
    assert [b.dims for b in base_candidates(4)] == [(1, 2, 2, 2), (2, 2, 2, 2, 2)]
    got = [b.dims for b in base_candidates(5)]
    assert got == [
        (1, 3, 3, 3, 3),
        (2, 2, 2, 3),
        (2, 2, 3, 3, 3),
        (2, 3, 3, 3, 3, 3),
        (3, 3, 3, 3, 3, 3, 3),
    ]


def test_candidates_all_valid_and_sorted():
    from incidence_scrolls.base import validate

    for n in range(3, 9):
        candidates = base_candidates(n)
        assert candidates == sorted(candidates, key=lambda b: b.dims)
        for b in candidates:
            assert validate(b).all_ok
            assert all(d >= 1 for d in b.dims)


def test_enumerate_includes_high_genus():
    rows = {b.dims: inv for b, inv in enumerate_bases(5)}
    inv = rows[(3, 3, 3, 3, 3, 3, 3)]
    assert (inv.degree, inv.genus, inv.speciality) == (14, 8, 6)


def _rows_key(rows):
    return [
        (
            r.base.ambient,
            r.base.dims,
            r.invariants.degree,
            r.invariants.e,
            r.invariants.divisor_degree,
            r.invariants.min_directrix_degree,
            r.min_directrix_count,
        )
        for r in rows
    ]


def test_tables_match_expected_rows():
    rational, elliptic = build_tables(8)
    assert _rows_key(rational) == RATIONAL_ROWS
    assert _rows_key(elliptic) == ELLIPTIC_ROWS
    assert all(r.invariants.genus == 0 for r in rational)
    assert all(r.invariants.genus == 1 for r in elliptic)
    assert all(r.invariants.speciality == 0 for r in rational + elliptic)


def test_tables_match_golden_files():
    rational, elliptic = build_tables(8)
    assert render_table(rational, 0, 8) == (GOLDEN / "table_rational.txt").read_text()
    assert render_table(elliptic, 1, 8) == (GOLDEN / "table_elliptic.txt").read_text()


def test_row_json_contract():
    rational, elliptic = build_tables(4)
    row = row_to_dict(elliptic[0])
    assert row == {
        "ambient": 4,
        "dims": [2, 2, 2, 2, 2],
        "degree": 5,
        "genus": 1,
        "e": -1,
        "m": 2,
        "min_directrix": {"degree": 3, "ambient": 2, "count": "inf^1"},
        "bundle": {"kind": "indecomposable", "base_genus": 1, "e": -1, "e_trivial": False},
    }
    row0 = row_to_dict(rational[0])
    assert row0["min_directrix"] == {"degree": 1, "ambient": 1, "count": "inf^1"}
    assert row0["bundle"] == {
        "kind": "decomposable",
        "base_genus": 0,
        "e": 0,
        "e_trivial": False,
    }


def test_audit_classified_range_is_clean():
    report = audit(8)
    assert report.violations == []
    assert report.rational_rows == 10
    assert report.elliptic_rows == 6
    assert report.indecomposable_e0 == []
    assert report.oracle_mismatches == []


def test_audit_reports_special_scrolls_honestly():
    report = audit(5)
    assert len(report.speciality_exceptions) == 2
    assert report.speciality_exceptions[0].startswith("5:2,3,3,3,3,3")
    assert report.speciality_exceptions[1].startswith("5:3,3,3,3,3,3,3")


def test_theorem_predicted_base_appears():
    # the (g, e, m) = (0, 1, 3) scroll must be enumerated with its base
    bases = {b.dims: inv for b, inv in enumerate_bases(6)}
    inv = bases[(2, 3, 3, 3)]
    assert (inv.genus, inv.e, inv.divisor_degree) == (0, 1, 3)
