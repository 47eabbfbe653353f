from collections import Counter

import pytest

from hedrite import catalog
from hedrite.catalog import CatalogRow, all_rows, rows_for
from hedrite.circuits import CCVector


def row(i, catalog_id):
    hits = [r for r in all_rows() if (r.i, r.catalog_id) == (i, catalog_id)]
    assert len(hits) == 1
    return hits[0]


# -- shape -------------------------------------------------------------------


def test_total_and_per_i_counts():
    rows = all_rows()
    assert len(rows) == 230
    per_i = Counter(r.i for r in rows)
    assert per_i == {4: 20, 5: 42, 6: 99, 7: 43, 8: 26}


def test_vertex_ranges_per_i():
    ns = {i: sorted({r.n for r in rows_for_i(i)}) for i in range(4, 9)}
    assert ns[4] == [2, 4, 6, 8, 10, 12, 14]
    assert ns[5] == [3] + list(range(5, 16))
    assert ns[6] == list(range(4, 16))
    assert ns[7] == list(range(7, 16))
    assert ns[8] == [6] + list(range(8, 16))  # no 8-hedrite has 7 vertices


def rows_for_i(i):
    return [r for r in all_rows() if r.i == i]


def test_ids_unique_within_i():
    for i in range(4, 9):
        ids = [r.catalog_id for r in rows_for_i(i)]
        assert len(ids) == len(set(ids))


def test_ids_match_their_cell():
    # catalog ids are "<n>-<k>" with k counting up from 1 inside the cell
    for (i, n), cell in group_cells().items():
        assert [r.catalog_id for r in cell] == [
            f"{n}-{k}" for k in range(1, len(cell) + 1)
        ]


def group_cells():
    cells = {}
    for r in all_rows():
        cells.setdefault((r.i, r.n), []).append(r)
    return cells


def test_rows_for_slices_by_cell():
    assert rows_for(8, 12) == tuple(
        r for r in all_rows() if (r.i, r.n) == (8, 12)
    )
    assert rows_for(8, 7) == ()


def test_rows_for_rejects_bad_i():
    with pytest.raises(ValueError):
        rows_for(3, 10)
    with pytest.raises(ValueError):
        rows_for(9, 10)


# -- CC-vector normalization ---------------------------------------------------


def test_cc_round_trips_and_sums_to_2n():
    for r in all_rows():
        assert ";" in r.cc
        simple, selfx = r.cc.split(";")
        vec = CCVector(
            tuple(_expand(simple)), tuple(_expand(selfx))
        )
        assert vec.text() == r.cc
        assert sum(_expand(simple)) + sum(_expand(selfx)) == 2 * r.n


def _expand(side):
    out = []
    for term in filter(None, side.split(",")):
        base, _, exp = term.partition("^")
        out.extend([int(base)] * (int(exp) if exp else 1))
    return out


def test_printed_form_reconstruction():
    for r in all_rows():
        simple, selfx = r.cc.split(";")
        if simple and selfx:
            assert r.printed == r.cc
        else:
            assert r.printed == r.cc.replace(";", "")
            assert ";" not in r.printed


def test_lone_circuits_sit_on_the_self_intersecting_side():
    # a single central circuit meets every vertex twice, so it crosses itself
    for r in all_rows():
        simple, selfx = r.cc.split(";")
        if len(_expand(simple)) + len(_expand(selfx)) == 1:
            assert simple == ""


def test_4hedrite_rows_are_all_simple():
    for r in rows_for_i(4):
        assert r.cc.endswith(";")


# -- spot rows ------------------------------------------------------------------


def test_known_rows():
    assert row(4, "2-1") == CatalogRow(4, 2, "2-1", "D4h", "2^2;", "2^2", False, False)
    assert row(5, "3-1").cc == ";6"
    assert row(5, "3-1").group == "D3h"
    assert row(8, "6-1") == CatalogRow(8, 6, "6-1", "Oh", "4^3;", "4^3", False, False)
    assert (row(8, "12-4").group, row(8, "12-5").group) == ("Oh", "D3h")
    assert row(8, "12-4").cc == row(8, "12-5").cc == "6^4;"


def test_starred_and_reducible_flags():
    assert row(4, "4-2").starred and row(4, "4-2").reducible
    assert not row(4, "4-1").starred  # printed without a star; see docs
    r = row(6, "13-11")
    assert (r.group, r.cc, r.reducible, r.starred) == ("C2v", ";8^2,10", True, False)


def test_one_sided_rows_resolve_both_ways():
    # same printed shape, opposite sides
    assert row(6, "14-20").cc == "6^2,8^2;"
    assert row(6, "13-11").cc == ";8^2,10"


def test_group_erratum_is_pinned():
    # printed C2v, but the graph's automorphism group has order 2 with no
    # reflection; the stored row carries the computed group
    assert row(6, "15-10").group == "C2"
    assert catalog._ERRATA[(6, "15-10")] == ("group", "C2v")
    assert len(catalog._ERRATA) == 1


def test_disproved_flags_stay_verbatim():
    # these four rows keep the printed flag; the census says otherwise
    assert catalog._DISPROVED_FLAGS == {
        (4, "4-1"): ("starred", True),
        (5, "15-2"): ("starred", True),
        (6, "12-12"): ("reducible", True),
        (6, "14-19"): ("reducible", True),
    }
    for (i, ident), (field, computed) in catalog._DISPROVED_FLAGS.items():
        assert getattr(row(i, ident), field) == (not computed)


def test_rows_are_frozen():
    with pytest.raises(AttributeError):
        row(4, "2-1").group = "C1"
