"""Acceptance gate: one criterion per test, one PASS/FAIL line each.

Run with -s (or read the captured stdout) to see the lines.  The census
fixture is computed once for the whole module and times itself; the
budget below allows for a single-core machine, since the enumerator
pools per cell and any multicore laptop finishes well under five
minutes.  Known deviations from the source tabulation are printed as
notes and documented in docs/transcription-notes.md.
"""

import time
from collections import Counter, defaultdict
from contextlib import contextmanager
from pathlib import Path

import pytest

from hedrite.catalog import rows_for
from hedrite.census import full_census, match_catalog
from hedrite.circuits import (
    cc_vector,
    central_circuits,
    intersection_vector,
    is_pure,
)
from hedrite.links import dt_code, dt_text, to_link
from hedrite.planegraph import decode
from hedrite.structure import is_irreducible, rail_roads, vertex_connectivity_class
from hedrite.symmetry import point_group
from hedrite.transform import goldberg_coxeter, inflate_all, inflate_circuit, reduce
from test_links import _dt_oracle

DATA = Path(__file__).parent / "data"

EXPECTED_COUNTS = {
    4: {2: 1, 4: 2, 6: 2, 8: 4, 10: 3, 12: 5, 14: 3},
    5: dict(zip([3] + list(range(5, 16)), [1, 1, 2, 3, 1, 2, 3, 5, 3, 4, 7, 10])),
    6: dict(zip(range(4, 16), [1, 1, 2, 1, 5, 5, 9, 7, 14, 14, 23, 17])),
    7: dict(zip(range(7, 16), [1, 1, 1, 3, 4, 5, 7, 9, 12])),
    8: {6: 1, **dict(zip(range(8, 16), [1, 1, 2, 1, 5, 2, 8, 5]))},
}

FIRST_GROUPS = {
    5: {"D3h": 3, "C2v": 5, "Cs": 7, "C2": 8, "C1": 10, "D3": 15},
    7: {"C2v": 7, "Cs": 8, "C2": 11, "C1": 11},
    8: {
        "Oh": 6,
        "D4d": 8,
        "D3h": 9,
        "D2": 10,
        "D4h": 10,
        "C2v": 11,
        "D3d": 12,
        "C2": 12,
        "Cs": 14,
        "D2d": 14,
    },
}


@contextmanager
def _gate(num, title):
    try:
        yield
    except BaseException:
        print(f"criterion {num} ({title}): FAIL")
        raise
    print(f"criterion {num} ({title}): PASS")


@pytest.fixture(scope="module")
def census():
    t0 = time.perf_counter()
    recs = full_census(15)
    return recs, time.perf_counter() - t0


def _by_id(recs, i, ident):
    hits = [r for r in recs if r.i == i and match_catalog(r) == ident]
    assert len(hits) == 1, (i, ident)
    return hits[0].graph


def _load_fixture(name):
    lines = (DATA / name).read_text().splitlines()
    return decode("\n".join(l for l in lines if not l.startswith("#")))


def _family_row(kind, m):
    """Expected (group, circuit lengths) of the non-3-connected families."""
    if kind == "I6":
        return ("D2d", [4 * m]) if m % 2 == 0 else ("D2h", [2 * m] * 2)
    if kind == "I5":
        return "C2v", [4 * m + 2]
    if kind == "I4":
        return ("D2d" if m % 2 == 0 else "D2h"), [2 * m + 2] * 2
    if kind == "J4":
        return "D2h", [2] * m + [2 * m]
    raise AssertionError(f"family {kind} members are 3-connected")


def test_criterion_1_census_counts(census):
    recs, wall = census
    with _gate(1, f"census counts, wall {wall:.0f}s"):
        got = Counter((r.i, r.n) for r in recs)
        for i in range(4, 9):
            for n in range(2, 16):
                assert got.get((i, n), 0) == EXPECTED_COUNTS[i].get(n, 0), (i, n)
        assert len(recs) == 230
        assert wall < 600


def test_criterion_2_signature_match(census):
    recs, _ = census
    with _gate(2, "per-cell (group, CC) multisets"):
        by_cell = defaultdict(Counter)
        for r in recs:
            by_cell[(r.i, r.n)][(r.point_group, r.cc_vector)] += 1
        for i in range(4, 9):
            for n in range(2, 16):
                want = Counter((row.group, row.cc) for row in rows_for(i, n))
                assert by_cell.get((i, n), Counter()) == want, (i, n)


def test_criterion_3_medial_identities(census):
    recs, _ = census
    with _gate(3, "medial identities"):
        pairs = [
            (8, "6-1", "12-4"),
            (7, "7-1", "14-9"),
            (6, "4-1", "8-3"),
            (5, "3-1", "6-2"),
        ]
        for i, src, dst in pairs:
            med = _by_id(recs, i, src).medial()
            assert med.canonical_code() == _by_id(recs, i, dst).canonical_code(), src


def test_criterion_4_structure_theorems(census):
    recs, _ = census
    with _gate(4, "structure theorems over the census"):
        # connectivity; 2-cut graphs land in the chain families
        unclassified = []
        for r in recs:
            assert vertex_connectivity_class(r.graph) >= 2
            if r.three_connected:
                continue
            if r.family.kind == "none":
                unclassified.append(r)
                continue
            group, lengths = _family_row(r.family.kind, r.family.m)
            assert r.point_group == group, r.header()
            got = sorted(c.length for c in central_circuits(r.graph))
            assert got == sorted(lengths), r.header()
        assert [(r.i, match_catalog(r)) for r in unclassified] == [(4, "4-1")]
        print("note: the doubled square 4-1 is 2-cut but below the family range")

        # circuit counts, parities, length sums
        for r in recs:
            circuits = central_circuits(r.graph)
            if r.irreducible:
                assert len(circuits) <= r.i - 2, r.header()
            lengths = [c.length for c in circuits]
            assert all(length % 2 == 0 for length in lengths), r.header()
            assert sum(lengths) == 2 * r.n, r.header()
            if r.pure:
                assert r.n % 2 == 0, r.header()

        # balance is automatic for i=4,8 and holds through n=15 for i=5,7
        unbalanced = [r for r in recs if not r.balanced]
        assert unbalanced and all(r.i == 6 for r in unbalanced)
        smallest = min(r.n for r in unbalanced)
        first = [r for r in unbalanced if r.n == smallest]
        assert smallest == 12 and len(first) == 1
        assert match_catalog(first[0]) == "12-12"

        # self-intersections: forced for i=7, impossible for i=4
        for r in recs:
            crossing = any(c.self_intersections for c in central_circuits(r.graph))
            if r.i == 7:
                assert crossing, r.header()
            if r.i == 4:
                assert not crossing, r.header()

        # pure irreducible classification inside the census
        pure_irr = [r for r in recs if r.pure and r.irreducible]
        for r in recs:
            if r.i == 4:
                two_circuits = len(central_circuits(r.graph)) == 2
                assert (r.pure and r.irreducible) == two_circuits, r.header()
        rest = sorted((r.i, match_catalog(r)) for r in pure_irr if r.i != 4)
        assert rest == [
            (5, "6-2"),
            (6, "14-20"),
            (6, "8-5"),
            (8, "12-4"),
            (8, "12-5"),
            (8, "14-7"),
            (8, "6-1"),
        ]
        print("note: the source tabulation numbers the 8-vertex member both"
              " 8-5 and 8-6; the listing's 8-5 is used")

        # the four members beyond the census range, frozen as fixtures
        fixtures = {
            "pure8h_20_1.txt": (20, "D2d", "8^5;"),
            "pure8h_22_1.txt": (22, "D2h", "8^3,10^2;"),
            "pure8h_30_1.txt": (30, "O", "10^6;"),
            "pure8h_32_1.txt": (32, "D4h", "10^4,12^2;"),
        }
        for name, (n, group, cc) in fixtures.items():
            g = _load_fixture(name)
            assert g.n_vertices == n and g.is_i_hedrite() == 8, name
            assert cc_vector(g).text() == cc, name
            assert is_pure(g) and is_irreducible(g), name
            assert point_group(g) == group, name
        gc = goldberg_coxeter(_by_id(recs, 8, "6-1"), 2, 1)
        assert gc.canonical_code() == _load_fixture("pure8h_30_1.txt").canonical_code()

        # graphs carrying a self-intersecting rail-road
        hits = set()
        for r in recs:
            if any(road.self_intersecting for road in rail_roads(r.graph)):
                hits.add((r.i, match_catalog(r)))
        assert hits == {(5, "12-3"), (5, "14-6"), (6, "12-12"), (6, "13-11")}
        print("note: the source remark lists three graphs with a"
              " self-intersecting rail-road; the verified set includes"
              " 6-hedrite 12-12 as well (docs/transcription-notes.md)")


def test_criterion_5_goldberg_coxeter(census):
    recs, _ = census
    with _gate(5, "Goldberg-Coxeter scaling"):
        small = [r.graph for r in recs if r.n <= 8]
        assert len(small) == 31
        for g in small:
            for k, l in ((1, 1), (2, 0), (2, 1)):
                assert goldberg_coxeter(g, k, l).n_vertices == g.n_vertices * (
                    k * k + l * l
                )
            gc11 = goldberg_coxeter(g, 1, 1)
            assert gc11.canonical_code() == g.medial().canonical_code()
        seed = _by_id(recs, 4, "2-1")
        for k, l in ((2, 1), (3, 1), (2, 2)):
            assert point_group(goldberg_coxeter(seed, k, l)) in {"D4", "D4h"}


def test_criterion_6_inflation_algebra(census):
    recs, _ = census
    with _gate(6, "inflation algebra"):
        small = [r.graph for r in recs if r.n <= 8]
        for g in small:
            base = central_circuits(g)
            for t in (2, 3):
                h = inflate_all(g, t)
                assert h.n_vertices == g.n_vertices * t * t
                want = Counter()
                for c in base:
                    iv = intersection_vector(g, c)
                    entries = sorted(
                        list(iv.others) * t + [2 * iv.c0] * (t - 1 if iv.c0 else 0)
                    )
                    want[(t * c.length, iv.c0, tuple(entries))] += t
                got = Counter()
                for c in central_circuits(h):
                    iv = intersection_vector(h, c)
                    got[(c.length, iv.c0, tuple(sorted(iv.others)))] += 1
                assert got == want
        for g in small:
            h = inflate_circuit(g, central_circuits(g)[0], 2)
            assert any(
                reduce(h, road).canonical_code() == g.canonical_code()
                for road in rail_roads(h)
            )


def test_criterion_7_symmetry_minima(census):
    recs, _ = census
    with _gate(7, "first occurrences of symmetry groups"):
        first = defaultdict(dict)
        for r in recs:
            seen = first[r.i]
            seen[r.point_group] = min(seen.get(r.point_group, 99), r.n)
        for i, want in FIRST_GROUPS.items():
            for group, n in want.items():
                assert first[i].get(group) == n, (i, group)
        # the first C1 8-hedrite lies past the census range
        assert "C1" not in first[8]


def test_criterion_8_link_export(census):
    recs, _ = census
    with _gate(8, "link projections"):
        for r in recs:
            link = to_link(r.graph)
            assert len(link.components) == len(central_circuits(r.graph))
            for strand in link.components:
                overs = [over for _, over in strand]
                assert all(a != b for a, b in zip(overs, overs[1:] + overs[:1]))
        trefoil = to_link(_by_id(recs, 5, "3-1"))
        assert dt_code(trefoil) == _dt_oracle(trefoil.components[0])
        assert dt_text(trefoil) == "4 6 2"
