"""Alternating-link export: strands, Gauss codes, DT codes.

The DT canonicalization is regression-locked against _dt_oracle below, a
brute-force reimplementation straight from the numbering definition that
shares no code with hedrite.links.
"""

import pytest

from hedrite.census import enumerate_hedrites
from hedrite.circuits import central_circuits
from hedrite.links import LinkDiagram, dt_code, dt_text, gauss_code, gauss_text, to_link


def _dt_oracle(passes):
    """Canonical DT code of a 1-strand diagram, by exhaustion.

    passes: [(crossing, over)] in walk order.  Tries every start, both
    walk directions and both mirrors; numbers the passes 1..2n, pairs the
    odd label of each crossing with its even label (negated when that
    even pass goes over), and keeps the sequence ordering positives
    before negatives of the same magnitude.
    """
    m = len(passes)
    best = None
    for flip in (False, True):
        seq = [(c, o ^ flip) for c, o in passes]
        for start in range(m):
            for step in (1, -1):
                walk = [seq[(start + step * t) % m] for t in range(m)]
                odd_of, even_of = {}, {}
                for num, (c, over) in enumerate(walk, start=1):
                    if num % 2:
                        odd_of[c] = num
                    else:
                        even_of[c] = -num if over else num
                code = tuple(even_of[c] for c in sorted(odd_of, key=odd_of.get))
                # readable tie-break: 4 before -4 before 6
                key = tuple((abs(x), x < 0) for x in code)
                if best is None or key < best[0]:
                    best = (key, code)
    return best[1]


def _graph(i, n, k):
    return enumerate_hedrites(i, n)[k].graph


@pytest.fixture(scope="module")
def trefoil():
    # the lone 3-vertex 5-hedrite projects to the trefoil
    (rec,) = enumerate_hedrites(5, 3)
    return to_link(rec.graph)


class TestToLink:
    def test_trefoil_shape(self, trefoil):
        assert len(trefoil.components) == 1
        assert trefoil.n_crossings == 3
        assert not trefoil.composite

    def test_two_component_seed(self):
        (rec,) = enumerate_hedrites(4, 2)
        link = to_link(rec.graph)
        assert len(link.components) == 2
        assert link.n_crossings == 2
        assert not link.composite

    def test_composite_flag(self):
        # composite is the 2-vertex-cut proxy, so it tracks 3-connectivity
        for i, n in [(4, 2), (4, 4), (4, 6), (6, 8), (8, 9)]:
            for rec in enumerate_hedrites(i, n):
                assert to_link(rec.graph).composite == (not rec.three_connected)

    def test_least_dart_passes_over(self):
        # the pass through dart 0 has pass id 0; the mirror rule puts it on top
        for i, n in [(4, 2), (5, 3), (6, 8), (7, 9), (8, 12)]:
            for rec in enumerate_hedrites(i, n):
                assert 0 in to_link(rec.graph).over_passes

    def test_alternation_everywhere(self):
        for i, n in [(4, 6), (5, 7), (6, 8), (7, 10), (8, 9)]:
            for rec in enumerate_hedrites(i, n):
                link = to_link(rec.graph)
                for strand in link.components:
                    overs = [over for _, over in strand]
                    assert all(
                        a != b for a, b in zip(overs, overs[1:] + overs[:1])
                    ), (i, n, rec.local_id)

    def test_each_crossing_once_over_once_under(self):
        for i, n in [(4, 8), (5, 9), (6, 10), (8, 11)]:
            for rec in enumerate_hedrites(i, n):
                link = to_link(rec.graph)
                seen = {}
                for strand in link.components:
                    for v, over in strand:
                        seen.setdefault(v, []).append(over)
                assert all(sorted(flags) == [False, True] for flags in seen.values())

    def test_component_count_matches_circuits(self):
        for i, n in [(4, 10), (5, 11), (6, 9), (7, 11), (8, 10)]:
            for rec in enumerate_hedrites(i, n):
                link = to_link(rec.graph)
                assert len(link.components) == len(central_circuits(rec.graph))

    def test_mirror_flips_signs_only(self, trefoil):
        (rec,) = enumerate_hedrites(5, 3)
        mirrored = to_link(rec.graph.mirror())
        a, b = dt_code(trefoil), dt_code(mirrored)
        assert a == b or a == tuple(-x for x in b)


class TestGaussCode:
    def test_trefoil_gauss(self, trefoil):
        (seq,) = gauss_code(trefoil)
        assert len(seq) == 6
        assert sorted(abs(x) for x in seq) == [1, 1, 2, 2, 3, 3]
        for k in (1, 2, 3):
            assert sorted(x for x in seq if abs(x) == k) == [-k, k]

    def test_three_squares(self):
        # the octahedral 8-hedrite: three simple squares pairwise crossing
        (rec,) = enumerate_hedrites(8, 6)
        seqs = gauss_code(to_link(rec.graph))
        assert [len(s) for s in seqs] == [4, 4, 4]

    def test_single_long_strand(self):
        recs = enumerate_hedrites(6, 4)
        (rec,) = recs
        seqs = gauss_code(to_link(rec.graph))
        assert [len(s) for s in seqs] == [8]
        assert {abs(x) for s in seqs for x in s} == {1, 2, 3, 4}

    def test_labels_first_appearance(self, trefoil):
        (seq,) = gauss_code(trefoil)
        firsts = []
        for x in seq:
            if abs(x) not in firsts:
                firsts.append(abs(x))
        assert firsts == [1, 2, 3]

    def test_text_form(self, trefoil):
        text = gauss_text(trefoil)
        assert "/" not in text  # single component
        assert len(text.split()) == 6
        (rec,) = enumerate_hedrites(4, 2)
        assert gauss_text(to_link(rec.graph)).count("/") == 1


class TestDTCode:
    def test_trefoil_frozen(self, trefoil):
        assert dt_code(trefoil) == (4, 6, 2)
        assert dt_text(trefoil) == "4 6 2"

    def test_matches_oracle_on_knots(self):
        cells = [(5, 3), (6, 4), (5, 5), (6, 6), (7, 9), (8, 8), (6, 7)]
        checked = 0
        for i, n in cells:
            for rec in enumerate_hedrites(i, n):
                link = to_link(rec.graph)
                if len(link.components) != 1:
                    continue
                assert dt_code(link) == _dt_oracle(link.components[0]), (
                    i,
                    n,
                    rec.local_id,
                )
                checked += 1
        assert checked >= 6

    def test_six_crossing_knot(self):
        recs = enumerate_hedrites(6, 6)
        knots = [
            to_link(r.graph)
            for r in recs
            if len(central_circuits(r.graph)) == 1
        ]
        (link,) = knots
        code = dt_code(link)
        assert len(code) == 6
        assert all(x % 2 == 0 and x != 0 for x in code)
        assert sorted(abs(x) for x in code) == [2, 4, 6, 8, 10, 12]

    def test_even_entries_everywhere(self):
        for i, n in [(5, 8), (6, 9), (7, 9)]:
            for rec in enumerate_hedrites(i, n):
                link = to_link(rec.graph)
                if len(link.components) != 1:
                    continue
                code = dt_code(link)
                assert len(code) == n
                assert all(x % 2 == 0 for x in code)

    def test_multi_component_rejected(self):
        (rec,) = enumerate_hedrites(4, 2)
        with pytest.raises(ValueError):
            dt_code(to_link(rec.graph))


class TestDiagramType:
    def test_frozen(self, trefoil):
        with pytest.raises(AttributeError):
            trefoil.composite = True

    def test_is_dataclass_instance(self, trefoil):
        assert isinstance(trefoil, LinkDiagram)
