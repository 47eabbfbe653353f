import pytest

from hedrite.circuits import (
    cc_vector,
    central_circuits,
    class_bipartition,
    intersection_vector,
    is_balanced,
    is_pure,
)
from hedrite.structure import _chain_hedrite, build_4hedrite


def test_two_one_circuits(two_one):
    circuits = central_circuits(two_one)
    assert [c.length for c in circuits] == [2, 2]
    assert all(c.self_intersections == 0 for c in circuits)
    assert cc_vector(two_one).text() == "2^2;"
    for c in circuits:
        iv = intersection_vector(two_one, c)
        assert (iv.c0, iv.others) == (0, (2,))
        assert iv.text() == "(0; 2)"


def test_octahedron_circuits(octahedron):
    # three equatorial squares, pairwise meeting in two antipodal vertices
    circuits = central_circuits(octahedron)
    assert [c.length for c in circuits] == [4, 4, 4]
    assert cc_vector(octahedron).text() == "4^3;"
    for c in circuits:
        iv = intersection_vector(octahedron, c)
        assert (iv.c0, iv.others) == (0, (2, 2))


def test_triple_triangle_single_circuit(triple_triangle):
    circuits = central_circuits(triple_triangle)
    assert len(circuits) == 1
    (c,) = circuits
    assert c.length == 6
    assert c.self_intersections == 3
    assert cc_vector(triple_triangle).text() == ";6"
    assert intersection_vector(triple_triangle, c).text() == "(3;)"


def test_circuits_partition_edges(two_one, octahedron, triple_triangle):
    for g in (two_one, octahedron, triple_triangle):
        seen = set()
        for c in central_circuits(g):
            edges = c.edge_set(g)
            assert not (edges & seen)
            seen |= edges
        assert len(seen) == g.n_edges


def test_length_identity(two_one, octahedron, triple_triangle):
    # every circuit: length = 2 c0 + sum of intersections with the others
    for g in (two_one, octahedron, triple_triangle):
        for c in central_circuits(g):
            iv = intersection_vector(g, c)
            assert c.length == 2 * iv.c0 + sum(iv.others)


def test_purity_and_balance(two_one, octahedron, triple_triangle):
    assert is_pure(two_one)
    assert is_pure(octahedron)
    assert not is_pure(triple_triangle)
    assert is_balanced(two_one)
    assert is_balanced(octahedron)
    assert is_balanced(triple_triangle)


def test_intersection_vector_rejects_foreign_circuit(two_one, octahedron):
    c = central_circuits(octahedron)[0]
    with pytest.raises(ValueError):
        intersection_vector(two_one, c)


def test_class_bipartition_triple_triangle(triple_triangle):
    one, two = class_bipartition(triple_triangle)
    # D3h symmetry puts all three crossings in a single class
    assert {frozenset(one), frozenset(two)} == {frozenset({0, 1, 2}), frozenset()}


def test_class_bipartition_needs_single_circuit(two_one):
    with pytest.raises(ValueError):
        class_bipartition(two_one)


def test_chain_families_intersections():
    g = _chain_hedrite(3, "digon", "digon")
    assert cc_vector(g).text() == ";6^2"
    for c in central_circuits(g):
        assert intersection_vector(g, c).text() == "(1; 4)"
    g5 = _chain_hedrite(2, "digon", "bowtie")
    assert cc_vector(g5).text() == ";10"
    g4 = _chain_hedrite(2, "bowtie", "bowtie")
    assert cc_vector(g4).text() == "6^2;"
    assert g4.is_isomorphic(build_4hedrite(6, 1))


def test_four_hedrite_circuits_always_simple():
    # even-faced maps cannot have self-intersecting circuits
    for n, j in ((2, 0), (4, 1), (8, 2), (10, 1), (12, 3)):
        g = build_4hedrite(n, j)
        assert cc_vector(g).self_intersecting == ()
