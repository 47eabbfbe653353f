"""Central circuits of 4-valent maps and their summary vectors.

A central circuit leaves every vertex by the edge opposite the entering
one.  In dart terms, arriving on dart d (so sitting on theta[d] at the far
vertex) the walk continues on sigma^2(theta[d]); 4-valence makes sigma^2
the "opposite slot" map.  Every edge lies on exactly one circuit, and each
traversal direction of a circuit is one orbit of d -> sigma^2(theta(d)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .planegraph import PlaneGraph


@dataclass(frozen=True)
class CentralCircuit:
    """One central circuit: a cyclic dart sequence along the travel direction.

    Attributes:
        darts: the circuit's darts in walk order, canonically rotated so the
            lexicographically least dart of either direction starts it.
        length: number of edges (equals len(darts)).
        self_intersections: vertices this circuit visits twice (c_0).
    """

    darts: tuple[int, ...]
    length: int
    self_intersections: int

    def edge_set(self, g: PlaneGraph) -> frozenset[int]:
        return frozenset(min(d, g.theta[d]) for d in self.darts)

    def vertex_multiset(self, g: PlaneGraph) -> Counter:
        return Counter(g.vertex_of[d] for d in self.darts)


@dataclass(frozen=True)
class CCVector:
    """Multiset split of circuit lengths: simple ones, self-intersecting ones."""

    simple: tuple[int, ...]
    self_intersecting: tuple[int, ...]

    def text(self) -> str:
        """Render as `a1^alpha1,...;b1^beta1,...`, the semicolon mandatory."""
        return f"{_side_text(self.simple)};{_side_text(self.self_intersecting)}"

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


def _side_text(lengths: tuple[int, ...]) -> str:
    parts = []
    for val in sorted(set(lengths)):
        mult = lengths.count(val)
        parts.append(f"{val}^{mult}" if mult > 1 else f"{val}")
    return ",".join(parts)


@dataclass(frozen=True)
class IntersectionVector:
    """Int(C): self-intersection count plus pairwise meeting sizes.

    `others` holds |C ∩ C'| for every other circuit C' that meets C,
    in decreasing order; zero intersections are omitted.
    """

    c0: int
    others: tuple[int, ...]

    def text(self) -> str:
        if not self.others:
            return f"({self.c0};)"
        parts = []
        for val in sorted(set(self.others), reverse=True):
            mult = self.others.count(val)
            parts.append(f"{val}^{mult}" if mult > 1 else f"{val}")
        return f"({self.c0}; {', '.join(parts)})"


def central_circuits(g: PlaneGraph) -> list[CentralCircuit]:
    """All central circuits; together they partition the edges.

    Deterministic order: by (length, smallest dart).  Requires a 4-valent
    map, since "opposite edge" needs an even rotation around each vertex.
    """
    if not g.is_quartic():
        raise ValueError("central circuits are defined for 4-valent maps")
    nd = g.n_darts
    seen = [False] * nd
    circuits = []
    for d0 in range(nd):
        if seen[d0]:
            continue
        # collect the orbit of the travel map through d0
        orbit = []
        d = d0
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = g.sigma[g.sigma[g.theta[d]]]
        # the reverse direction is a disjoint orbit over the same edges
        rev_start = g.theta[d0]
        assert not seen[rev_start], "travel orbit met its own reversal"
        d = rev_start
        while not seen[d]:
            seen[d] = True
            d = g.sigma[g.sigma[g.theta[d]]]
        darts = _canonical_rotation(g, orbit)
        visits = Counter(g.vertex_of[x] for x in darts)
        c0 = sum(1 for v, k in visits.items() if k == 2)
        circuits.append(
            CentralCircuit(darts=darts, length=len(darts), self_intersections=c0)
        )
    circuits.sort(key=lambda c: (c.length, c.darts[0]))
    return circuits


def _canonical_rotation(g: PlaneGraph, orbit: list[int]) -> tuple[int, ...]:
    """Rotate the walk (choosing between the two directions) canonically."""
    reverse = []
    d = g.theta[orbit[0]]
    for _ in orbit:
        reverse.append(d)
        d = g.sigma[g.sigma[g.theta[d]]]
    best = None
    for seq in (orbit, reverse):
        lo = seq.index(min(seq))
        rotated = tuple(seq[lo:] + seq[:lo])
        if best is None or rotated < best:
            best = rotated
    return best


def cc_vector(g: PlaneGraph) -> CCVector:
    simple = []
    selfint = []
    for c in central_circuits(g):
        (selfint if c.self_intersections else simple).append(c.length)
    return CCVector(simple=tuple(sorted(simple)), self_intersecting=tuple(sorted(selfint)))


def intersection_vector(g: PlaneGraph, c: CentralCircuit) -> IntersectionVector:
    """Int(c) against all other circuits of g.

    Raises ValueError when c is not one of g's circuits.
    """
    all_circuits = central_circuits(g)
    if c not in all_circuits:
        raise ValueError("circuit does not belong to this graph")
    mine = c.vertex_multiset(g)
    others = []
    for other in all_circuits:
        if other == c:
            continue
        shared = sum(1 for v in other.vertex_multiset(g) if v in mine)
        if shared:
            others.append(shared)
    others.sort(reverse=True)
    return IntersectionVector(c0=c.self_intersections, others=tuple(others))


def is_pure(g: PlaneGraph) -> bool:
    """True when every central circuit is simple; then n must be even."""
    circuits = central_circuits(g)
    pure = all(c.self_intersections == 0 for c in circuits)
    if pure:
        assert g.n_vertices % 2 == 0, "pure map with odd vertex count"
    return pure


def is_balanced(g: PlaneGraph) -> bool:
    """Circuits of equal length all share one intersection vector."""
    by_length: dict[int, set[tuple]] = {}
    for c in central_circuits(g):
        iv = intersection_vector(g, c)
        by_length.setdefault(c.length, set()).add((iv.c0, iv.others))
    return all(len(vs) == 1 for vs in by_length.values())


def class_bipartition(g: PlaneGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Split the vertices of a one-circuit map into Class I / Class II.

    Orient the unique circuit from its lexicographically least dart; chess-
    color the faces (the dual of a 4-valent map is bipartite) and anchor the
    coloring at the face owning dart 0.  A vertex is Class I when its two
    inbound passage ends flank a corner of an anchored-class face.  The
    result is recomputed under the reversed orientation and must agree,
    which makes the choice conventions inert.

    Raises ValueError when the map has more than one central circuit.
    """
    circuits = central_circuits(g)
    if len(circuits) != 1:
        raise ValueError(f"map has {len(circuits)} central circuits, need exactly 1")
    circuit = circuits[0]
    colors = _face_two_coloring(g)
    anchored = colors[g.face_index()[0]]

    def classify(darts: tuple[int, ...]) -> tuple[frozenset[int], frozenset[int]]:
        # in-slot at a vertex: the far dart theta[d] of each walk dart d
        in_slots: dict[int, list[int]] = {}
        for d in darts:
            v = g.vertex_of[g.theta[d]]
            in_slots.setdefault(v, []).append(g.theta[d])
        one, two = set(), set()
        for v, slots in in_slots.items():
            assert len(slots) == 2
            a, b = slots
            # corner between the two in-slots: b == sigma(a) or a == sigma(b)
            if g.sigma[a] == b:
                corner_dart = b
            else:
                assert g.sigma[b] == a, "inbound slots are not adjacent"
                corner_dart = a
            face_color = colors[g.face_index()[corner_dart]]
            (one if face_color == anchored else two).add(v)
        return frozenset(one), frozenset(two)

    forward = classify(circuit.darts)
    backward = classify(tuple(g.theta[d] for d in reversed(circuit.darts)))
    assert forward == backward, "bipartition depends on circuit orientation"
    return forward


def _face_two_coloring(g: PlaneGraph) -> list[int]:
    """Chess coloring of faces; exists because every vertex degree is even."""
    fi = g.face_index()
    nfaces = len(g.faces())
    colors: list[Optional[int]] = [None] * nfaces
    colors[0] = 0
    stack = [0]
    darts_by_face: dict[int, tuple[int, ...]] = dict(enumerate(g.faces()))
    while stack:
        f = stack.pop()
        for d in darts_by_face[f]:
            other = fi[g.theta[d]]
            if colors[other] is None:
                colors[other] = 1 - colors[f]
                stack.append(other)
            elif colors[other] == colors[f]:
                raise ValueError("face 2-coloring failed; map is not 4-valent-even")
    return [c for c in colors if c is not None]
