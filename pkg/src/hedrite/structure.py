"""Structural analysis: rail-roads, curvature graph, patches, families.

Rail-roads and pseudo-roads are both corridor walks through 4-gons, always
leaving a 4-gon by the edge opposite the entry edge.  A corridor either
closes up into a circuit of 4-gons (a rail-road) or runs between two curved
faces (a pseudo-road, an edge of the curvature graph).  The walk is
deterministic in both directions, so corridors never merge and the
classification is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .circuits import CentralCircuit, central_circuits, cc_vector
from .planegraph import PlaneGraph


@dataclass(frozen=True)
class RailRoad:
    """A closed circuit of 4-gons, each entered and left on opposite edges.

    Attributes:
        faces: the visited face indices in corridor order (cyclic; a face
            occurs twice when the rail-road crosses itself).
        self_intersecting: whether some 4-gon is traversed via both of its
            opposite-edge pairs.
        bounding_circuits: the central circuits carrying the rail edges;
            two parallel ones normally, possibly one for a crossing road.
    """

    faces: tuple[int, ...]
    self_intersecting: bool
    bounding_circuits: tuple[CentralCircuit, ...]


@dataclass(frozen=True)
class CurvatureGraph:
    """Multigraph on the curved (2-, 3-gonal) faces; edges are pseudo-roads.

    Attributes:
        nodes: face indices of the 2- and 3-gons.
        edges: (face_a, face_b, crossed_edges) triples, one per pseudo-road;
            crossed_edges lists the graph edges the corridor crosses (its
            first entry borders face_a, its last borders face_b).  A shared
            edge between two curved faces is a length-0 pseudo-road whose
            crossed_edges has one entry.
    """

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, tuple[int, ...]], ...]

    def degree(self, node: int) -> int:
        deg = 0
        for a, b, _ in self.edges:
            deg += (a == node) + (b == node)
        return deg


@dataclass(frozen=True)
class FamilyLabel:
    """Which non-3-connected family a graph belongs to, if any."""

    kind: str  # one of I6 | I5 | I4 | J4 | K4 | none
    m: Optional[int] = None


@dataclass(frozen=True)
class TwoGonReport:
    adjacent_2gons: bool
    vertex_sharing_2gons: bool
    forced: Optional[str]  # classification forced by either flag


# -- connectivity -----------------------------------------------------------


def vertex_connectivity_class(g: PlaneGraph) -> int:
    """Exact connectivity class: 1 (cut vertex), 2 (cut pair), or 3 (>= 3).

    Exhaustive removal of single vertices and pairs; a removal that leaves
    at most one nonempty component is not a disconnection, so tiny graphs
    (n <= 3) class as >= 3 when connected.
    """
    n = g.n_vertices
    adj: list[set[int]] = [set() for _ in range(n)]
    for d in range(g.n_darts):
        adj[g.vertex_of[d]].add(g.vertex_of[g.theta[d]])

    def components_without(removed: tuple[int, ...]) -> int:
        alive = [v for v in range(n) if v not in removed]
        if not alive:
            return 0
        seen = set()
        comps = 0
        for v0 in alive:
            if v0 in seen:
                continue
            comps += 1
            stack = [v0]
            seen.add(v0)
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in removed and w not in seen:
                        seen.add(w)
                        stack.append(w)
        return comps

    if components_without(()) > 1:
        return 1  # already disconnected; callers validate beforehand
    for v in range(n):
        if components_without((v,)) > 1:
            return 1
    for v in range(n):
        for w in range(v + 1, n):
            if components_without((v, w)) > 1:
                return 2
    return 3


# -- corridors through 4-gons ------------------------------------------------


def _face_data(g: PlaneGraph):
    faces = g.faces()
    fi = g.face_index()
    return faces, fi


def _corridor(g: PlaneGraph, exit_dart: int):
    """Cross edges through opposite sides of 4-gons until a non-4-gon.

    Yields (face_entered, entry_dart) after each crossing; stops after
    yielding a non-4-gon face.  Starting from `exit_dart` on the boundary
    of the face being left.
    """
    faces, fi = _face_data(g)
    d = exit_dart
    while True:
        entry = g.theta[d]
        f = fi[entry]
        yield f, entry
        if len(faces[f]) != 4:
            return
        pos = faces[f].index(entry)
        d = faces[f][(pos + 2) % 4]


def rail_roads(g: PlaneGraph) -> list[RailRoad]:
    """All maximal closed circuits of 4-gons, with crossing flags."""
    faces, fi = _face_data(g)
    circuits = central_circuits(g)
    edge_to_circuit: dict[int, int] = {}
    for ci, c in enumerate(circuits):
        for d in c.darts:
            edge_to_circuit[min(d, g.theta[d])] = ci

    visited: set[tuple[int, int]] = set()  # (face, opposite-pair index)
    roads = []
    for f, darts in enumerate(faces):
        if len(darts) != 4:
            continue
        for pair in (0, 1):
            if (f, pair) in visited:
                continue
            # walk forward, leaving f across the edge of darts[pair]
            road_faces = []
            rail_circuits = set()
            state = (f, darts[pair])
            closed = False
            while True:
                cur_f, exit_dart = state
                cur_darts = faces[cur_f]
                pos = cur_darts.index(exit_dart)
                pair_idx = pos % 2
                if (cur_f, pair_idx) in visited:
                    break
                visited.add((cur_f, pair_idx))
                road_faces.append(cur_f)
                for k in (pos + 1, pos + 3):
                    rail = cur_darts[k % 4]
                    rail_circuits.add(edge_to_circuit[min(rail, g.theta[rail])])
                entry = g.theta[exit_dart]
                nxt_f = fi[entry]
                if len(faces[nxt_f]) != 4:
                    break
                npos = faces[nxt_f].index(entry)
                nxt_exit = faces[nxt_f][(npos + 2) % 4]
                if (nxt_f, nxt_exit) == (f, darts[pair]):
                    closed = True
                    break
                state = (nxt_f, nxt_exit)
            if not closed:
                continue
            crossing = len(set(road_faces)) < len(road_faces)
            bounding = tuple(
                sorted((circuits[ci] for ci in rail_circuits), key=lambda c: c.darts)
            )
            roads.append(
                RailRoad(
                    faces=tuple(road_faces),
                    self_intersecting=crossing,
                    bounding_circuits=bounding,
                )
            )
    return roads


def is_irreducible(g: PlaneGraph) -> bool:
    """True when the graph contains no rail-road."""
    return not rail_roads(g)


def curvature_graph(g: PlaneGraph) -> CurvatureGraph:
    """The multigraph of curved faces joined by pseudo-roads.

    Every edge of a 2- or 3-gon starts exactly one pseudo-road, so node
    degrees equal face sizes.
    """
    faces, fi = _face_data(g)
    nodes = tuple(f for f, darts in enumerate(faces) if len(darts) in (2, 3))
    node_set = set(nodes)
    edges = []
    seen_roads = set()
    for f in nodes:
        for d in faces[f]:
            crossed = [min(d, g.theta[d])]
            end = None
            for nf, entry in _corridor(g, d):
                if nf in node_set:
                    end = nf
                    break
                crossed.append(0)  # placeholder; replaced below by exit edge
                pos = faces[nf].index(entry)
                exit_dart = faces[nf][(pos + 2) % 4]
                crossed[-1] = min(exit_dart, g.theta[exit_dart])
            assert end is not None, "corridor failed to terminate at a curved face"
            key = min(tuple(crossed), tuple(reversed(crossed)))
            if key in seen_roads:
                continue
            seen_roads.add(key)
            edges.append((f, end, tuple(crossed)))
    graph = CurvatureGraph(nodes=nodes, edges=tuple(edges))
    for f in nodes:
        assert graph.degree(f) == len(faces[f])
    return graph


# -- patches ------------------------------------------------------------------


def patch_curvature(g: PlaneGraph, region: Iterable[int]) -> int:
    """Curvature sum((4 - k) p'_k) of a disk-shaped face region.

    `region` holds face indices.  Raises ValueError when the union of the
    closed faces is not a disk (empty, not edge-connected, pinched at a
    vertex, or the whole sphere).
    """
    faces, fi = _face_data(g)
    region = sorted(set(region))
    if not region:
        raise ValueError("region is empty")
    if any(f < 0 or f >= len(faces) for f in region):
        raise ValueError("region names a nonexistent face")
    in_region = [False] * len(faces)
    for f in region:
        in_region[f] = True

    # edge-connectivity over shared edges
    seen = {region[0]}
    stack = [region[0]]
    while stack:
        f = stack.pop()
        for d in faces[f]:
            nf = fi[g.theta[d]]
            if in_region[nf] and nf not in seen:
                seen.add(nf)
                stack.append(nf)
    if len(seen) != len(region):
        raise ValueError("region is not a disk: faces are not edge-connected")

    # pinch test: the region's corners at each vertex must form one arc
    region_corner = [in_region[fi[d]] for d in range(g.n_darts)]
    for v in range(g.n_vertices):
        darts = g.vertex_darts(v)
        flips = sum(
            1
            for k in range(len(darts))
            if region_corner[darts[k]] != region_corner[darts[(k + 1) % len(darts)]]
        )
        if flips > 2:
            raise ValueError(f"region is not a disk: pinched at vertex {v}")

    verts = set()
    edge_darts = set()
    for f in region:
        for d in faces[f]:
            verts.add(g.vertex_of[d])
            edge_darts.add(min(d, g.theta[d]))
    euler = len(verts) - len(edge_darts) + len(region)
    if euler != 1:
        raise ValueError(f"region is not a disk: V-E+F = {euler} != 1")
    return sum(4 - len(faces[f]) for f in region)


def separating_ring(
    g: PlaneGraph, c1: CentralCircuit, c2: CentralCircuit
) -> Optional[RailRoad]:
    """A rail-road separating two disjoint circuits, or None when they meet.

    Implements the equivalence: two distinct central circuits are disjoint
    exactly when some ring of 4-gons separates them.  Both circuits of a
    returned ring are necessarily simple (asserted).
    """
    if c1 == c2:
        raise ValueError("need two distinct circuits")
    v1 = set(c1.vertex_multiset(g))
    v2 = set(c2.vertex_multiset(g))
    if v1 & v2:
        return None
    faces, fi = _face_data(g)

    def circuit_faces(c: CentralCircuit) -> set[int]:
        out = set()
        for d in c.darts:
            out.add(fi[d])
            out.add(fi[g.theta[d]])
        return out

    f1, f2 = circuit_faces(c1), circuit_faces(c2)
    for road in rail_roads(g):
        blocked = set(road.faces)
        comp_of: dict[int, int] = {}
        comp = 0
        for f0 in range(len(faces)):
            if f0 in blocked or f0 in comp_of:
                continue
            stack = [f0]
            comp_of[f0] = comp
            while stack:
                f = stack.pop()
                for d in faces[f]:
                    nf = fi[g.theta[d]]
                    if nf not in blocked and nf not in comp_of:
                        comp_of[nf] = comp
                        stack.append(nf)
            comp += 1
        sides1 = {comp_of[f] for f in f1 if f not in blocked}
        sides2 = {comp_of[f] for f in f2 if f not in blocked}
        if sides1 and sides2 and not (sides1 & sides2):
            assert c1.self_intersections == 0 and c2.self_intersections == 0
            return road
    return None


# -- 4-hedrites with two circuits ---------------------------------------------


def build_4hedrite(n: int, j: int) -> PlaneGraph:
    """The 4-hedrite whose circuits are a ring of n vertices and a zigzag.

    Vertices 0..n-1 sit on a circle.  Besides the circle edges, vertex x
    carries one inner chord to (1 - x) mod n and one outer chord to
    (1 + 2j - x) mod n; both chord families are parallel, hence planar.
    The circle is one central circuit; the chords alternate inner/outer
    into the remaining circuit(s), advancing by 2j per pass.  With
    gcd(n/2, j) = 1 there are exactly two circuits and j is the shift.
    """
    if n < 2 or n % 2:
        raise ValueError("a 4-hedrite needs an even vertex count >= 2")
    if not (0 <= j <= n // 2):
        raise ValueError(f"shift {j} out of range for n={n}")
    nd = 4 * n
    sigma = [0] * nd
    theta = [0] * nd
    vertex_of = [0] * nd
    for x in range(n):
        base = 4 * x
        for k in range(4):
            sigma[base + k] = base + (k + 1) % 4
            vertex_of[base + k] = x
        # slots: 0 circle to x-1, 1 inner chord, 2 circle to x+1, 3 outer chord
        theta[base + 2] = 4 * ((x + 1) % n) + 0
        theta[base + 0] = 4 * ((x - 1) % n) + 2
        theta[base + 1] = 4 * ((1 - x) % n) + 1
        theta[base + 3] = 4 * ((1 + 2 * j - x) % n) + 3
    g = PlaneGraph(sigma=tuple(sigma), theta=tuple(theta), vertex_of=tuple(vertex_of))
    errors = g.validate(require_quartic=True)
    assert not errors, errors
    return g


def shift(g: PlaneGraph) -> tuple[int, int]:
    """Extract (n, j) with 0 <= j <= n/4 from a two-circuit 4-hedrite.

    Several shifts can produce one graph; the minimal valid j is returned.
    The gcd(n/2, j) = 1 normal-form condition is documented, not enforced.
    Raises ValueError when the graph does not have exactly two circuits.
    """
    if g.is_i_hedrite() != 4:
        raise ValueError("shift is defined for 4-hedrites")
    if len(central_circuits(g)) != 2:
        raise ValueError("shift needs exactly two central circuits")
    n = g.n_vertices
    code = g.canonical_code()
    for j in range(n // 4 + 1):
        if build_4hedrite(n, j).canonical_code() == code:
            return n, j
    raise AssertionError(f"no shift reproduces this {n}-vertex 4-hedrite")


# -- special families ----------------------------------------------------------


def _from_edge_rotations(rotations: list[list[object]]) -> PlaneGraph:
    """Assemble a map from per-vertex ccw lists of edge tokens.

    Each token names one edge and must occur at exactly two positions
    overall (loops are not supported).  Darts are numbered 4v + slot.
    """
    ends: dict[object, list[int]] = {}
    for v, rot in enumerate(rotations):
        assert len(rot) == 4
        for slot, token in enumerate(rot):
            ends.setdefault(token, []).append(4 * v + slot)
    nd = 4 * len(rotations)
    sigma = [0] * nd
    theta = [0] * nd
    vertex_of = [0] * nd
    for v in range(len(rotations)):
        for slot in range(4):
            sigma[4 * v + slot] = 4 * v + (slot + 1) % 4
            vertex_of[4 * v + slot] = v
    for token, pair in ends.items():
        assert len(pair) == 2, f"edge {token!r} has {len(pair)} ends"
        theta[pair[0]], theta[pair[1]] = pair[1], pair[0]
    g = PlaneGraph(sigma=tuple(sigma), theta=tuple(theta), vertex_of=tuple(vertex_of))
    errors = g.validate(require_quartic=True)
    assert not errors, errors
    return g


def _chain_hedrite(m: int, cap_first: str, cap_last: str) -> PlaneGraph:
    """Chain of m vertex pairs joined by crossing quadruples, ends capped.

    Columns k = 0..m-1 hold vertices a_k = 2k and b_k = 2k+1; consecutive
    columns are joined by the four edges {a,b}_k x {a,b}_{k+1}, drawn on a
    cylinder with a quarter-turn twist per column.  A "digon" cap doubles
    the edge a-b of its end column (one 2-gon, two 3-gons); a "bowtie" cap
    adds one extra vertex doubly joined to both column vertices (two
    2-gons meeting there, no 3-gons).  Digon+digon is the 2m-vertex
    6-hedrite family, digon+bowtie the (2m+1)-vertex 5-hedrite one,
    bowtie+bowtie an alternative form of the (2m+2)-vertex 4-hedrite one.
    """
    if m < 2:
        raise ValueError("chain needs at least two columns")
    rotations: list[list[object]] = [[None] * 4 for _ in range(2 * m)]

    def band(k: int, which: str) -> tuple:
        return ("band", k, which)

    for k in range(m):
        a, b = 2 * k, 2 * k + 1
        if k + 1 < m:
            rotations[a][0] = band(k, "aa")  # rightward, quarter turn up
            rotations[a][3] = band(k, "ab")
            rotations[b][0] = band(k, "bb")
            rotations[b][3] = band(k, "ba")
        if k > 0:
            rotations[a][1] = band(k - 1, "ba")
            rotations[a][2] = band(k - 1, "aa")
            rotations[b][1] = band(k - 1, "ab")
            rotations[b][2] = band(k - 1, "bb")

    extra: list[list[object]] = []
    for side, cap in (("L", cap_first), ("R", cap_last)):
        a, b = (0, 1) if side == "L" else (2 * m - 2, 2 * m - 1)
        # cap edges fill the two slots left open at the end column; slots
        # 1,2 look leftward, 0,3 rightward, matching the band layout above
        sa = (1, 2) if side == "L" else (0, 3)
        sb = (1, 2) if side == "L" else (0, 3)
        if cap == "digon":
            up, low = (side, "capU"), (side, "capL")
            rotations[a][sa[0]], rotations[a][sa[1]] = up, low
            rotations[b][sb[0]], rotations[b][sb[1]] = low, up
        elif cap == "bowtie":
            au, al = (side, "aU"), (side, "aL")
            bu, bl = (side, "bU"), (side, "bL")
            rotations[a][sa[0]], rotations[a][sa[1]] = au, al
            if side == "L":
                rotations[b][sb[0]], rotations[b][sb[1]] = bl, bu
                extra.append([au, bu, bl, al])
            else:
                rotations[b][sb[0]], rotations[b][sb[1]] = bu, bl
                extra.append([au, al, bu, bl])
        else:
            raise ValueError(f"unknown cap {cap!r}")
    return _from_edge_rotations(rotations + extra)


def build_family(kind: str, m: int) -> PlaneGraph:
    """Construct I6/I5/I4/J4/K4 family members (m >= 2)."""
    if m < 2:
        raise ValueError("family parameter m must be >= 2")
    if kind == "I4":
        return build_4hedrite(2 * m + 2, 1)
    if kind == "K4":
        return build_4hedrite(4 * m, m)
    if kind == "J4":
        from .transform import inflate_circuit

        base = build_4hedrite(2, 0)
        return inflate_circuit(base, central_circuits(base)[0], m)
    if kind == "I6":
        return _chain_hedrite(m, "digon", "digon")
    if kind == "I5":
        return _chain_hedrite(m, "digon", "bowtie")
    raise ValueError(f"unknown family kind {kind!r}")


def classify_family(g: PlaneGraph) -> FamilyLabel:
    """Match a graph against the non-3-connected families.

    Returns the family label with its parameter, or kind="none".  Only the
    K4 family can apply to a 3-connected input.
    """
    i = g.is_i_hedrite()
    if i is None:
        raise ValueError("not an i-hedrite")
    n = g.n_vertices
    code = g.canonical_code()
    candidates: list[tuple[str, int]] = []
    if i == 6 and n % 2 == 0 and n >= 4:
        candidates.append(("I6", n // 2))
    if i == 5 and n % 2 == 1 and n >= 5:
        candidates.append(("I5", (n - 1) // 2))
    if i == 4:
        if n >= 6 and n % 2 == 0:
            candidates.append(("I4", (n - 2) // 2))
        if n >= 4:
            candidates.append(("J4", n // 2))
        if n >= 8 and n % 4 == 0:
            candidates.append(("K4", n // 4))
    for kind, m in candidates:
        if m < 2:
            continue
        try:
            if build_family(kind, m).canonical_code() == code:
                return FamilyLabel(kind=kind, m=m)
        except NotImplementedError:
            continue
    return FamilyLabel(kind="none", m=None)


def two_gon_configuration(g: PlaneGraph) -> TwoGonReport:
    """Flags for adjacent / vertex-sharing 2-gons, with forced classification.

    Adjacent 2-gons force the 2-vertex 4-hedrite or a J4 member; 2-gons
    sharing only a vertex force one of the two smallest proper graphs or an
    I4/I5 member.  The matching label is computed (and checked) whenever a
    flag fires.
    """
    faces, fi = _face_data(g)
    twos = [f for f, darts in enumerate(faces) if len(darts) == 2]
    adjacent = False
    vertex_sharing = False
    for x in range(len(twos)):
        for y in range(x + 1, len(twos)):
            ex = {min(d, g.theta[d]) for d in faces[twos[x]]}
            ey = {min(d, g.theta[d]) for d in faces[twos[y]]}
            vx = {g.vertex_of[d] for d in faces[twos[x]]}
            vy = {g.vertex_of[d] for d in faces[twos[y]]}
            if ex & ey:
                adjacent = True
            elif vx & vy:
                vertex_sharing = True
    forced = None
    if adjacent or vertex_sharing:
        forced = _forced_two_gon_label(g, adjacent)
    return TwoGonReport(
        adjacent_2gons=adjacent, vertex_sharing_2gons=vertex_sharing, forced=forced
    )


def _forced_two_gon_label(g: PlaneGraph, adjacent: bool) -> str:
    n = g.n_vertices
    code = g.canonical_code()
    if adjacent:
        if n == 2:
            return "4-hedrite 2-1"
        fam = classify_family(g)
        assert fam.kind == "J4", "adjacent 2-gons outside the J4 family"
        return f"J4 m={fam.m}"
    if n == 4 and build_4hedrite(4, 1).canonical_code() == code:
        return "4-hedrite 4-1"
    if n == 3:
        return "5-hedrite 3-1"
    fam = classify_family(g)
    assert fam.kind in ("I4", "I5"), "vertex-sharing 2-gons outside I4/I5"
    return f"{fam.kind} m={fam.m}"
