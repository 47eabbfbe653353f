"""Construct the pure irreducible 8-hedrites beyond the census range.

The classification theorem leaves exactly two of them with five central
circuits (20 and 22 vertices) and two with six (30 and 32), so a verified
pure irreducible 8-hedrite with the right vertex count, group and
CC-vector IS the cataloged graph; no figure data is needed.  We build
candidates the way the theorem's proof grows them: add one simple central
circuit to a smaller pure irreducible graph, as a closed curve crossing
edges transversally, every crossing becoming a new 4-valent vertex.  A
curve entering a 4-gon must leave through the opposite edge (any other
exit makes a 5-gon), so curves are forced through 4-gons and branch only
inside triangles; restricting to curves that visit each face at most once
keeps them simple and the search space tiny.  30-1 is also reachable as
GC_{2,1} of the octahedron, which cross-checks the cut construction.

Run from the repository root:  python3 tools/find_pure_fixtures.py
Frozen dart codes land in tests/data/.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hedrite.census import enumerate_hedrites
from hedrite.circuits import cc_vector, central_circuits, is_pure
from hedrite.planegraph import PlaneGraph, encode
from hedrite.structure import _from_edge_rotations, is_irreducible
from hedrite.symmetry import point_group
from hedrite.transform import goldberg_coxeter

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def _edge(g: PlaneGraph, d: int) -> int:
    return min(d, g.theta[d])


def curves(g: PlaneGraph, max_len: int):
    """Yield crossing cycles [a_0..a_{L-1}]: a_j enters face_of(a_j).

    Each face is visited at most once, so the curve is simple and every
    crossed edge is distinct.
    """
    faces = g.faces()
    fidx = g.face_index()

    def walk(a0: int, a: int, seen: frozenset, trail: tuple):
        f = faces[fidx[a]]
        pos = f.index(a)
        if len(f) == 4:
            exits = (f[(pos + 2) % 4],)
        else:
            exits = (f[(pos + 1) % 3], f[(pos + 2) % 3])
        for x in exits:
            nxt = g.theta[x]
            if nxt == a0:
                yield trail
            elif len(trail) < max_len and fidx[nxt] not in seen:
                yield from walk(a0, nxt, seen | {fidx[nxt]}, trail + (nxt,))

    for a0 in range(4 * g.n_vertices):
        yield from walk(a0, a0, frozenset({fidx[a0]}), (a0,))


def cut(g: PlaneGraph, crossings: tuple) -> PlaneGraph | None:
    """Insert a new central circuit crossing the given darts' edges."""
    L = len(crossings)
    at = {_edge(g, a): j for j, a in enumerate(crossings)}
    rotations: list[list[object]] = []
    for v in range(g.n_vertices):
        rot: list[object] = []
        for d in g.vertex_darts(v):
            e = _edge(g, d)
            j = at.get(e)
            if j is None:
                rot.append(("e", e))
            else:
                side = "u" if d == crossings[j] else "v"
                rot.append(("h", j, side))
        rotations.append(rot)
    # the crossing's handedness is uniform in the entering-dart convention;
    # one of the two cyclic orders is the consistent embedding
    for flip in (False, True):
        rows = list(rotations)
        for j in range(L):
            s_in, s_out = ("s", (j - 1) % L), ("s", j)
            if flip:
                s_in, s_out = s_out, s_in
            rows.append([("h", j, "u"), s_in, ("h", j, "v"), s_out])
        try:
            return _from_edge_rotations(rows)
        except AssertionError:
            continue
    return None


def verify(h: PlaneGraph, n: int, group: str, cc: str) -> bool:
    return (
        h.n_vertices == n
        and h.is_i_hedrite() == 8
        and cc_vector(h).text() == cc
        and is_pure(h)
        and is_irreducible(h)
        and point_group(h) == group
    )


def grow(base: PlaneGraph, length: int, n: int, group: str, cc: str) -> PlaneGraph:
    """Find the unique cut of `base` matching the target data."""
    found: dict[bytes, PlaneGraph] = {}
    for c in curves(base, length):
        if len(c) != length:
            continue
        h = cut(base, c)
        if h is not None and verify(h, n, group, cc):
            found[h.canonical_code()] = h
    assert len(found) == 1, f"expected one class for n={n}, got {len(found)}"
    return found.popitem()[1]


def main() -> None:
    cuboctahedron = [
        r for r in enumerate_hedrites(8, 12) if r.point_group == "Oh"
    ][0].graph
    base_14 = [r for r in enumerate_hedrites(8, 14) if r.cc_vector == "6^2,8^2;"][0].graph
    octahedron = enumerate_hedrites(8, 6)[0].graph

    g20 = grow(cuboctahedron, 8, 20, "D2d", "8^5;")
    print("20-1 built: cut of the cuboctahedron")
    g22 = grow(base_14, 8, 22, "D2h", "8^3,10^2;")
    print("22-1 built: cut of the 14-vertex four-circuit graph")
    g30 = grow(g20, 10, 30, "O", "10^6;")
    gc30 = goldberg_coxeter(octahedron, 2, 1)
    assert verify(gc30, 30, "O", "10^6;")
    assert gc30.canonical_code() == g30.canonical_code(), "cut and GC disagree"
    print("30-1 built twice: cut of 20-1 == GC_{2,1}(octahedron)")
    g32 = grow(g20, 12, 32, "D4h", "10^4,12^2;")
    print("32-1 built: cut of 20-1")

    os.makedirs(DATA_DIR, exist_ok=True)
    targets = {
        "pure8h_20_1.txt": (g20, "D2d", "8^5;", "cut of 12-vertex Oh graph"),
        "pure8h_22_1.txt": (g22, "D2h", "8^3,10^2;", "cut of 14-vertex graph"),
        "pure8h_30_1.txt": (g30, "O", "10^6;", "GC_{2,1} of the octahedron"),
        "pure8h_32_1.txt": (g32, "D4h", "10^4,12^2;", "cut of the 20-vertex graph"),
    }
    for name, (h, group, cc, how) in targets.items():
        path = os.path.join(DATA_DIR, name)
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"# n={h.n_vertices} group={group} cc={cc} via: {how}\n")
            fh.write(encode(h))
        print("wrote", os.path.relpath(path))


if __name__ == "__main__":
    main()
