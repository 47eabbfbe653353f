"""Automorphism groups of plane maps and Schoenflies labels.

An automorphism is a dart bijection commuting with the edge involution and
conjugating the rotation to itself (orientation-preserving) or its inverse
(orientation-reversing).  Since the map is connected, an element is pinned
by the image of a single dart plus the orientation, so the group order is
at most 8n.

Labeling walks the classical decision tree on the rotation subgroup
(cyclic, dihedral, or octahedral) and the shape of the reversing elements.
The key combinatorial stand-ins for geometry:

* a REFLECTION is a reversing involution that leaves some cell (vertex,
  edge, or face) invariant; an antipodal inversion leaves none, because a
  setwise-fixed disk would contain a fixed point.
* the AXIS CELLS of a rotation are its invariant cells; a nontrivial
  rotation has exactly two.  A perpendicular mirror swaps them, a mirror
  through the axis fixes both.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .planegraph import PlaneGraph

Cell = tuple[str, int]


@dataclass(frozen=True)
class MapAutomorphism:
    dart_permutation: tuple[int, ...]
    orientation_preserving: bool

    def order(self) -> int:
        perm = self.dart_permutation
        seen = [False] * len(perm)
        out = 1
        for start in range(len(perm)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                length += 1
            out = lcm(out, length)
        return out


def automorphisms(g: PlaneGraph) -> list[MapAutomorphism]:
    """The full automorphism group, identity first."""
    cached = g._cache.get("automorphisms")
    if cached is not None:
        return cached
    nd = g.n_darts
    sig, thi, sinv = g.sigma, g.theta, g.sigma_inv()
    out = []
    for preserve in (True, False):
        rot = sig if preserve else sinv
        for target in range(nd):
            m = [-1] * nd
            m[0] = target
            stack = [0]
            ok = True
            while stack and ok:
                x = stack.pop()
                for nxt, img in ((sig[x], rot[m[x]]), (thi[x], thi[m[x]])):
                    if m[nxt] == -1:
                        m[nxt] = img
                        stack.append(nxt)
                    elif m[nxt] != img:
                        ok = False
                        break
            if ok and len(set(m)) == nd:
                out.append(MapAutomorphism(tuple(m), preserve))
    perms = {a.dart_permutation for a in out}
    assert out[0].dart_permutation == tuple(range(nd))
    for a in out:  # closure; inverses follow for a finite group
        for b in out:
            composed = tuple(a.dart_permutation[x] for x in b.dart_permutation)
            assert composed in perms, "automorphism set not closed"
    g._cache["automorphisms"] = out
    return out


def invariant_cells(g: PlaneGraph, a: MapAutomorphism) -> set[Cell]:
    cells = set()
    for v in range(g.n_vertices):
        if _vertex_image(g, a, v) == v:
            cells.add(("v", v))
    for d, dd in g.edges():
        if _edge_image(g, a, d) == d:
            cells.add(("e", d))
    fi = g.face_index()
    for f in range(len(g.faces())):
        if _face_image(g, a, f) == f:
            cells.add(("f", f))
    return cells


def _vertex_image(g: PlaneGraph, a: MapAutomorphism, v: int) -> int:
    return g.vertex_of[a.dart_permutation[g.vertex_darts(v)[0]]]


def _edge_image(g: PlaneGraph, a: MapAutomorphism, min_dart: int) -> int:
    img = a.dart_permutation[min_dart]
    return min(img, g.theta[img])


def _face_image(g: PlaneGraph, a: MapAutomorphism, f: int) -> int:
    # a reversing element conjugates the face walk sigma@theta to
    # sigma^-1@theta = theta@(sigma@theta)^-1@theta, so the image face's
    # dart set is theta applied to the image of the original dart set
    img = a.dart_permutation[g.faces()[f][0]]
    if not a.orientation_preserving:
        img = g.theta[img]
    return g.face_index()[img]


def _cell_image(g: PlaneGraph, a: MapAutomorphism, cell: Cell) -> Cell:
    kind, idx = cell
    if kind == "v":
        return ("v", _vertex_image(g, a, idx))
    if kind == "e":
        return ("e", _edge_image(g, a, idx))
    return ("f", _face_image(g, a, idx))


def point_group(g: PlaneGraph) -> str:
    """Schoenflies label of the map's symmetry, e.g. "D4h" or "Cs"."""
    group = automorphisms(g)
    plus = [a for a in group if a.orientation_preserving]
    k = len(plus)
    assert len(group) in (k, 2 * k)
    r_max = max(a.order() for a in plus)
    rotations = [a for a in plus if a.order() == r_max]

    if r_max == k:
        base = ("C", k)
    elif 2 * r_max == k:
        base = ("D", r_max)
    elif k == 24 and r_max == 4:
        base = ("O", 24)
    else:
        raise AssertionError(f"rotation group of order {k}, max rotation {r_max}")

    if len(group) == k:
        kind, n = base
        label = {"C": f"C{n}", "D": f"D{n}", "O": "O"}[kind]
        return _checked(label, len(group))

    reversing = [a for a in group if not a.orientation_preserving]
    reflections = [
        a for a in reversing if a.order() == 2 and invariant_cells(g, a)
    ]
    kind, n = base
    if kind == "O":
        return _checked("Oh", len(group))
    if kind == "C" and n == 1:
        return _checked("Cs" if reflections else "Ci", len(group))

    # poles of a chosen maximal rotation; exactly two invariant cells
    axis = sorted(invariant_cells(g, rotations[0]))
    assert len(axis) == 2, f"rotation fixes {len(axis)} cells"
    pole_a, pole_b = axis

    def fixes_poles(a: MapAutomorphism) -> bool:
        return _cell_image(g, a, pole_a) == pole_a

    def swaps_poles(a: MapAutomorphism) -> bool:
        return _cell_image(g, a, pole_a) == pole_b

    if kind == "C":
        if any(fixes_poles(a) for a in reflections):
            label = f"C{n}v"
        elif any(swaps_poles(a) for a in reflections):
            label = f"C{n}h"
        else:
            label = f"S{2 * n}"
        return _checked(label, len(group))

    label = f"D{n}h" if any(swaps_poles(a) for a in reflections) else f"D{n}d"
    return _checked(label, len(group))


def _checked(label: str, group_order: int) -> str:
    assert group_order == _label_order(label), (label, group_order)
    return label


def _label_order(label: str) -> int:
    if label == "O":
        return 24
    if label == "Oh":
        return 48
    if label in ("Cs", "Ci"):
        return 2
    kind = label[0]
    if label[-1] in "vhd":
        n = int(label[1:-1])
        return 2 * n if kind == "C" else 4 * n
    n = int(label[1:])
    if kind == "S":
        return n
    return n if kind == "C" else 2 * n
