"""Alternating-link projections of i-hedrites.

A 4-valent plane graph is the shadow of a link diagram: vertices are
crossings and the strands are the central circuits, which travel straight
through every vertex.  Faces of such a graph 2-color like a checkerboard
(every vertex has even degree), and giving the strand with the black
corner on its left the upper position at each crossing makes the diagram
alternating.  The global mirror is fixed by requiring the pass through
dart 0 to go over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import central_circuits
from .planegraph import PlaneGraph
from .structure import vertex_connectivity_class

__all__ = [
    "LinkDiagram",
    "to_link",
    "gauss_code",
    "gauss_text",
    "dt_code",
    "dt_text",
]


@dataclass(frozen=True)
class LinkDiagram:
    """An alternating diagram: strands of (crossing, goes-over) passes.

    Each strand lists its passes in walk order; a pass is the vertex it
    crosses plus the side of the crossing it takes.  over_passes holds
    the least dart of every pass on the upper side, so the mirror
    convention stays checkable after the dart structure is gone.
    composite means some 2-vertex cut splits the crossings in two.
    """

    components: tuple[tuple[tuple[int, bool], ...], ...]
    over_passes: frozenset[int]
    composite: bool

    @property
    def n_crossings(self) -> int:
        return sum(len(s) for s in self.components) // 2


def _checkerboard(g: PlaneGraph) -> list[bool]:
    """Proper 2-coloring of faces, as a per-face flag; face 0 is black."""
    faces = g.faces()
    fidx = g.face_index()
    color: list[bool] = [False] * len(faces)
    done = [False] * len(faces)
    done[0] = True
    queue = [0]
    for f in queue:
        for d in faces[f]:
            nb = fidx[g.theta[d]]
            if not done[nb]:
                done[nb] = True
                color[nb] = not color[f]
                queue.append(nb)
    return color


def to_link(g: PlaneGraph) -> LinkDiagram:
    """The alternating diagram over g; strands follow central_circuits.

    The over/under choice at one crossing forces the whole diagram; of
    the two consistent assignments, the one sending dart 0's pass over
    is returned.
    """
    fidx = g.face_index()
    black = _checkerboard(g)
    sig = g.sigma

    def pass_id(d: int) -> int:
        return min(d, sig[sig[d]])

    # a pass goes over iff the face at its out-dart's corner is black
    over = {}
    for d in range(g.n_darts):
        over[pass_id(d)] = black[fidx[d]]
    if not over[pass_id(0)]:
        over = {p: not o for p, o in over.items()}

    strands = tuple(
        tuple((g.vertex_of[d], over[pass_id(d)]) for d in c.darts)
        for c in central_circuits(g)
    )
    return LinkDiagram(
        components=strands,
        over_passes=frozenset(p for p, o in over.items() if o),
        composite=vertex_connectivity_class(g) == 2,
    )


def gauss_code(link: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    """Signed crossing sequences, one per strand.

    Crossings are relabeled 1..n by first appearance along the strands
    in order; an entry is positive exactly on the over pass.
    """
    labels: dict[int, int] = {}
    out = []
    for strand in link.components:
        seq = []
        for v, over in strand:
            k = labels.setdefault(v, len(labels) + 1)
            seq.append(k if over else -k)
        out.append(tuple(seq))
    return tuple(out)


def gauss_text(link: LinkDiagram) -> str:
    """Gauss code as text: entries space-separated, components `/`-joined."""
    return "/".join(" ".join(str(x) for x in seq) for seq in gauss_code(link))


def _dt_key(code: tuple[int, ...]) -> tuple[tuple[int, bool], ...]:
    # orders 4 before -4 before 6; keeps alternating codes all-positive
    return tuple((abs(x), x < 0) for x in code)


def dt_code(link: LinkDiagram) -> tuple[int, ...]:
    """Canonical Dowker-Thistlethwaite sequence of a one-strand diagram.

    Passes are numbered 1..2n along the strand; each crossing pairs an
    odd number with an even one, and the code lists the even partners of
    1, 3, 5, ..., negated where the even pass goes over.  The result is
    minimized over every start, both directions and both mirrors, under
    the order putting a positive entry before its negative.
    """
    if len(link.components) != 1:
        raise ValueError(
            f"DT codes need a knot; diagram has {len(link.components)} strands"
        )
    passes = link.components[0]
    m = len(passes)
    best = None
    for flip in (False, True):
        for start in range(m):
            for step in (1, -1):
                odd_of: dict[int, int] = {}
                even_of: dict[int, int] = {}
                for t in range(m):
                    v, over = passes[(start + step * t) % m]
                    num = t + 1
                    if num % 2:
                        odd_of[v] = num
                    else:
                        even_of[v] = -num if over ^ flip else num
                if len(odd_of) != m // 2:
                    # a planar strand alternates parity at every crossing
                    raise AssertionError("odd/even pairing failed")
                code = tuple(even_of[v] for _, v in sorted(zip(odd_of.values(), odd_of)))
                key = _dt_key(code)
                if best is None or key < best[0]:
                    best = (key, code)
    return best[1]


def dt_text(link: LinkDiagram) -> str:
    """DT code as text: space-separated even integers."""
    return " ".join(str(x) for x in dt_code(link))
