"""Dart-based plane graphs: decoding, faces, dual, medial, canonical codes.

A map on the sphere is stored as a rotation system over darts (directed
half-edges).  Darts are integers 0..D-1.  Three arrays describe the map:

    theta[d]      the other dart of d's edge (a fixed-point-free involution)
    sigma[d]      the next dart counterclockwise around d's vertex
    vertex_of[d]  the vertex owning d

Face convention, used everywhere in this package: faces are the orbits of

    phi(d) = sigma[theta[d]]

i.e. travel along d to its far end, then turn one step counterclockwise.
On the 2-vertex graph with four parallel edges this yields four 2-gonal
faces, so V - E + F = 2 - 4 + 4 = 2 as required.

Vertices may have any degree >= 2 internally (duals of 4-valent maps are
not 4-valent), but the dart-code text format and the enumeration pipeline
both deal in 4-valent maps only, and decode() enforces that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class FaceVector:
    """Face-size census of a plane graph.

    Attributes:
        p: mapping face size k -> number of k-gonal faces.
        i_value: p_2 + p_3 when every face is a 2-, 3- or 4-gon, else None.
            For an i-hedrite this equals i, and (p_2, p_3, p_4) =
            (8-i, 2i-8, n+2-i).
    """

    p: dict[int, int]
    i_value: Optional[int]

    def __getitem__(self, k: int) -> int:
        return self.p.get(k, 0)

    def curvature(self) -> int:
        """Sum of (4 - k) p_k over all faces; 8 for every spherical 4-valent map."""
        return sum((4 - k) * cnt for k, cnt in self.p.items())


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Immutable spherical map given by (sigma, theta, vertex_of) over darts.

    Instances are value objects: all analysis lives in pure methods, results
    are cached on first use, and sharing across threads is safe.
    """

    sigma: tuple[int, ...]
    theta: tuple[int, ...]
    vertex_of: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- basic shape ----------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_vertices(self) -> int:
        return max(self.vertex_of) + 1 if self.vertex_of else 0

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    def degree(self, v: int) -> int:
        return sum(1 for x in self.vertex_of if x == v)

    def vertex_darts(self, v: int) -> tuple[int, ...]:
        """Darts of v in counterclockwise order, starting at the smallest."""
        start = min(d for d in range(self.n_darts) if self.vertex_of[d] == v)
        out = [start]
        d = self.sigma[start]
        while d != start:
            out.append(d)
            d = self.sigma[d]
        return tuple(out)

    def is_quartic(self) -> bool:
        counts = [0] * (self.n_vertices)
        for v in self.vertex_of:
            counts[v] += 1
        return all(c == 4 for c in counts)

    def sigma_inv(self) -> tuple[int, ...]:
        if "sigma_inv" not in self._cache:
            inv = [0] * self.n_darts
            for d, s in enumerate(self.sigma):
                inv[s] = d
            self._cache["sigma_inv"] = tuple(inv)
        return self._cache["sigma_inv"]

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once, as its (min dart, max dart) pair, sorted."""
        return [(d, self.theta[d]) for d in range(self.n_darts) if d < self.theta[d]]

    def edge_index(self) -> dict[int, int]:
        """dart -> index of its edge in edges() order."""
        if "edge_index" not in self._cache:
            idx = {}
            for k, (a, b) in enumerate(self.edges()):
                idx[a] = k
                idx[b] = k
            self._cache["edge_index"] = idx
        return self._cache["edge_index"]

    # -- validation ------------------------------------------------------

    def validate(self, require_quartic: bool = False) -> list[str]:
        """Collect structural violations as human-readable strings.

        Checks permutation well-formedness, the involution law, loops,
        connectivity and genus.  An empty list means the map is a valid
        spherical multigraph embedding.
        """
        errors: list[str] = []
        nd = self.n_darts
        if nd == 0 or nd % 2:
            return [f"dart count {nd} is not a positive even number"]
        if sorted(self.sigma) != list(range(nd)):
            return ["vertex rotation is not a permutation of the darts"]
        if len(self.theta) != nd or sorted(self.theta) != list(range(nd)):
            return ["edge pairing is not a permutation of the darts"]
        for d in range(nd):
            if self.theta[d] == d:
                errors.append(f"non-involutive pairing: dart {d} is its own partner")
                break
            if self.theta[self.theta[d]] != d:
                errors.append(f"non-involutive pairing at dart {d}")
                break
        if errors:
            return errors
        for d in range(nd):
            if self.vertex_of[self.sigma[d]] != self.vertex_of[d]:
                errors.append(f"rotation at dart {d} leaves vertex {self.vertex_of[d]}")
                return errors
        nv = self.n_vertices
        if sorted(set(self.vertex_of)) != list(range(nv)):
            return ["vertex numbering has gaps"]
        for d in range(nd):
            if self.vertex_of[self.theta[d]] == self.vertex_of[d]:
                errors.append(f"loop at vertex {self.vertex_of[d]} (dart {d})")
                return errors
        if require_quartic:
            counts = [0] * nv
            for v in self.vertex_of:
                counts[v] += 1
            for v, c in enumerate(counts):
                if c != 4:
                    errors.append(f"vertex {v} has degree {c}, expected 4")
                    return errors
        # connectivity over the dart groupoid
        seen = [False] * nd
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], self.theta[d]):
                if not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        if count != nd:
            errors.append("map is disconnected")
            return errors
        f = len(self.faces())
        if nv - self.n_edges + f != 2:
            errors.append(
                f"nonzero genus: V-E+F = {nv}-{self.n_edges}+{f} != 2"
            )
        return errors

    # -- faces -----------------------------------------------------------

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of phi = sigma o theta, each rotated to start at its min dart.

        Sorted by starting dart; together they partition the darts.
        """
        if "faces" not in self._cache:
            nd = self.n_darts
            seen = [False] * nd
            out = []
            for d0 in range(nd):
                if seen[d0]:
                    continue
                cyc = []
                d = d0
                while not seen[d]:
                    seen[d] = True
                    cyc.append(d)
                    d = self.sigma[self.theta[d]]
                out.append(tuple(cyc))
            self._cache["faces"] = tuple(out)
        return self._cache["faces"]

    def face_index(self) -> dict[int, int]:
        """dart -> index into faces()."""
        if "face_index" not in self._cache:
            fi = {}
            for k, f in enumerate(self.faces()):
                for d in f:
                    fi[d] = k
            self._cache["face_index"] = fi
        return self._cache["face_index"]

    def face_vector(self) -> FaceVector:
        p: dict[int, int] = {}
        for f in self.faces():
            p[len(f)] = p.get(len(f), 0) + 1
        i_value = None
        if set(p) <= {2, 3, 4}:
            i_value = p.get(2, 0) + p.get(3, 0)
        return FaceVector(p=p, i_value=i_value)

    def is_i_hedrite(self) -> Optional[int]:
        """Return i in 4..8 when this map is an i-hedrite, else None.

        Requires 4-valence, faces only of sizes 2..4, and 2-connectivity
        (delegated to structure.vertex_connectivity_class).
        """
        if not self.is_quartic():
            return None
        fv = self.face_vector()
        if fv.i_value is None or not (4 <= fv.i_value <= 8):
            return None
        from .structure import vertex_connectivity_class

        if vertex_connectivity_class(self) < 2:
            return None
        return fv.i_value

    # -- derived maps ----------------------------------------------------

    def dual(self) -> "PlaneGraph":
        """Plane dual on the same darts: vertices become faces and vice versa.

        dual() is an exact involution here (not just up to isomorphism):
        the dual's rotation is phi, and phi of the dual is sigma back.
        """
        fi = self.face_index()
        phi = tuple(self.sigma[self.theta[d]] for d in range(self.n_darts))
        return PlaneGraph(
            sigma=phi,
            theta=self.theta,
            vertex_of=tuple(fi[d] for d in range(self.n_darts)),
        )

    def mirror(self) -> "PlaneGraph":
        """The reflected map: all vertex rotations reversed."""
        return PlaneGraph(
            sigma=self.sigma_inv(), theta=self.theta, vertex_of=self.vertex_of
        )

    def medial(self) -> "PlaneGraph":
        """Medial map: one 4-valent vertex per edge of this graph.

        Medial darts come in pairs per dart x of the input: 2x sits at the
        edge-vertex of sigma^-1(x)'s edge, 2x+1 at the edge-vertex of x's
        edge; the underlying medial edge joins the two edges flanking the
        face corner (sigma^-1(x), x).  Faces of the result are the input's
        faces (even darts) plus one k-gon per degree-k input vertex (odd
        darts), which is the genus-0 bookkeeping expected of the medial.
        """
        sig = self.sigma
        thi = self.theta
        sinv = self.sigma_inv()
        eidx = self.edge_index()
        nd = self.n_darts
        msigma = [0] * (2 * nd)
        mtheta = [0] * (2 * nd)
        mvert = [0] * (2 * nd)
        for x in range(nd):
            mtheta[2 * x] = 2 * x + 1
            mtheta[2 * x + 1] = 2 * x
            msigma[2 * x] = 2 * sinv[x] + 1
            msigma[2 * x + 1] = 2 * sig[thi[x]]
            mvert[2 * x] = eidx[sinv[x]]
            mvert[2 * x + 1] = eidx[x]
        return PlaneGraph(sigma=tuple(msigma), theta=tuple(mtheta), vertex_of=tuple(mvert))

    # -- canonical form ----------------------------------------------------

    def canonical_code(self) -> bytes:
        """Complete isomorphism invariant, reflections identified.

        BFS dart relabeling from every (start dart, orientation) pair; the
        code records, label by label, the labels of sigma^{+-1} and theta
        images.  The lexicographic minimum over all 8E starts is returned,
        serialized to bytes.  Equal codes <=> isomorphic as spherical maps
        allowing orientation reversal.
        """
        if "code" in self._cache:
            return self._cache["code"]
        best = self._min_code_tuple()
        blob = json.dumps(best, separators=(",", ":")).encode()
        self._cache["code"] = blob
        return blob

    def _min_code_tuple(self) -> tuple[int, ...]:
        nd = self.n_darts
        best: Optional[list[int]] = None
        for rot in (self.sigma, self.sigma_inv()):
            for start in range(nd):
                code = self._rooted_code(rot, start, best)
                if code is not None and (best is None or code < best):
                    best = code
        assert best is not None
        return tuple(best)

    def _rooted_code(
        self,
        rot: tuple[int, ...],
        start: int,
        best: Optional[list[int]],
    ) -> Optional[list[int]]:
        """Code for one root, aborting early once it exceeds `best`."""
        nd = self.n_darts
        label = [-1] * nd
        order = [start]
        label[start] = 0
        code: list[int] = []
        nxt = 1
        i = 0
        while i < len(order):
            d = order[i]
            for e in (rot[d], self.theta[d]):
                if label[e] < 0:
                    label[e] = nxt
                    order.append(e)
                    nxt += 1
                code.append(label[e])
                k = len(code) - 1
                if best is not None:
                    if code[k] > best[k]:
                        return None
                    if code[k] < best[k]:
                        best = None  # now strictly smaller; stop comparing
            i += 1
        return code

    def is_isomorphic(self, other: "PlaneGraph") -> bool:
        return self.canonical_code() == other.canonical_code()

    def relabeled(self, dart_perm: Sequence[int], vertex_perm: Sequence[int]) -> "PlaneGraph":
        """Conjugate by a dart relabeling (and renumber vertices); same map."""
        nd = self.n_darts
        sigma = [0] * nd
        theta = [0] * nd
        vert = [0] * nd
        for d in range(nd):
            sigma[dart_perm[d]] = dart_perm[self.sigma[d]]
            theta[dart_perm[d]] = dart_perm[self.theta[d]]
            vert[dart_perm[d]] = vertex_perm[self.vertex_of[d]]
        return PlaneGraph(sigma=tuple(sigma), theta=tuple(theta), vertex_of=tuple(vert))


# -- text and JSON formats -------------------------------------------------


def decode(text: str) -> PlaneGraph:
    """Parse the dart-code format (or its JSON equivalent) into a PlaneGraph.

    Text layout: line 1 is n; line 2 is theta as a one-line permutation of
    0..4n-1; line 3 lists the darts vertex by vertex, four per vertex, in
    counterclockwise rotation order.  JSON layout: an object with fields
    "n", "theta", "rotation" carrying the same data.

    Raises ValueError on malformed input or on any structural violation
    (non-involutive pairing, loops, wrong valence, disconnection, nonzero
    genus), naming the offending dart or vertex.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        try:
            n = int(obj["n"])
            theta_row = [int(x) for x in obj["theta"]]
            rot_row = [int(x) for x in obj["rotation"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"JSON dart code missing field: {exc}") from exc
    else:
        tokens = stripped.split()
        if not tokens:
            raise ValueError("empty dart code")
        n = int(tokens[0])
        need = 1 + 8 * n
        if len(tokens) != need:
            raise ValueError(
                f"dart code for n={n} needs {need} integers, got {len(tokens)}"
            )
        theta_row = [int(x) for x in tokens[1 : 1 + 4 * n]]
        rot_row = [int(x) for x in tokens[1 + 4 * n :]]
    nd = 4 * n
    if sorted(rot_row) != list(range(nd)):
        raise ValueError("rotation line is not a permutation of 0..4n-1")
    if len(theta_row) != nd:
        raise ValueError("pairing line has wrong length")
    sigma = [0] * nd
    vertex_of = [0] * nd
    for v in range(n):
        quad = rot_row[4 * v : 4 * v + 4]
        for k, d in enumerate(quad):
            sigma[d] = quad[(k + 1) % 4]
            vertex_of[d] = v
    g = PlaneGraph(sigma=tuple(sigma), theta=tuple(theta_row), vertex_of=tuple(vertex_of))
    errors = g.validate(require_quartic=True)
    if errors:
        raise ValueError("; ".join(errors))
    return g


def encode(g: PlaneGraph, fmt: str = "text") -> str:
    """Serialize a 4-valent map to the dart-code format ("text" or "json")."""
    if not g.is_quartic():
        raise ValueError("dart-code format holds 4-valent maps only")
    n = g.n_vertices
    rot_row: list[int] = []
    for v in range(n):
        rot_row.extend(g.vertex_darts(v))
    if fmt == "json":
        return json.dumps(
            {"n": n, "theta": list(g.theta), "rotation": rot_row},
            separators=(",", ":"),
        )
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        str(n),
        " ".join(str(x) for x in g.theta),
        " ".join(str(x) for x in rot_row),
    ]
    return "\n".join(lines) + "\n"
