"""Rewriting of 4-valent maps: inflation, reduction, Goldberg-Coxeter.

Inflation replaces a central circuit by t parallel copies.  One doubling
pushes a single copy off to the left of the travel direction: every side
edge the copy crosses gets a new degree-4 vertex, consecutive crossing
points are joined by chords through the face left of the circuit, and
where the circuit crosses itself two such chords cross and contribute one
more vertex.  t-inflation iterates the doubling t-1 times against the same
tracked circuit; reduction deletes one rail of a rail-road and smooths the
crossings away, undoing it.

The Goldberg-Coxeter operation works on the flat metric picture: a
4-valent map is a sphere glued from unit squares, one per vertex, and
GC_{k,l} overlays the lattice (1/(k+li)) * Z[i] on that surface.  The
overlay cells are the new vertices.  Walking straight segments across the
glued squares with exact rational arithmetic recovers the cell adjacency
without any floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .circuits import CentralCircuit, central_circuits
from .planegraph import PlaneGraph
from .structure import RailRoad


# -- mutable surgery buffer ---------------------------------------------------


class _Builder:
    """Parallel (sigma, theta, vertex_of) lists; darts append-only until freeze."""

    def __init__(self, g: PlaneGraph):
        self.sigma = list(g.sigma)
        self.theta = list(g.theta)
        self.vertex_of = list(g.vertex_of)
        self.dead: set[int] = set()

    def new_vertex(self) -> int:
        v = max(self.vertex_of, default=-1) + 1
        return v

    def new_dart(self, vertex: int) -> int:
        d = len(self.sigma)
        self.sigma.append(d)
        self.theta.append(d)
        self.vertex_of.append(vertex)
        return d

    def subdivide(self, x: int) -> tuple[int, int]:
        """Put a degree-2 vertex on x's edge, next to x's end.

        Returns (p, q) at the new vertex: p pairs with x, q with the old
        far end.  Repeated subdivision of one edge nests correctly because
        theta[x] always names the segment currently touching x.
        """
        y = self.theta[x]
        u = self.new_vertex()
        p = self.new_dart(u)
        q = self.new_dart(u)
        self.sigma[p] = q
        self.sigma[q] = p
        self.theta[x] = p
        self.theta[p] = x
        self.theta[q] = y
        self.theta[y] = q
        return p, q

    def kill_vertex(self, darts: list[int]) -> None:
        self.dead.update(darts)

    def freeze(self) -> PlaneGraph:
        live = [d for d in range(len(self.sigma)) if d not in self.dead]
        renum = {d: i for i, d in enumerate(live)}
        sigma = tuple(renum[self.sigma[d]] for d in live)
        theta = tuple(renum[self.theta[d]] for d in live)
        vmap: dict[int, int] = {}
        vertex_of = []
        for d in live:
            v = self.vertex_of[d]
            vertex_of.append(vmap.setdefault(v, len(vmap)))
        return PlaneGraph(sigma=sigma, theta=theta, vertex_of=tuple(vertex_of))


# -- inflation ----------------------------------------------------------------


def _circuit_outs(g: PlaneGraph, d0: int) -> list[int]:
    outs = [d0]
    d = g.sigma[g.sigma[g.theta[d0]]]
    while d != d0:
        outs.append(d)
        d = g.sigma[g.sigma[g.theta[d]]]
    return outs


def _double(g: PlaneGraph, d0: int) -> PlaneGraph:
    """Add one parallel copy to the left of the circuit through out-dart d0.

    Dart indices of g keep their meaning in the result; new darts go on
    top.  That keeps d0 usable for the next doubling round.
    """
    outs = _circuit_outs(g, d0)
    L = len(outs)
    pos = {d: i for i, d in enumerate(outs)}
    b = _Builder(g)

    # Chord crossings come from self-crossings of the circuit.  When the
    # left side dart at passage i is the out dart of another passage j,
    # chord i-1 (heading into its end near passage i's vertex) crosses
    # chord j (leaving its start near the same vertex).  Each self-crossing
    # is found exactly once this way: the partner passage sees our in dart
    # on its left instead.
    head_cross: dict[int, int] = {}
    tail_cross: dict[int, int] = {}
    crossings = []
    for i, d in enumerate(outs):
        j = pos.get(g.sigma[d])
        if j is None:
            continue
        a = (i - 1) % L
        pair = len(crossings)
        assert a not in head_cross and j not in tail_cross
        assert a != j, "chord would cross itself"
        head_cross[a] = pair
        tail_cross[j] = pair
        crossings.append((a, j))

    # Crossing points. sigma order (E, N, W, S): E heads to chord a's end,
    # N to chord b's end, W back along a, S back along b.
    wdarts = []
    for a, j in crossings:
        w = b.new_vertex()
        east = b.new_dart(w)
        north = b.new_dart(w)
        west = b.new_dart(w)
        south = b.new_dart(w)
        b.sigma[east] = north
        b.sigma[north] = west
        b.sigma[west] = south
        b.sigma[south] = east
        wdarts.append((east, north, west, south))

    # One new vertex on each left side edge, next to the circuit.
    u: list[tuple[int, int]] = []
    for d in outs:
        u.append(b.subdivide(g.sigma[d]))

    # Chord i runs u_i -> u_{i+1} through the face left of outs[i].  At u_i
    # the counterclockwise order is (p, forward, q, backward).
    fwd = []
    back = []
    for i in range(L):
        p, q = u[i]
        v = b.vertex_of[p]
        f = b.new_dart(v)
        k = b.new_dart(v)
        b.sigma[p] = f
        b.sigma[f] = q
        b.sigma[q] = k
        b.sigma[k] = p
        fwd.append(f)
        back.append(k)

    for i in range(L):
        chain = [fwd[i]]
        if i in tail_cross:
            east, north, west, south = wdarts[tail_cross[i]]
            chain += [south, north]
        if i in head_cross:
            east, north, west, south = wdarts[head_cross[i]]
            chain += [west, east]
        chain.append(back[(i + 1) % L])
        for x, y in zip(chain[0::2], chain[1::2]):
            b.theta[x] = y
            b.theta[y] = x

    return b.freeze()


def inflate_circuit(g: PlaneGraph, c: CentralCircuit, t: int) -> PlaneGraph:
    """Replace central circuit c by t parallel copies (t=1: unchanged)."""
    if t < 1:
        raise ValueError("inflation factor must be >= 1")
    if c not in central_circuits(g):
        raise ValueError("circuit does not belong to the graph")
    out = g
    d0 = c.darts[0]
    for _ in range(t - 1):
        out = _double(out, d0)
    if t > 1:
        assert not out.validate(require_quartic=True)
    return out


def inflate_all(g: PlaneGraph, t: int) -> PlaneGraph:
    """Inflate every central circuit t-fold simultaneously.

    Doubling never renumbers surviving darts, so one tracking dart per
    original circuit stays valid across the whole rewrite and the serial
    passes compose to the simultaneous inflation.
    """
    if t < 1:
        raise ValueError("inflation factor must be >= 1")
    if t == 1:
        return g
    reps = [c.darts[0] for c in central_circuits(g)]
    out = g
    for d0 in reps:
        for _ in range(t - 1):
            out = _double(out, d0)
    assert not out.validate(require_quartic=True)
    assert out.n_vertices == g.n_vertices * t * t
    return out


# -- reduction ----------------------------------------------------------------


def reduce(g: PlaneGraph, r: RailRoad) -> PlaneGraph:
    """Collapse a rail-road: delete one rail and smooth its crossings out.

    Raises ValueError when r does not belong to g or the collapse would
    strand a closed curve without vertices.
    """
    rails = r.bounding_circuits
    if not rails or any(c not in central_circuits(g) for c in rails):
        raise ValueError("rail-road does not belong to the graph")
    if len(set(rails)) == 1 and not r.self_intersecting:
        raise ValueError("rails form a single circuit; nothing to collapse onto")
    victim = rails[-1]

    by_vertex: dict[int, set[int]] = {}
    for d in victim.darts:
        by_vertex.setdefault(g.vertex_of[d], set()).add(d)
        e = g.theta[d]
        by_vertex.setdefault(g.vertex_of[e], set()).add(e)

    b = _Builder(g)
    for v, ds in by_vertex.items():
        all_darts = g.vertex_darts(v)
        if len(ds) == 4:
            b.kill_vertex(list(all_darts))
            continue
        assert len(ds) == 2
        y, y2 = [d for d in all_darts if d not in ds]
        a, c = b.theta[y], b.theta[y2]
        if a == y2:
            raise ValueError("reduction would strand a closed curve")
        b.kill_vertex(list(all_darts))
        b.theta[a] = c
        b.theta[c] = a

    out = b.freeze()
    problems = out.validate(require_quartic=True)
    if problems:
        raise ValueError("rail-road cannot be collapsed: " + problems[0])
    return out


# -- Goldberg-Coxeter ---------------------------------------------------------

_CORNERS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(1), Fraction(1)),
    (Fraction(0), Fraction(1)),
)


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cscale(a, s):
    return (a[0] * s, a[1] * s)


_UNITS = (
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(-1)),
)


def _unit_index(a) -> Optional[int]:
    for idx, un in enumerate(_UNITS):
        if a == un:
            return idx
    return None


class _FlatSurface:
    """The unit-squares-with-gluings view of a 4-valent map."""

    def __init__(self, g: PlaneGraph):
        self.g = g
        self.slot_of: dict[int, int] = {}
        self.dart_at: dict[tuple[int, int], int] = {}
        for v in range(g.n_vertices):
            for s, d in enumerate(g.vertex_darts(v)):
                self.slot_of[d] = s
                self.dart_at[(v, s)] = d

    def gluing(self, v: int, s: int):
        """Transition across side s of square v: (w, rho, tau)."""
        d = self.dart_at[(v, s)]
        e = self.g.theta[d]
        w = self.g.vertex_of[e]
        sp = self.slot_of[e]
        rho = _UNITS[(sp - s + 2) % 4]  # -i^(sp-s)
        tau = _csub(_CORNERS[(sp + 1) % 4], _cmul(rho, _CORNERS[s]))
        return w, rho, tau

    def step(self, v: int, p, delta):
        """Walk straight from p (in square v) by delta.

        Returns (v', p', rot): the endpoint and the accumulated frame
        rotation from crossing gluings.  The path must avoid square
        corners, which the GC lattice guarantees.
        """
        rot = _UNITS[0]
        for _ in range(64):
            if delta == (0, 0):
                break
            best_t = None
            best_side = None
            checks = (
                (delta[1] < 0, Fraction(0), 1, 0),  # bottom
                (delta[0] > 0, Fraction(1), 0, 1),  # right
                (delta[1] > 0, Fraction(1), 1, 2),  # top
                (delta[0] < 0, Fraction(0), 0, 3),  # left
            )
            for outward, level, axis, side in checks:
                if not outward:
                    continue
                t = (level - p[axis]) / delta[axis]
                if t < 0 or t >= 1:
                    continue
                if best_t is None or t < best_t:
                    best_t, best_side = t, side
            if best_t is None:
                return v, _cadd(p, delta), rot
            x = _cadd(p, _cscale(delta, best_t))
            assert x not in _CORNERS, "walk hit a cone point"
            w, rho, tau = self.gluing(v, best_side)
            v = w
            p = _cadd(_cmul(rho, x), tau)
            delta = _cmul(rho, _cscale(delta, 1 - best_t))
            rot = _cmul(rot, rho)
        else:
            raise AssertionError("walk failed to terminate")
        return v, _cadd(p, delta), rot

    def point_reps(self, v: int, p):
        """All (square, point, rho) names of a surface point.

        Interior points have one name; points on a glued side also carry
        the far square's, with rho transporting vectors from v's frame to
        the far frame.  Corners are rejected.
        """
        sides = []
        if p[1] == 0:
            sides.append(0)
        if p[0] == 1:
            sides.append(1)
        if p[1] == 1:
            sides.append(2)
        if p[0] == 0:
            sides.append(3)
        assert len(sides) < 2, "point identity at a cone point"
        reps = [(v, p, _UNITS[0])]
        for s in sides:
            w, rho, tau = self.gluing(v, s)
            reps.append((w, _cadd(_cmul(rho, p), tau), rho))
        return reps


def goldberg_coxeter(g: PlaneGraph, k: int, l: int) -> PlaneGraph:
    """GC_{k,l}: overlay the (1/(k+li))-scaled square lattice on the map.

    The result is 4-valent with n*(k^2+l^2) vertices; 2- and 3-gonal faces
    survive at the cone points and only the 4-gon count grows.  GC_{1,0}
    is the identity and GC_{1,1} the medial, up to isomorphism.
    """
    if k == 0 and l == 0:
        raise ValueError("parameters (0, 0) are not a Goldberg-Coxeter operation")
    if k < 0 or l < 0:
        raise ValueError("parameters must be non-negative")
    if not g.is_quartic():
        raise ValueError("Goldberg-Coxeter needs a 4-valent map")

    norm = k * k + l * l
    surf = _FlatSurface(g)
    # 1/z and the lattice cell centers ((2a+1) + (2b+1)i) / (2z).
    inv_z = (Fraction(k, norm), Fraction(-l, norm))
    half = _cscale(inv_z, Fraction(1, 2))

    def center(a: int, bq: int):
        return _cmul((Fraction(2 * a + 1), Fraction(2 * bq + 1)), half)

    seed = None
    for a in range(-(k + l + 2), k + l + 3):
        for bq in range(-(k + l + 2), k + l + 3):
            p = center(a, bq)
            if 0 <= p[0] <= 1 and 0 <= p[1] <= 1:
                seed = p
                break
        if seed is not None:
            break
    assert seed is not None

    ids: dict[tuple, int] = {}
    states: list[tuple[int, tuple, tuple]] = []  # (square, point, frame)

    def register(v: int, p, frame):
        """Cell id plus the rotation from (v, p)'s frame to the stored one."""
        reps = surf.point_reps(v, p)
        key = min((w, q[0], q[1]) for w, q, _ in reps)
        carry = next(rho for w, q, rho in reps if (w, q[0], q[1]) == key)
        got = ids.get(key)
        if got is None:
            got = len(states)
            ids[key] = got
            states.append((key[0], (key[1], key[2]), _cmul(frame, carry)))
        return got, carry

    theta_pairs: dict[int, int] = {}
    start, _ = register(0, seed, inv_z)
    queue = [start]
    done = 0
    while done < len(queue):
        cell = queue[done]
        done += 1
        v, p, frame = states[cell]
        for j in range(4):
            delta = _cmul(frame, _UNITS[j])
            w, q, rot = surf.step(v, p, delta)
            known = len(states)
            other, carry = register(w, q, _cmul(frame, rot))
            if other == known:
                queue.append(other)
            back = _cmul(_cmul(frame, _UNITS[(j + 2) % 4]), _cmul(rot, carry))
            ratio_idx = None
            o_frame = states[other][2]
            for m in range(4):
                if _cmul(o_frame, _UNITS[m]) == back:
                    ratio_idx = m
                    break
            assert ratio_idx is not None, "holonomy is not a lattice rotation"
            a_dart = 4 * cell + j
            b_dart = 4 * other + ratio_idx
            for x, y in ((a_dart, b_dart), (b_dart, a_dart)):
                if x in theta_pairs:
                    assert theta_pairs[x] == y, "inconsistent side pairing"
                theta_pairs[x] = y

    n_cells = len(states)
    assert n_cells == g.n_vertices * norm, "cell count disagrees with k^2+l^2 law"
    sigma = tuple(4 * (d // 4) + (d % 4 + 1) % 4 for d in range(4 * n_cells))
    theta = tuple(theta_pairs[d] for d in range(4 * n_cells))
    vertex_of = tuple(d // 4 for d in range(4 * n_cells))
    out = PlaneGraph(sigma=sigma, theta=theta, vertex_of=vertex_of)
    assert not out.validate(require_quartic=True)
    return out
