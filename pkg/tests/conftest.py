"""Shared hand-built fixtures: small maps wired dart by dart."""

import pytest

from hedrite.planegraph import PlaneGraph


def from_rotations(neighbors):
    """Build a map from per-vertex ccw neighbor lists (simple graphs only).

    Vertex v owns darts 4v..4v+3 when it has degree 4; generally v owns a
    contiguous block in listing order.  Parallel edges would make the
    pairing ambiguous, so fixtures with 2-gons are wired explicitly.
    """
    offsets = []
    total = 0
    for lst in neighbors:
        offsets.append(total)
        total += len(lst)
    sigma = [0] * total
    theta = [-1] * total
    vertex_of = [0] * total
    for v, lst in enumerate(neighbors):
        base = offsets[v]
        deg = len(lst)
        for k in range(deg):
            sigma[base + k] = base + (k + 1) % deg
            vertex_of[base + k] = v
    for v, lst in enumerate(neighbors):
        for k, w in enumerate(lst):
            if theta[offsets[v] + k] >= 0:
                continue
            j = neighbors[w].index(v)
            theta[offsets[v] + k] = offsets[w] + j
            theta[offsets[w] + j] = offsets[v] + k
    return PlaneGraph(sigma=tuple(sigma), theta=tuple(theta), vertex_of=tuple(vertex_of))


def make_two_one():
    """The 2-vertex 4-hedrite: four parallel edges, four 2-gons."""
    sigma = (1, 2, 3, 0, 5, 6, 7, 4)
    theta = (4, 7, 6, 5, 0, 3, 2, 1)
    vertex_of = (0, 0, 0, 0, 1, 1, 1, 1)
    return PlaneGraph(sigma=sigma, theta=theta, vertex_of=vertex_of)


def make_octahedron():
    """The 6-vertex 8-hedrite: the octahedron, eight 3-gons."""
    return from_rotations(
        [
            [1, 2, 3, 4],
            [0, 4, 5, 2],
            [0, 1, 5, 3],
            [0, 2, 5, 4],
            [0, 3, 5, 1],
            [1, 4, 3, 2],
        ]
    )


def make_triple_triangle():
    """The 3-vertex 5-hedrite: a triangle with every edge doubled.

    Its single central circuit is the standard trefoil projection.
    """
    n = 3
    sigma = []
    theta = [0] * (4 * n)
    vertex_of = []
    for v in range(n):
        nxt, prv = (v + 1) % n, (v - 1) % n
        sigma.extend([4 * v + 1, 4 * v + 2, 4 * v + 3, 4 * v + 0])
        vertex_of.extend([v] * 4)
        theta[4 * v + 0] = 4 * nxt + 3
        theta[4 * v + 1] = 4 * nxt + 2
        theta[4 * v + 2] = 4 * prv + 1
        theta[4 * v + 3] = 4 * prv + 0
    return PlaneGraph(sigma=tuple(sigma), theta=tuple(theta), vertex_of=tuple(vertex_of))


@pytest.fixture
def two_one():
    return make_two_one()


@pytest.fixture
def octahedron():
    return make_octahedron()


@pytest.fixture
def triple_triangle():
    return make_triple_triangle()
