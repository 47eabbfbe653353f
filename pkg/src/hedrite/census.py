"""Exhaustive census of i-hedrites by patch growth with canonical keys.

The generator grows a disk of faces.  A growth state keeps every created
edge as a theta-paired dart couple; darts already walked by a finished
face carry their face successor, darts still facing the hole do not, and
the hole itself is a closed boundary walk of uncovered darts.  Gluing a
face covers a consecutive run of hole darts and closes the rest of its
boundary with fresh edges; the last face must swallow the hole whole.
Interior vertices must finish at degree 4, so most dead branches die
early on degree and budget arithmetic.

Every i-hedrite contains a 2-gon (a 3-gon when i = 8), so growth starts
from a single seed face; any sphere with the right face counts peels
back down to that seed, which makes the move tree complete.  Gluings are
tried at every boundary position, and the flood of duplicate states this
creates is killed by memoizing each state under a canonical relabeling
code rooted at a boundary dart the code itself selects.  Finished maps
collapse under canonical_code, which also fixes the output order.
"""

from __future__ import annotations

import gc
import hashlib
import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional

from .circuits import cc_vector, is_balanced, is_pure
from .planegraph import PlaneGraph
from .structure import (
    FamilyLabel,
    classify_family,
    is_irreducible,
    vertex_connectivity_class,
)
from .symmetry import point_group


@dataclass(frozen=True)
class HedriteRecord:
    """One census entry; every flag is recomputable from `graph`.

    local_id ranks the graphs of one (i, n) cell by canonical_code,
    1-based; catalog identities flow through match_catalog instead.
    """

    i: int
    n: int
    local_id: int
    canonical_code: bytes
    point_group: str
    cc_vector: str
    irreducible: bool
    pure: bool
    balanced: bool
    three_connected: bool
    family: Optional[FamilyLabel]
    graph: PlaneGraph

    def header(self) -> str:
        """One `#`-prefixed key=value line for dart-code streams."""
        fam = self.family
        fam_text = f"{fam.kind},{fam.m}" if fam and fam.kind != "none" else "-"
        digest = hashlib.sha256(self.canonical_code).hexdigest()[:16]
        flags = [
            ("irreducible", self.irreducible),
            ("pure", self.pure),
            ("balanced", self.balanced),
            ("three_connected", self.three_connected),
        ]
        flag_text = " ".join(f"{k}={'true' if v else 'false'}" for k, v in flags)
        return (
            f"# i={self.i} n={self.n} id={self.local_id}"
            f" group={self.point_group} cc={self.cc_vector}"
            f" {flag_text} family={fam_text} code=sha256:{digest}"
        )


# -- patch growth -------------------------------------------------------------
#
# A state is (theta, tail, nxt, prv, fsz, hole, deg, r2, r3, r4):
#   theta    dart -> partner, total involution, fixed at edge creation
#   tail     dart -> tail vertex
#   nxt/prv  face successor/predecessor, -1 while the dart faces the hole
#   fsz      dart -> size of its finished face, -1 on hole darts
#   hole     boundary walk; tail[hole[t+1]] == tail[theta[hole[t]]]
#   deg      vertex -> current degree
#   r2..r4   faces of each size still to glue (the hole is not a face)


def _seed(size: int, r2: int, r3: int, r4: int):
    theta: list[int] = []
    tail: list[int] = []
    nxt: list[int] = []
    prv: list[int] = []
    fsz: list[int] = []
    hole: list[int] = []
    for t in range(size):
        theta += [2 * t + 1, 2 * t]
        tail += [t, (t + 1) % size]
        nxt += [2 * ((t + 1) % size), -1]
        prv += [2 * ((t - 1) % size), -1]
        fsz += [size, -1]
    for t in range(size):
        hole.append(2 * (size - 1 - t) + 1)
    return (theta, tail, nxt, prv, fsz, hole, [2] * size, r2, r3, r4)


def _glue(state, n_target: int, j: int, k: int, s: int):
    """Glue an s-gon over k hole darts starting at position j, or None.

    The face keeps the hole's traversal direction on covered darts; the
    s-k fresh edges run from the segment's head back to its tail and
    their partners join the hole reversed.  Arithmetic rejections run
    before the first allocation; _search duplicates the cheapest ones to
    avoid the call entirely on its hot path.
    """
    theta, tail, nxt, prv, fsz, hole, deg, r2, r3, r4 = state
    L = len(hole)
    a = tail[hole[j]]
    b = tail[theta[hole[(j + k - 1) % L]]]
    m = s - k
    if m == 1 and a == b:
        return None  # loop
    if a == b:
        if deg[a] + 2 > 4:
            return None
    elif deg[a] + 1 > 4 or deg[b] + 1 > 4:
        return None
    if len(deg) + m - 1 > n_target:
        return None

    if s == 2:
        n2, n3, n4 = r2 - 1, r3, r4
    elif s == 3:
        n2, n3, n4 = r2, r3 - 1, r4
    else:
        n2, n3, n4 = r2, r3, r4 - 1
    r_after = n2 + n3 + n4
    if r_after < 1:
        return None
    edges = len(theta) // 2 + m
    # later gluings add >= 1 edge each except the closure, which adds none
    if edges + r_after - 1 > 2 * n_target:
        return None
    fresh_needed = n_target - (len(deg) + m - 1)
    max_fresh = n3 + 2 * n4 - (0 if n2 else 1 if n3 else 2)
    if fresh_needed > max_fresh:
        return None
    L2 = L - k + m
    # one gluing shrinks the hole by at most 2 (a 4-gon over k=3), a 3-gon
    # by 1, a 2-gon never; the closure then absorbs s_c = shrink_c + 2
    if L2 > n3 + 2 * n4 + 2:
        return None
    if r_after == 1 and L2 != (2 if n2 else 3 if n3 else 4):
        return None
    return _build(state, j, k, s, n2, n3, n4)


def _build(state, j: int, k: int, s: int, n2: int, n3: int, n4: int):
    """Materialize the glued state; only structural checks remain here."""
    theta, tail, nxt, prv, fsz, hole, deg, _, _, _ = state
    m = s - k
    a = tail[hole[j]]
    b = tail[theta[hole[(j + k - 1) % len(hole)]]]
    L2 = len(hole) - k + m
    r_after = n2 + n3 + n4
    seg = hole[j:] + hole[:j]
    covered, rest = seg[:k], seg[k:]
    theta2 = theta.copy()
    tail2 = tail.copy()
    nxt2 = nxt.copy()
    prv2 = prv.copy()
    fsz2 = fsz.copy()
    deg2 = deg.copy()
    D = len(theta)
    V = len(deg)
    ws = [b] + list(range(V, V + m - 1)) + [a]
    deg2 += [2] * (m - 1)
    deg2[a] += 1
    deg2[b] += 1
    fresh = []
    backs = []
    for t in range(m):
        f = D + 2 * t
        theta2 += [f + 1, f]
        tail2 += [ws[t], ws[t + 1]]
        nxt2 += [-1, -1]
        prv2 += [-1, -1]
        fsz2 += [s, -1]
        fresh.append(f)
        backs.append(f + 1)
    walk = covered + fresh
    for t, d in enumerate(walk):
        e = walk[(t + 1) % s]
        nxt2[d] = e
        prv2[e] = d
        fsz2[d] = s
    hole2 = rest + backs[::-1]

    if k > 1:
        alive = None
        for t in range(k - 1):
            v = tail[theta[covered[t]]]
            if deg[v] != 4:
                if alive is None:
                    alive = {tail2[d] for d in hole2}
                if v not in alive:
                    return None  # vertex leaves the boundary underfilled
    if not _corners_coverable(tail2, hole2, deg2, L2, r_after, n4):
        return None
    return (theta2, tail2, nxt2, prv2, fsz2, hole2, deg2, n2, n3, n4)


def _corners_coverable(tail2, hole2, deg2, L2, r_after, n4) -> bool:
    """Reject holes whose degree-4 boundary corners can never be covered.

    A full junction cannot serve as a glue endpoint, so a cyclic run of R
    full junctions forces one face over R+1 darts: R >= 4 never fits, two
    runs of 3 would need two closures, one run of 3 needs a 4-gon left,
    and an all-full hole admits nothing but the closure.
    """
    full = [deg2[tail2[hole2[(t + 1) % L2]]] == 4 for t in range(L2)]
    if all(full):
        return r_after == 1
    longest = 0
    long_runs = 0
    run = 0
    start = full.index(False)  # rotate so runs never wrap
    for t in range(start, start + L2):
        if full[t % L2]:
            run += 1
        else:
            if run >= 3:
                long_runs += 1
            longest = max(longest, run)
            run = 0
    if run >= 3:
        long_runs += 1
    longest = max(longest, run)
    if longest >= 4 or long_runs >= 2:
        return False
    if longest == 3 and n4 == 0:
        return False
    return True


def _close(state, i_target: int, n_target: int) -> Optional[PlaneGraph]:
    """Fill the hole with the one remaining face and lift to a PlaneGraph."""
    theta, tail, nxt, _, _, hole, deg, _, _, _ = state
    if len(deg) != n_target or any(d != 4 for d in deg):
        return None
    L = len(hole)
    nxt2 = nxt.copy()
    for t, d in enumerate(hole):
        nxt2[d] = hole[(t + 1) % L]
    sigma = tuple(nxt2[theta[d]] for d in range(len(theta)))
    g = PlaneGraph(sigma=sigma, theta=tuple(theta), vertex_of=tuple(tail))
    errors = g.validate(require_quartic=True)
    assert not errors, f"patch closure produced a broken map: {errors[0]}"
    if g.is_i_hedrite() != i_target:
        return None  # valid sphere map, but not 2-connected
    return g


def _rooted_patch(theta, succ, pred, start, best):
    """Relabeling code of one rooted orientation, None once it exceeds best.

    Labels are shifted by one so the hole sentinel encodes as byte 0 and
    the code compares directly as bytes.
    """
    dlen = len(theta)
    label = [0] * dlen
    label[start] = 1
    order = [start]
    more = order.append
    code = bytearray(3 * dlen)
    free = 2
    pos = 0
    cmp = best is not None
    # appending to `order` while iterating it is the BFS queue
    for d in order:
        # unrolled over the three generators, hottest loop in the search
        e = theta[d]
        c = label[e]
        if not c:
            c = label[e] = free
            free += 1
            more(e)
        if cmp:
            ref = best[pos]
            if c > ref:
                return None
            if c < ref:
                cmp = False
        code[pos] = c
        pos += 1
        e = succ[d]
        if e < 0:
            c = 0
        else:
            c = label[e]
            if not c:
                c = label[e] = free
                free += 1
                more(e)
        if cmp:
            ref = best[pos]
            if c > ref:
                return None
            if c < ref:
                cmp = False
        code[pos] = c
        pos += 1
        e = pred[d]
        if e < 0:
            c = 0
        else:
            c = label[e]
            if not c:
                c = label[e] = free
                free += 1
                more(e)
        if cmp:
            ref = best[pos]
            if c > ref:
                return None
            if c < ref:
                cmp = False
        code[pos] = c
        pos += 1
    return code


def _anchor_candidates(state) -> list[tuple[int, bool]]:
    """Hole positions allowed to root the state code.

    The filter ranks every (position, direction) by the necklace of
    (face size behind the dart, walk-tail degree) around the hole and
    keeps the minima; the ranking is structural, so isomorphic states
    keep corresponding candidates and any of them roots a complete code.
    Candidates are whittled down round by round, one necklace step at a
    time, instead of materializing all 2L rotation sequences.
    """
    theta, tail, _, _, fsz, hole, deg, *_ = state
    L = len(hole)
    degs = [deg[tail[d]] for d in hole]
    ep = [fsz[theta[hole[t]]] * 5 + degs[t] for t in range(L)]
    em = [ep[t] - degs[t] + degs[t + 1 - L] for t in range(L)]
    # candidates are ints: j for forward starts, L + j for reversed ones
    cands = list(range(2 * L))
    for r in range(L):
        lo = 99
        keep = []
        for c in cands:
            v = ep[c + r - L] if c < L else em[c - L - r]
            if v < lo:
                lo = v
                keep = [c]
            elif v == lo:
                keep.append(c)
        cands = keep
        if len(cands) == 1:
            break
    return [(c, False) if c < L else (c - L, True) for c in cands]


def _state_key(state) -> bytes:
    """Canonical state key, invariant under relabeling and reflection.

    A rooted code encodes the whole patch, so equal keys mean isomorphic
    states with corresponding holes (budgets follow from the faces).
    """
    theta, _, nxt, prv, _, hole, *_ = state
    best = None
    for j, flip in _anchor_candidates(state):
        succ, pred = (prv, nxt) if flip else (nxt, prv)
        code = _rooted_patch(theta, succ, pred, hole[j], best)
        if code is not None:
            best = code
    return bytes(best)


def _search(i: int, n: int) -> list[PlaneGraph]:
    """All i-hedrites on n vertices, one per class, sorted by code."""
    p2, p3, p4 = 8 - i, 2 * i - 8, n + 2 - i
    if p4 < 0:
        return []
    root = _seed(2, p2 - 1, p3, p4) if p2 else _seed(3, p2, p3 - 1, p4)
    found: dict[bytes, PlaneGraph] = {}
    seen = {_state_key(root)}
    stack = [root]
    n2x = 2 * n
    # the loop allocates heavily and drops nothing cyclic
    was_tracking = gc.isenabled()
    gc.disable()
    try:
        _search_loop(i, n, found, seen, stack, n2x)
    finally:
        if was_tracking:
            gc.enable()
    return [found[c] for c in sorted(found)]


def _search_loop(i, n, found, seen, stack, n2x):
    while stack:
        state = stack.pop()
        theta, tail, _, _, _, hole, deg, r2, r3, r4 = state
        L = len(hole)
        V = len(deg)
        E = len(theta) // 2
        boundary = set()
        deficit = 0
        for d in hole:
            v = tail[d]
            if v not in boundary:
                boundary.add(v)
                deficit += 4 - deg[v]
        for s, have in ((2, r2), (3, r3), (4, r4)):
            if not have:
                continue
            if s == 2:
                n2, n3, n4 = r2 - 1, r3, r4
            elif s == 3:
                n2, n3, n4 = r2, r3 - 1, r4
            else:
                n2, n3, n4 = r2, r3, r4 - 1
            r_after = n2 + n3 + n4
            if r_after < 1:
                continue
            cap = n3 + 2 * n4
            max_fresh = cap - (0 if n2 else 1 if n3 else 2)
            for k in range(1, min(s - 1, L) + 1):
                m = s - k
                if V + m - 1 > n or n - (V + m - 1) > max_fresh:
                    continue
                # later gluings add >= 1 edge each except the closure
                if E + m + r_after - 1 > n2x:
                    continue
                L2 = L - k + m
                # one gluing shrinks the hole by at most 2 (a 4-gon over
                # k=3), a 3-gon by 1, a 2-gon never; the closure then
                # absorbs s_c = shrink_c + 2, so both the shrink budget
                # and the number of gluings left bound the hole
                if L2 > cap + 2 or L2 > 2 * r_after + 2:
                    continue
                if r_after == 1 and L2 != (2 if n2 else 3 if n3 else 4):
                    continue
                # a gluing cuts the boundary degree deficit by at most 2
                # and the closure needs it at zero
                if deficit + 2 * m - 4 > 2 * (r_after - 1):
                    continue
                for j in range(L):
                    a = tail[hole[j]]
                    b = tail[theta[hole[(j + k - 1) % L]]]
                    if a == b:
                        if m == 1 or deg[a] + 2 > 4:
                            continue
                    elif deg[a] + 1 > 4 or deg[b] + 1 > 4:
                        continue
                    child = _build(state, j, k, s, n2, n3, n4)
                    if child is None:
                        continue
                    if r_after == 1:
                        # closure level: finish now, no state key needed
                        g = _close(child, i, n)
                        if g is not None:
                            found.setdefault(g.canonical_code(), g)
                        continue
                    key = _state_key(child)
                    if key not in seen:
                        seen.add(key)
                        stack.append(child)


# -- records and the census ----------------------------------------------------


def enumerate_hedrites(i: int, n: int) -> list[HedriteRecord]:
    """All i-hedrites with n vertices, deterministically ordered.

    Empty exactly when no such graph exists; raises ValueError only for
    arguments outside i in 4..8, n >= 1.
    """
    if not 4 <= i <= 8:
        raise ValueError(f"i must be in 4..8, got {i}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    records = []
    for rank, g in enumerate(_search(i, n), start=1):
        records.append(
            HedriteRecord(
                i=i,
                n=n,
                local_id=rank,
                canonical_code=g.canonical_code(),
                point_group=point_group(g),
                cc_vector=cc_vector(g).text(),
                irreducible=is_irreducible(g),
                pure=is_pure(g),
                balanced=is_balanced(g),
                three_connected=vertex_connectivity_class(g) == 3,
                family=classify_family(g),
                graph=g,
            )
        )
    return records


def _cell(args: tuple[int, int]) -> list[HedriteRecord]:
    return enumerate_hedrites(*args)


def _worker_count(requested: Optional[int], n_jobs: int) -> int:
    cap = os.environ.get("HEDRITE_THREADS")
    workers = requested if requested else os.cpu_count() or 1
    if cap:
        workers = min(workers, max(1, int(cap)))
    return max(1, min(workers, n_jobs))


def iter_census(n_max: int, threads: Optional[int] = None) -> Iterator[HedriteRecord]:
    """Stream the census for all i in 4..8, n <= n_max, in (i, n) order.

    Cells are independent, so they fan out over a process pool; the
    HEDRITE_THREADS environment variable caps the worker count.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    cells = [(i, n) for i in range(4, 9) for n in range(2, n_max + 1)]
    workers = _worker_count(threads, len(cells))
    if workers == 1:
        for c in cells:
            yield from _cell(c)
        return
    with Pool(workers) as pool:
        for records in pool.imap(_cell, cells):
            yield from records


def full_census(n_max: int, threads: Optional[int] = None) -> list[HedriteRecord]:
    return list(iter_census(n_max, threads))


def match_catalog(record: HedriteRecord) -> Optional[str]:
    """The catalog's "n-k" label when (group, cc_vector) pins it down.

    Returns None when several catalog rows of the same cell share the
    signature (the catalog then genuinely cannot tell them apart) or when
    the cell is outside the catalog's range.
    """
    from .catalog import rows_for

    sig = (record.point_group, record.cc_vector)
    hits = [
        row
        for row in rows_for(record.i, record.n)
        if (row.group, row.cc) == sig
    ]
    if len(hits) == 1:
        return hits[0].catalog_id
    return None
