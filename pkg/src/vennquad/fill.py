"""Filling a boundary cycle with quadrilateral faces.

Given a cycle C of Q_m, a *C-quadrangulation* is a spanning plane subgraph
of Q_m whose outer face is bounded by C and whose inner faces are all
4-cycles.  All of them are generated by growing a disk: the state keeps one
*hole* (the part of the inside of C not yet covered), and each step picks a
face through a hole edge and branches on including or excluding it.

For a hole edge (p, q) and a 4-cycle through it with extra vertices
u (adjacent to p) and v (adjacent to q), the face is

* impossible, when u or v already sits strictly inside the filled part, or
  when u and v lie on the hole in the reversed cyclic order, or when the
  closing edge u-v is already covered on both sides;
* *ignored* for now, when u or v lies elsewhere on the hole (including it
  would pinch the hole into several pieces);
* *eligible*, when u and v are each either new or hole-adjacent to the edge.

Branching always happens on the first eligible face in a fixed scan order
(hole edges from the smallest hole label onward, face types ascending), and
the excluded set persists down a branch, so every face set is produced by
exactly one path of the binary recursion.  A branch dies when some hole edge
has no possible face left or when an unplaced vertex loses all its contacts.

Everything runs on flat arrays so numba can compile the search; the same
function works interpreted when numba is unavailable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from vennquad import hypercube as hc
from vennquad.planegraph import PlaneGraph, embedding_from_faces

try:  # pragma: no cover
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*a, **k):
        def wrap(f):
            return f

        return wrap if not a or not callable(a[0]) else a[0]


ELIGIBLE, IGNORED, EXCLUDED = "eligible", "ignored", "excluded"

_FF, _AF, _FA, _AA, _CLOSE = 0, 1, 2, 3, 4


def num_faces(m: int) -> int:
    return m * (m - 1) // 2 * (1 << max(m - 2, 0))


def inner_face_count(m: int, boundary_len: int) -> int:
    """Every complete filling has this many faces (Euler's formula)."""
    return (1 << m) - 1 - boundary_len // 2


def _fill_kernel(m, bd, state, out):
    (nxt, prv, in_p, ecnt, excl, placed, fr_p, fr_q, fr_u, fr_v, fr_case,
     fr_fid, fr_phase, tmask, pidx, typ) = state
    NV = 1 << m
    M1 = m + 1
    l = bd.shape[0]
    fmax = NV - 1 - l // 2

    for i in range(NV):
        nxt[i] = -1
        prv[i] = -1
        in_p[i] = 0
    for i in range(NV * M1):
        ecnt[i] = 0
    for i in range(pidx[m * M1 + m]):  # sentinel slot holds the excl size
        excl[i] = 0

    for i in range(l):
        a = bd[i]
        b = bd[(i + 1) % l]
        nxt[a] = b
        prv[b] = a
        in_p[a] = 1
        lo = a if a < b else b
        ecnt[lo * M1 + typ[a ^ b]] += 1
    hole_len = l
    free_cnt = NV - l
    nplaced = 0
    top = -1
    nout = 0
    descend = True

    while True:
        if descend:
            if hole_len == 0:
                if free_cnt == 0 and nout < out.shape[0]:
                    row = out[nout]
                    for i in range(fmax):
                        row[i] = placed[i]
                    # insertion sort for deterministic output
                    for i in range(1, fmax):
                        key = row[i]
                        j = i - 1
                        while j >= 0 and row[j] > key:
                            row[j + 1] = row[j]
                            j -= 1
                        row[j + 1] = key
                    nout += 1
                elif free_cnt == 0:
                    return -1  # buffer overflow; caller retries bigger
                descend = False
                continue
            if free_cnt > 2 * (fmax - nplaced):
                descend = False
                continue
            # unreachable unplaced vertex => dead branch
            dead = False
            if free_cnt > 0:
                for w in range(NV):
                    if in_p[w] == 0:
                        ok = False
                        for t in range(1, m + 1):
                            x = w ^ tmask[t]
                            if in_p[x] == 0 or nxt[x] != -1:
                                ok = True
                                break
                        if not ok:
                            dead = True
                            break
            if dead:
                descend = False
                continue
            # scan hole edges from the smallest hole label
            anchor = -1
            for w in range(NV):
                if nxt[w] != -1:
                    anchor = w
                    break
            have_pivot = False
            pv_p = pv_q = pv_u = pv_v = pv_case = pv_fid = 0
            p = anchor
            for _ in range(hole_len):
                q = nxt[p]
                pq = p ^ q
                tpq = typ[pq]
                usable = 0
                for t in range(1, m + 1):
                    om = tmask[t]
                    if om == pq:
                        continue
                    a = tpq if tpq < t else t
                    b = t if tpq < t else tpq
                    fid = pidx[a * M1 + b] * NV + (p & ~(pq | om))
                    if excl[fid] != 0:
                        continue
                    u = p ^ om
                    v = q ^ om
                    u_hole = nxt[u] != -1
                    v_hole = nxt[v] != -1
                    if (in_p[u] == 1 and not u_hole) or (in_p[v] == 1 and not v_hole):
                        continue
                    u_adj = u_hole and prv[p] == u
                    v_adj = v_hole and nxt[q] == v
                    u_far = u_hole and not u_adj
                    v_far = v_hole and not v_adj
                    if u_far or v_far:
                        if u_far and v_far:
                            w = nxt[q]
                            right = True
                            while True:
                                if w == v:
                                    break
                                if w == u:
                                    right = False
                                    break
                                w = nxt[w]
                            if not right:
                                continue
                        usable += 1  # ignored for now
                        continue
                    if u_adj and v_adj:
                        if hole_len == 4:
                            case = _CLOSE
                        else:
                            lo = u if u < v else v
                            if ecnt[lo * M1 + tpq] > 0:
                                continue
                            case = _AA
                    elif u_adj:
                        case = _AF
                    elif v_adj:
                        case = _FA
                    else:
                        case = _FF
                    usable += 1
                    if not have_pivot:
                        have_pivot = True
                        pv_p, pv_q, pv_u, pv_v, pv_case, pv_fid = p, q, u, v, case, fid
                if usable == 0:
                    dead = True
                    break
                p = q
            if dead or not have_pivot:
                descend = False
                continue
            # push frame and take the include branch
            top += 1
            fr_p[top] = pv_p
            fr_q[top] = pv_q
            fr_u[top] = pv_u
            fr_v[top] = pv_v
            fr_case[top] = pv_case
            fr_fid[top] = pv_fid
            fr_phase[top] = 1
            p, q, u, v, case = pv_p, pv_q, pv_u, pv_v, pv_case
            # place the face: adjust links, membership, edge cover counts
            for a, b in ((p, q), (q, v), (v, u), (u, p)):
                lo = a if a < b else b
                ecnt[lo * M1 + typ[a ^ b]] += 1
            if case == _FF:
                nxt[p] = u
                prv[u] = p
                nxt[u] = v
                prv[v] = u
                nxt[v] = q
                prv[q] = v
                in_p[u] = 1
                in_p[v] = 1
                free_cnt -= 2
                hole_len += 2
            elif case == _AF:
                nxt[u] = v
                prv[v] = u
                nxt[v] = q
                prv[q] = v
                nxt[p] = -1
                prv[p] = -1
                in_p[v] = 1
                free_cnt -= 1
            elif case == _FA:
                nxt[p] = u
                prv[u] = p
                nxt[u] = v
                prv[v] = u
                nxt[q] = -1
                prv[q] = -1
                in_p[u] = 1
                free_cnt -= 1
            elif case == _AA:
                nxt[u] = v
                prv[v] = u
                nxt[p] = -1
                prv[p] = -1
                nxt[q] = -1
                prv[q] = -1
                hole_len -= 2
            else:  # _CLOSE
                nxt[p] = -1
                prv[p] = -1
                nxt[q] = -1
                prv[q] = -1
                nxt[u] = -1
                prv[u] = -1
                nxt[v] = -1
                prv[v] = -1
                hole_len -= 4
            placed[nplaced] = pv_fid
            nplaced += 1
            continue

        # return: unwind the top frame
        if top < 0:
            return nout
        phase = fr_phase[top]
        p, q, u, v = fr_p[top], fr_q[top], fr_u[top], fr_v[top]
        case = fr_case[top]
        fid = fr_fid[top]
        if phase == 1:
            # undo include
            for a, b in ((p, q), (q, v), (v, u), (u, p)):
                lo = a if a < b else b
                ecnt[lo * M1 + typ[a ^ b]] -= 1
            if case == _FF:
                nxt[p] = q
                prv[q] = p
                nxt[u] = -1
                prv[u] = -1
                nxt[v] = -1
                prv[v] = -1
                in_p[u] = 0
                in_p[v] = 0
                free_cnt += 2
                hole_len -= 2
            elif case == _AF:
                nxt[u] = p
                prv[p] = u
                nxt[p] = q
                prv[q] = p
                nxt[v] = -1
                prv[v] = -1
                in_p[v] = 0
                free_cnt += 1
            elif case == _FA:
                nxt[p] = q
                prv[q] = p
                nxt[q] = v
                prv[v] = q
                nxt[u] = -1
                prv[u] = -1
                in_p[u] = 0
                free_cnt += 1
            elif case == _AA:
                nxt[u] = p
                prv[p] = u
                nxt[p] = q
                prv[q] = p
                nxt[q] = v
                prv[v] = q
                hole_len += 2
            else:  # _CLOSE
                nxt[u] = p
                prv[p] = u
                nxt[p] = q
                prv[q] = p
                nxt[q] = v
                prv[v] = q
                nxt[v] = u
                prv[u] = v
                hole_len += 4
            nplaced -= 1
            # switch to the exclude branch
            excl[fid] = 1
            fr_phase[top] = 2
            descend = True
            continue
        # phase 2: undo exclude and pop
        excl[fid] = 0
        top -= 1
        descend = False


_fill_kernel_fast = njit(cache=True)(_fill_kernel) if _HAVE_NUMBA else _fill_kernel


class FillContext:
    """Reusable buffers for filling many cycles of the same dimension."""

    def __init__(self, m: int, use_numba: bool = True, capacity: int = 4096):
        self.m = m
        NV = 1 << m
        M1 = m + 1
        nf = num_faces(m)
        tmask = np.zeros(M1, dtype=np.int64)
        for t in range(1, m + 1):
            tmask[t] = 1 << (m - t)
        pidx = np.zeros(M1 * M1 + 1, dtype=np.int64)
        k = 0
        for a in range(1, m + 1):
            for b in range(a + 1, m + 1):
                pidx[a * M1 + b] = k
                k += 1
        pidx[m * M1 + m] = nf * NV  # sentinel: size of the excl array
        typ = np.zeros(NV, dtype=np.int64)
        for t in range(1, m + 1):
            typ[1 << (m - t)] = t
        maxd = 2 * nf * NV + 16
        self._state = (
            np.full(NV, -1, dtype=np.int64),      # nxt
            np.full(NV, -1, dtype=np.int64),      # prv
            np.zeros(NV, dtype=np.uint8),         # in_p
            np.zeros(NV * M1, dtype=np.int64),    # ecnt
            np.zeros(nf * NV, dtype=np.uint8),    # excl
            np.zeros(NV, dtype=np.int64),         # placed
            np.zeros(maxd, dtype=np.int64),       # fr_p
            np.zeros(maxd, dtype=np.int64),       # fr_q
            np.zeros(maxd, dtype=np.int64),       # fr_u
            np.zeros(maxd, dtype=np.int64),       # fr_v
            np.zeros(maxd, dtype=np.int64),       # fr_case
            np.zeros(maxd, dtype=np.int64),       # fr_fid
            np.zeros(maxd, dtype=np.int64),       # fr_phase
            tmask, pidx, typ,
        )
        self._fn = _fill_kernel_fast if use_numba else _fill_kernel
        self._cap = capacity

    def fill_face_ids(self, boundary_labels) -> np.ndarray:
        """All fillings of the realized cycle, as sorted face-id rows."""
        bd = np.asarray(boundary_labels, dtype=np.int64)
        fmax = inner_face_count(self.m, len(bd))
        while True:
            out = np.zeros((self._cap, max(fmax, 1)), dtype=np.int64)
            n = self._fn(self.m, bd, self._state, out)
            if n >= 0:
                return out[:n]
            self._cap *= 2


def face_vertices(fid: int, m: int) -> tuple[int, int, int, int]:
    """Vertex 4-cycle of a face id (pair index * 2^m + base vertex)."""
    NV = 1 << m
    base = fid % NV
    k = fid // NV
    if k >= m * (m - 1) // 2:
        raise ValueError(f"face id {fid} out of range for Q_{m}")
    a = 1
    while True:
        span = m - a
        if k < span:
            b = a + 1 + k
            break
        k -= span
        a += 1
    ma, mb = 1 << (m - a), 1 << (m - b)
    return (base, base | ma, base | ma | mb, base | mb)


def face_id(cycle, m: int) -> int:
    """Inverse of :func:`face_vertices` for any orientation of the cycle."""
    NV = 1 << m
    base = min(cycle)
    both = 0
    for x in cycle:
        both |= x ^ base
    a = m - both.bit_length() + 1
    rest = both ^ (1 << (m - a))
    b = m - rest.bit_length() + 1
    k = 0
    for i in range(1, a):
        k += m - i
    k += b - a - 1
    return k * NV + base


@dataclass(frozen=True)
class CQuadrangulation:
    """One filling: boundary cycle plus the set of inner 4-faces."""

    m: int
    boundary: tuple[int, ...]
    face_ids: tuple[int, ...]

    @property
    def faces(self):
        return [face_vertices(f, self.m) for f in self.face_ids]

    def edges(self):
        es = set()
        for f in self.faces:
            for i in range(4):
                a, b = f[i], f[(i + 1) % 4]
                es.add((min(a, b), max(a, b)))
        l = len(self.boundary)
        for i in range(l):
            a, b = self.boundary[i], self.boundary[(i + 1) % l]
            es.add((min(a, b), max(a, b)))
        return es

    def to_plane_graph(self) -> PlaneGraph:
        g = embedding_from_faces(self.faces + [self.boundary[::-1]], self.m)
        return g.with_outer(self.boundary[::-1])


def realize_cycle(tau, m: int) -> tuple[int, ...]:
    """Concrete labels of the boundary cycle walked from 0."""
    verts = hc.walk_vertices(tau, m)
    if verts[-1] != 0 or len(set(verts[:-1])) != len(tau):
        raise ValueError(f"{tau} does not encode a simple cycle in Q_{m}")
    return tuple(verts[:-1])


def fill(labels, m: int, ctx: FillContext | None = None):
    """Stream every C-quadrangulation over an explicitly realized boundary."""
    if ctx is None:
        ctx = FillContext(m)
    labels = tuple(labels)
    for row in ctx.fill_face_ids(labels):
        yield CQuadrangulation(m, labels, tuple(int(f) for f in row))


def fill_types(tau, m: int, ctx: FillContext | None = None):
    """Stream every C-quadrangulation of the cycle walked from 0."""
    return fill(realize_cycle(tau, m), m, ctx)


@dataclass
class FillState:
    """Inspectable mirror of the search state, for face classification.

    ``hole`` is the boundary walk of the face still to be quadrangulated
    (successor map along the hole cycle), ``placed`` the vertices of the
    partial filling, ``covered`` the edges already covered on both sides,
    ``excluded`` the face ids barred on the current branch.
    """

    m: int
    hole: dict[int, int]
    placed: set[int]
    covered: set[tuple[int, int]]
    excluded: set[int]

    @classmethod
    def fresh(cls, boundary, m: int) -> "FillState":
        hole = {a: b for a, b in zip(boundary, boundary[1:] + boundary[:1])}
        return cls(m, hole, set(boundary), set(), set())

    def hole_prev(self, v: int) -> int:
        for a, b in self.hole.items():
            if b == v:
                return a
        raise KeyError(v)


def classify_face(state: FillState, e: tuple[int, int], fid: int) -> str:
    """Status of 4-cycle ``fid`` relative to hole edge ``e = (p, q)``."""
    p, q = e
    if state.hole.get(p) != q:
        raise ValueError(f"{e} is not a hole edge")
    if fid in state.excluded:
        return EXCLUDED
    verts = face_vertices(fid, state.m)
    if p not in verts or q not in verts:
        raise ValueError(f"face {fid} does not contain edge {e}")
    om = 0
    for x in verts:
        if x not in (p, q):
            om = x ^ (p if (x ^ p).bit_count() == 1 else q)
            break
    u, v = p ^ om, q ^ om
    u_hole, v_hole = u in state.hole, v in state.hole
    if (u in state.placed and not u_hole) or (v in state.placed and not v_hole):
        return EXCLUDED
    u_adj = u_hole and state.hole[u] == p
    v_adj = v_hole and state.hole[q] == v
    if (u_hole and not u_adj) or (v_hole and not v_adj):
        if u_hole and v_hole:
            w = state.hole[q]
            while True:
                if w == v:
                    return IGNORED
                if w == u:
                    return EXCLUDED  # wrong cyclic order
                w = state.hole[w]
        return IGNORED
    if u_adj and v_adj and len(state.hole) > 4:
        key = (min(u, v), max(u, v))
        if key in state.covered:
            return EXCLUDED
    return ELIGIBLE


def detect_dead_end(state: FillState) -> bool:
    """True iff some hole edge has no possible covering face left."""
    for p, q in state.hole.items():
        pq = p ^ q
        any_usable = False
        for t in range(1, state.m + 1):
            om = 1 << (state.m - t)
            if om == pq:
                continue
            fid = face_id((p, q, q ^ om, p ^ om), state.m)
            if classify_face(state, (p, q), fid) != EXCLUDED:
                any_usable = True
                break
        if not any_usable:
            return True
    return False
