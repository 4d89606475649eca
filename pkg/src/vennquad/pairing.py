"""Gluing two boundary fillings into a candidate Venn quadrangulation.

Two C-quadrangulations P and P' over the same boundary cycle
C = (x_1, ..., x_l) combine into a graph on twice the vertices: append a
1-bit to P's labels, a 0-bit to P''s labels, embed P' mirrored inside P's
outer face and connect the copies of every boundary vertex by a new edge.
The result always spans, is connected, and has only quadrilateral faces;
the only condition that can fail is halfspace connectivity, and the pair is
called *compatible* when it holds.

Halfspace connectivity of the glued graph decomposes along the boundary:
inside each half, the vertices of a halfspace class split into connected
chunks, and the rung edges merge chunks that share a boundary vertex.  The
pair is compatible iff, for every class, each half's chunks all touch the
boundary and the rung merges connect everything.  The per-half summaries
(:func:`prescreen`) depend on one filling only, so the quadratic pair loop
does near-linear work per pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from vennquad.errors import BoundaryMismatch
from vennquad.fill import CQuadrangulation
from vennquad.planegraph import PlaneGraph, embedding_from_faces
from vennquad.quadrangulation import VennQuadrangulation, validate


def _half_label(x: int, bit: int) -> int:
    return (x << 1) | bit


def glue(p: CQuadrangulation, pp: CQuadrangulation,
         bit_for_first: int = 1) -> PlaneGraph:
    """Union of the two halves plus the boundary rungs, as a plane graph.

    ``bit_for_first`` is the bit appended to the labels of ``p``; the other
    half gets the complement (and the mirrored embedding).
    """
    if p.boundary != pp.boundary or p.m != pp.m:
        raise BoundaryMismatch("halves do not share the boundary cycle")
    m = p.m
    b1, b0 = bit_for_first, 1 - bit_for_first
    faces = [tuple(_half_label(x, b1) for x in f) for f in p.faces]
    faces += [tuple(_half_label(x, b0) for x in f) for f in pp.faces]
    bd = p.boundary
    l = len(bd)
    for i in range(l):
        a, b = bd[i], bd[(i + 1) % l]
        faces.append((_half_label(a, 1), _half_label(b, 1),
                      _half_label(b, 0), _half_label(a, 0)))
    g = embedding_from_faces(faces, m + 1)
    # outer face: the rung quad at the first boundary edge
    outer = (_half_label(bd[0], 1), _half_label(bd[1], 1),
             _half_label(bd[1], 0), _half_label(bd[0], 0))
    return g.with_outer(outer)


@dataclass(frozen=True)
class Prescreen:
    """Per-(position, bit) summary of how a filling's halfspace classes
    meet the boundary.

    ``chunk[(i, b)]`` maps each boundary index whose vertex lies in the
    class to the id of its connected chunk; ``viable`` is False when some
    chunk avoids the boundary entirely (no pairing can ever reconnect it).
    """

    m: int
    viable: bool
    chunk: dict[tuple[int, int], dict[int, int]]
    nchunks: dict[tuple[int, int], int]


def prescreen(p: CQuadrangulation) -> Prescreen:
    m = p.m
    adj: dict[int, list[int]] = {v: [] for v in range(2**m)}
    for a, b in p.edges():
        adj[a].append(b)
        adj[b].append(a)
    bindex = {v: i for i, v in enumerate(p.boundary)}
    chunk = {}
    nchunks = {}
    viable = True
    for i in range(1, m + 1):
        mask = 1 << (m - i)
        for b in (0, 1):
            members = [v for v in range(2**m) if bool(v & mask) == bool(b)]
            comp = {}
            cid = 0
            for s in members:
                if s in comp:
                    continue
                stack = [s]
                comp[s] = cid
                touches = False
                while stack:
                    v = stack.pop()
                    if v in bindex:
                        touches = True
                    for w in adj[v]:
                        if bool(w & mask) == bool(b) and w not in comp:
                            comp[w] = cid
                            stack.append(w)
                if not touches:
                    viable = False
                cid += 1
            chunk[(i, b)] = {bindex[v]: c for v, c in comp.items() if v in bindex}
            nchunks[(i, b)] = cid
    return Prescreen(m, viable, chunk, nchunks)


def _chunks_compatible(sa: Prescreen, sb: Prescreen) -> bool:
    if not (sa.viable and sb.viable):
        return False
    for key in sa.chunk:
        ca, cb = sa.chunk[key], sb.chunk[key]
        na, nb = sa.nchunks[key], sb.nchunks[key]
        parent = list(range(na + nb))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j, a in ca.items():
            ra, rb = find(a), find(na + cb[j])
            if ra != rb:
                parent[ra] = rb
        roots = {find(x) for x in range(na + nb)}
        if len(roots) != 1:
            return False
    return True


def compatible(p: CQuadrangulation, pp: CQuadrangulation,
               sa: Prescreen | None = None, sb: Prescreen | None = None):
    """The validated n-Venn quadrangulation if the halves are compatible,
    else None.  Prescreen summaries may be passed in when cached."""
    if p.boundary != pp.boundary or p.m != pp.m:
        raise BoundaryMismatch("halves do not share the boundary cycle")
    sa = sa or prescreen(p)
    sb = sb or prescreen(pp)
    if not _chunks_compatible(sa, sb):
        return None
    return validate(glue(p, pp))


def halfspace_connected_directly(g: PlaneGraph) -> bool:
    """Independent condition-3 check by plain graph searches on the glued
    graph; the oracle against which the chunk merge is validated."""
    n = g.n
    for i in range(1, n + 1):
        mask = 1 << (n - i)
        for b in (0, 1):
            members = {v for v in g.rot if bool(v & mask) == bool(b)}
            start = next(iter(members))
            seen = {start}
            stack = [start]
            while stack:
                for w in g.rot[stack.pop()]:
                    if w in members and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != members:
                return False
    return True


def pair_all(fillings, keep=None):
    """Iterate unordered pairs (self-pairs included) of fillings of one
    boundary cycle, yielding the compatible glued quadrangulations."""
    fillings = list(fillings)
    screens = [prescreen(p) for p in fillings]
    for a in range(len(fillings)):
        if not screens[a].viable:
            continue
        for b in range(a, len(fillings)):
            if not screens[b].viable:
                continue
            q = compatible(fillings[a], fillings[b], screens[a], screens[b])
            if q is not None and (keep is None or keep(q)):
                yield q
