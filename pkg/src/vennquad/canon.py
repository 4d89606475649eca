"""Canonical codes, isomorph rejection, and serialization.

Isomorphism classes are decided through a canonical byte code of the
embedded graph: a breadth-first code is generated from every directed edge
in both chiralities, and the lexicographic minimum is the code.  For Venn
quadrangulations the sphere embedding is unique up to reflection and the
directed-edge sweep quotients out reflections and the outer-face choice, so
equal codes coincide with abstract-graph isomorphism; a brute-force oracle
at small n and randomized relabeling tests guard that assumption.

The runs that achieve the minimal code also give the automorphisms, from
which the vertex orbits follow; the marked census counts one entry per
orbit.

Two interchange formats are provided: standard graph6 (of the canonically
relabeled graph, labels dropped), and a binary rotation-list format that is
lossless including labels, embedding and marking.
"""

from __future__ import annotations

import struct

from vennquad.errors import (
    LabelRecoveryFailed,
    MalformedBinary,
    MalformedGraph6,
    VersionMismatch,
)
from vennquad.planegraph import PlaneGraph, embedding_from_faces, face_key
from vennquad.quadrangulation import VennQuadrangulation, validate


def _indexed(g: PlaneGraph):
    verts = sorted(g.rot)
    idx = {v: i for i, v in enumerate(verts)}
    rot = [[idx[w] for w in g.rot[v]] for v in verts]
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    return verts, rot, pos


def _sweep(g: PlaneGraph, want_maps: bool = False):
    """Minimal BFS code over (directed edge, chirality) starts.

    Returns (code, visit order of a winning run, automorphism maps as
    index arrays when requested).
    """
    verts, rot, pos = _indexed(g)
    nv = len(verts)
    best: list[int] | None = None
    best_order = None
    maps: list[list[int]] = []

    for u in range(nv):
        for v in rot[u]:
            for step in (1, -1):
                num = [0] * nv
                order = [u, v]
                num[u], num[v] = 1, 2
                entry = {u: v, v: u}
                code: list[int] = []
                k = 0
                status = 0  # 0 while equal to best, -1 once strictly better
                dead = False
                qi = 0
                while qi < len(order):
                    w = order[qi]
                    qi += 1
                    r = rot[w]
                    d = len(r)
                    start = pos[w][entry[w]]
                    for j in range(d):
                        x = r[(start + step * j) % d]
                        if num[x] == 0:
                            order.append(x)
                            num[x] = len(order)
                            entry[x] = w
                        c = num[x]
                        if status == 0 and best is not None:
                            if c > best[k]:
                                dead = True
                                break
                            if c < best[k]:
                                status = -1
                        code.append(c)
                        k += 1
                    if dead:
                        break
                    if status == 0 and best is not None:
                        if 0 > best[k]:
                            dead = True
                            break
                        if 0 < best[k]:
                            status = -1
                    code.append(0)
                    k += 1
                if dead:
                    continue
                if best is None or status == -1:
                    best = code
                    best_order = order
                    maps = [order]
                elif status == 0 and want_maps:
                    maps.append(order)

    return best, best_order, verts, maps


def canonical_code(q: VennQuadrangulation) -> bytes:
    """Byte code identifying the isomorphism class of the graph."""
    code, _, _, _ = _sweep(q.graph)
    return bytes(code)


def canonical_order(q: VennQuadrangulation) -> list[int]:
    """Vertex labels in the order of the winning code run."""
    _, order, verts, _ = _sweep(q.graph)
    return [verts[i] for i in order]


def vertex_orbits(q: VennQuadrangulation) -> list[list[int]]:
    """Orbits of the automorphism group, as lists of vertex labels."""
    _, _, verts, maps = _sweep(q.graph, want_maps=True)
    nv = len(verts)
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ref = maps[0]
    for mp in maps[1:]:
        for a, b in zip(ref, mp):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for i in range(nv):
        groups.setdefault(find(i), []).append(verts[i])
    return sorted(groups.values())


def automorphism_count(q: VennQuadrangulation) -> int:
    _, _, _, maps = _sweep(q.graph, want_maps=True)
    return len(maps)


# ---------------------------------------------------------------------------
# graph6


def _g6_size(data: bytes):
    if not data:
        raise MalformedGraph6("empty graph6 string")
    c = data[0]
    if c == 126:
        raise MalformedGraph6("multi-byte graph6 sizes not supported here")
    if not 63 <= c <= 126:
        raise MalformedGraph6(f"bad size byte {c}")
    return c - 63, 1


def to_graph6(q: VennQuadrangulation) -> str:
    """Standard graph6 of the canonically relabeled graph."""
    order = canonical_order(q)
    idx = {v: i for i, v in enumerate(order)}
    nv = len(order)
    if nv > 62:
        head = bytes([126, 63 + (nv >> 12), 63 + ((nv >> 6) & 63), 63 + (nv & 63)])
    else:
        head = bytes([63 + nv])
    bits = []
    for j in range(1, nv):
        for i in range(j):
            bits.append(1 if q.graph.has_edge(order[i], order[j]) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2)
                 for k in range(0, len(bits), 6))
    return (head + body).decode("ascii")


def _g6_parse(text: str):
    data = text.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[:1] == b"~" or not data:
        raise MalformedGraph6("unsupported or empty header")
    if data[0] == 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated size")
        nv = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        off = 4
    else:
        nv, off = _g6_size(data)
    need = (nv * (nv - 1) // 2 + 5) // 6
    if len(data) - off != need:
        raise MalformedGraph6(f"expected {need} body bytes, got {len(data) - off}")
    bits = []
    for c in data[off:]:
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"bad body byte {c}")
        bits.extend((c - 63) >> (5 - i) & 1 for i in range(6))
    adj = [[False] * nv for _ in range(nv)]
    k = 0
    for j in range(1, nv):
        for i in range(j):
            adj[i][j] = adj[j][i] = bool(bits[k])
            k += 1
    return nv, adj


def from_graph6(text: str) -> VennQuadrangulation:
    """Rebuild a Venn quadrangulation from graph6.

    graph6 stores the abstract graph only; the labels and the embedding are
    re-derived: every 4-cycle bounds a face, so the faces are exactly the
    4-cycles, and the edge types follow from the opposite-edges-equal rule.
    """
    nv, adj = _g6_parse(text)
    n = nv.bit_length() - 1
    if 2**n != nv:
        raise LabelRecoveryFailed(f"vertex count {nv} is not a power of two")
    nbrs = [[j for j in range(nv) if adj[i][j]] for i in range(nv)]
    quads = set()
    for i in range(nv):
        for a in nbrs[i]:
            for b in nbrs[i]:
                if a >= b:
                    continue
                for w in nbrs[a]:
                    if w != i and adj[b][w]:
                        quads.add(face_key((i, a, w, b)))
    if len(quads) != nv - 2:
        raise LabelRecoveryFailed(
            f"{len(quads)} quadrilaterals, need {nv - 2}")
    # union opposite edges into type classes
    edges = {}
    for i in range(nv):
        for j in nbrs[i]:
            if i < j:
                edges[(i, j)] = len(edges)
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def ekey(a, b):
        return edges[(a, b) if a < b else (b, a)]

    for fkv in quads:
        a, b, c, d = fkv
        union(ekey(a, b), ekey(c, d))
        union(ekey(b, c), ekey(d, a))
    classes = sorted({find(x) for x in parent})
    if len(classes) != n:
        raise LabelRecoveryFailed(
            f"{len(classes)} edge-type classes, need {n}")
    cls_bit = {c: 1 << (n - 1 - i) for i, c in enumerate(classes)}
    label = [-1] * nv
    label[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            lw = label[v] ^ cls_bit[find(ekey(v, w))]
            if label[w] == -1:
                label[w] = lw
                stack.append(w)
            elif label[w] != lw:
                raise LabelRecoveryFailed("inconsistent type propagation")
    if len(set(label)) != nv:
        raise LabelRecoveryFailed("labels collide")
    faces = [tuple(label[x] for x in fkv) for fkv in quads]
    g = embedding_from_faces(faces, n)
    return validate(g)


# ---------------------------------------------------------------------------
# binary rotation-list format

MAGIC = b"VQDB"
VERSION = 1


def plane_graph_to_binary(g: PlaneGraph, marked: int | None = None) -> bytes:
    nv = 2**g.n
    if sorted(g.rot) != list(range(nv)):
        raise MalformedBinary("binary format requires all labels present")
    out = [MAGIC, struct.pack("<BBB", VERSION, g.n, 1 if marked is not None else 0)]
    for v in range(nv):
        nbs = g.rot[v]
        out.append(struct.pack("<HB", v, len(nbs)))
        out.append(struct.pack(f"<{len(nbs)}H", *nbs) if nbs else b"")
    if marked is not None:
        out.append(struct.pack("<H", marked))
    return b"".join(out)


def to_binary(q: VennQuadrangulation) -> bytes:
    return plane_graph_to_binary(q.graph, q.marked)


def plane_graph_from_binary(data: bytes, offset: int = 0):
    """Parse one record stream; returns (PlaneGraph, marked, next offset)."""
    o = offset
    if data[o:o + 4] != MAGIC:
        raise MalformedBinary(f"bad magic at byte {o}")
    o += 4
    try:
        ver, n, flag = struct.unpack_from("<BBB", data, o)
    except struct.error as e:
        raise MalformedBinary(f"truncated header at byte {o}") from e
    if ver != VERSION:
        raise VersionMismatch(f"version {ver}, expected {VERSION}")
    o += 3
    rot = {}
    for v in range(2**n):
        try:
            lab, deg = struct.unpack_from("<HB", data, o)
        except struct.error as e:
            raise MalformedBinary(f"truncated record at byte {o}") from e
        if lab != v:
            raise MalformedBinary(f"record {v} carries label {lab} at byte {o}")
        o += 3
        try:
            nbs = struct.unpack_from(f"<{deg}H", data, o)
        except struct.error as e:
            raise MalformedBinary(f"truncated neighbors at byte {o}") from e
        o += 2 * deg
        rot[v] = tuple(nbs)
    marked = None
    if flag:
        try:
            (marked,) = struct.unpack_from("<H", data, o)
        except struct.error as e:
            raise MalformedBinary(f"truncated marking at byte {o}") from e
        o += 2
    return PlaneGraph(n, rot), marked, o


def from_binary(data: bytes) -> VennQuadrangulation:
    g, marked, end = plane_graph_from_binary(data)
    if end != len(data):
        raise MalformedBinary(f"{len(data) - end} trailing bytes")
    return validate(g, marked)


def write_stream(path, graphs):
    """Write consecutive binary records to a file."""
    with open(path, "wb") as fh:
        for item in graphs:
            if isinstance(item, VennQuadrangulation):
                fh.write(to_binary(item))
            else:
                g, marked = item
                fh.write(plane_graph_to_binary(g, marked))


def read_stream(path):
    """Yield (PlaneGraph, marked) pairs from a concatenated record file."""
    data = open(path, "rb").read()
    o = 0
    while o < len(data):
        g, marked, o = plane_graph_from_binary(data, o)
        yield g, marked
