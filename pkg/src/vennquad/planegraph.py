"""Rotation-system plane graphs over hypercube-labeled vertices.

A plane (sphere) embedding is stored as a rotation system: for every vertex
the cyclic clockwise order of its neighbors.  Faces are never stored; they
are traced on demand, which keeps the embedding and the face structure
consistent by construction.  The complementary constructor
:func:`embedding_from_faces` rebuilds a rotation system from a full face
list, which is how every composite construction in this package (hole
filling, gluing halves, ladder doubling, curve insertion) produces its
output embedding.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from vennquad.errors import BrokenEmbedding, NotConnected

log = logging.getLogger(__name__)


def face_key(cycle):
    """Canonical key of a face cycle: minimal rotation over both directions."""
    cycle = tuple(cycle)
    best = None
    for seq in (cycle, cycle[::-1]):
        k = len(seq)
        for s in range(k):
            cand = seq[s:] + seq[:s]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable labeled plane graph.

    ``rot`` maps each vertex label to the tuple of its neighbors in clockwise
    order.  ``n`` is the bit width of the labels.  ``outer`` optionally names
    the outer face (a face cycle as traced by :meth:`faces`).
    """

    n: int
    rot: dict[int, tuple[int, ...]]
    outer: tuple[int, ...] | None = None
    _face_cache: list = field(default=None, compare=False, repr=False)

    @property
    def vertices(self):
        return self.rot.keys()

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int):
        return self.rot[v]

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.rot.values()) // 2

    def edges(self):
        for u, nbs in self.rot.items():
            for v in nbs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rot.get(u, ())

    def check_symmetric_simple(self):
        """Each adjacency appears exactly once on both sides."""
        for u, nbs in self.rot.items():
            if len(set(nbs)) != len(nbs):
                log.warning("parallel edges at vertex %d rejected: %s", u, nbs)
                raise BrokenEmbedding(f"parallel edges at vertex {u}")
            for v in nbs:
                if v == u:
                    raise BrokenEmbedding(f"loop at vertex {u}")
                if u not in self.rot.get(v, ()):
                    raise BrokenEmbedding(f"one-sided edge ({u}, {v})")

    def next_in_face(self, u: int, v: int):
        """Directed-edge successor: the face to the left of u->v continues
        with the neighbor that follows u in the rotation at v."""
        nbs = self.rot[v]
        i = nbs.index(u)
        return v, nbs[(i + 1) % len(nbs)]

    def faces(self):
        """All faces as vertex cycles; each directed edge lies in one face."""
        if self._face_cache is not None:
            return self._face_cache
        seen = set()
        out = []
        for u, nbs in self.rot.items():
            for v in nbs:
                if (u, v) in seen:
                    continue
                cyc = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    cyc.append(a)
                    a, b = self.next_in_face(a, b)
                if (a, b) != (u, v):
                    raise BrokenEmbedding("face trace did not close")
                out.append(tuple(cyc))
        object.__setattr__(self, "_face_cache", out)
        return out

    def is_connected(self) -> bool:
        if not self.rot:
            return False
        start = next(iter(self.rot))
        seen = {start}
        stack = [start]
        while stack:
            for w in self.rot[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.rot)

    def euler_genus_zero(self) -> bool:
        if not self.is_connected():
            raise NotConnected("Euler check needs a connected graph")
        return len(self.rot) - self.num_edges() + len(self.faces()) == 2

    def mirror(self) -> "PlaneGraph":
        """Reflected embedding: all rotation orders reversed."""
        outer = self.outer[::-1] if self.outer else None
        return PlaneGraph(self.n, {v: nb[::-1] for v, nb in self.rot.items()},
                          outer)

    def relabel(self, f, n: int | None = None) -> "PlaneGraph":
        """Apply a label map ``f`` (callable) to every vertex."""
        outer = tuple(f(v) for v in self.outer) if self.outer else None
        return PlaneGraph(n if n is not None else self.n,
                          {f(v): tuple(f(w) for w in nb)
                           for v, nb in self.rot.items()}, outer)

    def xor_relabel(self, c: int) -> "PlaneGraph":
        return self.relabel(lambda v: v ^ c)

    def with_outer(self, face) -> "PlaneGraph":
        return PlaneGraph(self.n, self.rot, tuple(face))


def embedding_from_faces(faces, n: int) -> PlaneGraph:
    """Reconstruct a rotation system from a complete face list.

    ``faces`` must be the faces of a sphere embedding, each given as a vertex
    cycle in either direction: every edge has to appear in exactly two face
    slots.  Orientations are made globally consistent by propagation, then
    the clockwise neighbor order at each vertex is read off the corners.
    """
    faces = [tuple(f) for f in faces]
    slots: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(faces):
        k = len(f)
        if len(set(f)) != k:
            raise BrokenEmbedding(f"face with repeated vertex: {f}")
        for i in range(k):
            e = (min(f[i], f[(i + 1) % k]), max(f[i], f[(i + 1) % k]))
            slots.setdefault(e, []).append(fi)
    for e, fs in slots.items():
        if len(fs) != 2:
            raise BrokenEmbedding(f"edge {e} lies in {len(fs)} faces")

    # orient faces so that every directed edge is used exactly once
    orient = [0] * len(faces)  # 0 unknown, 1 as given, -1 reversed

    def directed_uses(fi):
        f = faces[fi] if orient[fi] == 1 else faces[fi][::-1]
        k = len(f)
        return [(f[i], f[(i + 1) % k]) for i in range(k)]

    for seed in range(len(faces)):
        if orient[seed]:
            continue
        orient[seed] = 1
        stack = [seed]
        while stack:
            fi = stack.pop()
            for a, b in directed_uses(fi):
                e = (min(a, b), max(a, b))
                other = slots[e][0] if slots[e][1] == fi else slots[e][1]
                if other == fi:  # same face twice: orientation already fixed
                    continue
                g = faces[other]
                k = len(g)
                idx = [(g[i], g[(i + 1) % k]) for i in range(k)]
                want = -1 if (a, b) in idx else 1  # other must use (b, a)
                if orient[other] == 0:
                    orient[other] = want
                    stack.append(other)
                elif orient[other] != want:
                    raise BrokenEmbedding("faces cannot be oriented consistently")

    succ: dict[int, dict[int, int]] = {}
    for fi, f in enumerate(faces):
        g = f if orient[fi] == 1 else f[::-1]
        k = len(g)
        for i in range(k):
            u, v, w = g[i], g[(i + 1) % k], g[(i + 2) % k]
            sv = succ.setdefault(v, {})
            if u in sv:
                raise BrokenEmbedding(f"corner conflict at vertex {v}")
            sv[u] = w

    rot = {}
    for v, sv in succ.items():
        start = next(iter(sv))
        order = [start]
        while True:
            nxt = sv[order[-1]]
            if nxt == start:
                break
            order.append(nxt)
            if len(order) > len(sv):
                raise BrokenEmbedding(f"rotation at {v} does not close")
        if len(order) != len(sv):
            raise BrokenEmbedding(f"rotation at {v} splits into several cycles")
        rot[v] = tuple(order)

    g = PlaneGraph(n, rot)
    if len(g.faces()) != len(faces):
        raise BrokenEmbedding("reconstructed embedding has wrong face count")
    return g
