"""Venn quadrangulations: validation and property predicates.

The dual graph of a simple n-Venn diagram is a plane graph whose vertices
are the 2**n region labels, and it is characterized by three conditions:

1. it is a connected spanning subgraph of the hypercube Q_n,
2. every face (including the outer face) is a 4-cycle,
3. for every bit position i and value b, the subgraph induced by the
   vertices with bit i equal to b is connected.

``validate`` checks all three plus the counts they force (V = 2**n,
E = 2**(n+1) - 4, F = 2**n - 2).  The predicates below decide the diagram
properties used in the census: *monotone* (every interior weight class sees
both adjacent weight classes, relative to a marked outer vertex), *exposed*
(the marked vertex has degree n, so the outer region touches all curves) and
*reducible* (some edge type forms a perfect matching, i.e. some curve can be
deleted).
"""

from __future__ import annotations

from dataclasses import dataclass

from vennquad import hypercube as hc
from vennquad.errors import (
    BadLabelLength,
    HalfspaceDisconnected,
    NonQuadFace,
    NotConnected,
    NotSpanning,
    VennError,
)
from vennquad.planegraph import PlaneGraph, embedding_from_faces, face_key


@dataclass(frozen=True)
class VennQuadrangulation:
    """A validated n-Venn quadrangulation, optionally with a marked vertex
    standing for the outer region."""

    graph: PlaneGraph
    n: int
    marked: int | None = None

    @property
    def vertices(self):
        return self.graph.vertices

    def with_marking(self, v: int) -> "VennQuadrangulation":
        if v not in self.graph.rot:
            raise VennError(f"marking {v} is not a vertex")
        return VennQuadrangulation(self.graph, self.n, v)


def _induced_connected(g: PlaneGraph, members) -> bool:
    members = set(members)
    if not members:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        for w in g.rot[stack.pop()]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == members


def validate(g: PlaneGraph, marked: int | None = None) -> VennQuadrangulation:
    """Check conditions 1-3 and the derived counts; return the typed value.

    Raises ``NotSpanning``, ``NotConnected``, ``NonQuadFace``,
    ``HalfspaceDisconnected`` or ``BadLabelLength`` accordingly.
    """
    n = g.n
    nv = 2**n
    for v in g.rot:
        if not 0 <= v < nv:
            raise BadLabelLength(f"label {v} does not fit in {n} bits")
    g.check_symmetric_simple()
    for u, v in g.edges():
        hc.edge_type(u, v, n)  # raises NotHypercubeEdge on bad pairs
    if len(g.rot) != nv:
        raise NotSpanning(f"{len(g.rot)} of {nv} vertices present")
    if not g.is_connected():
        raise NotConnected("graph is disconnected")
    faces = g.faces()
    for f in faces:
        if len(f) != 4:
            raise NonQuadFace(f)
    ne = g.num_edges()
    if ne != 2 ** (n + 1) - 4 or len(faces) != nv - 2:
        # with all-quad faces this is equivalent to the Euler check
        raise NonQuadFace(faces[0] if ne * 2 != 4 * len(faces) else ())
    if len(g.rot) - ne + len(faces) != 2:
        raise NonQuadFace(())
    for i in range(1, n + 1):
        mask = hc.type_mask(i, n)
        for b in (0, 1):
            members = [v for v in g.rot if bool(v & mask) == bool(b)]
            if not _induced_connected(g, members):
                raise HalfspaceDisconnected(i, b)
    if marked is not None and marked not in g.rot:
        raise VennError(f"marking {marked} is not a vertex")
    return VennQuadrangulation(g, n, marked)


def is_monotone(q: VennQuadrangulation, marking: int) -> bool:
    """Monotone relative to ``marking`` as the outer region: after XOR
    relabeling that sends the marking to 0, every vertex of interior weight
    has neighbors of weight one less and one more."""
    g, n = q.graph, q.n
    for v in g.rot:
        w = hc.weight(v ^ marking)
        if 0 < w < n:
            up = down = False
            for u in g.rot[v]:
                wu = hc.weight(u ^ marking)
                up = up or wu == w + 1
                down = down or wu == w - 1
            if not (up and down):
                return False
    return True


def is_exposed(q: VennQuadrangulation, marking: int) -> bool:
    """The marked outer-region vertex touches all n curves iff its degree
    is n (incident hypercube edges have pairwise distinct types)."""
    return q.graph.degree(marking) == q.n


def type_matching(q: VennQuadrangulation, i: int):
    """All type-i edges; a matching because x has at most one type-i
    neighbor, namely x with bit i flipped."""
    mask = hc.type_mask(i, q.n)
    return sorted((v, v ^ mask) for v in q.graph.rot
                  if not v & mask and q.graph.has_edge(v, v ^ mask))


def matching_sizes(q: VennQuadrangulation) -> dict[int, int]:
    sizes = dict.fromkeys(range(1, q.n + 1), 0)
    for u, v in q.graph.edges():
        sizes[hc.edge_type(u, v, q.n)] += 1
    return sizes


def is_reducible(q: VennQuadrangulation, check_contraction: bool = False):
    """The smallest type whose matching is perfect (size 2**(n-1)), or None.

    Such a matching pairs every x with its bit-i flip, which is exactly the
    condition under which curve i can be deleted.  With
    ``check_contraction`` the reduction is performed and validated.
    """
    sizes = matching_sizes(q)
    for i in range(1, q.n + 1):
        if sizes[i] == 2 ** (q.n - 1):
            if check_contraction:
                validate(contract_type(q, i))
            return i
    return None


def contract_type(q: VennQuadrangulation, i: int) -> PlaneGraph:
    """Contract the perfect type-i matching and drop bit i: the dual of
    removing curve i from the diagram."""
    n = q.n
    mask = hc.type_mask(i, n)
    low = mask - 1

    def drop(v: int) -> int:
        return (v >> (n - i + 1) << (n - i)) | (v & low) if i > 1 else v & low

    # splice the two rotations at the contracted edge, then collapse the
    # bigons left by 4-faces that contained two matching edges
    rot = {}
    for v in q.graph.rot:
        if v & mask:
            continue
        u = v ^ mask
        rv, ru = q.graph.rot[v], q.graph.rot[u]
        iv, iu = rv.index(u), ru.index(v)
        merged = [drop(w) for w in (*rv[iv + 1:], *rv[:iv],
                                    *ru[iu + 1:], *ru[:iu])]
        out = []
        for w in merged:
            if out and out[-1] == w:
                continue
            out.append(w)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        rot[drop(v)] = tuple(out)
    return PlaneGraph(n - 1, rot)


def all_four_cycles_bound_faces(q: VennQuadrangulation) -> bool:
    """Every 4-cycle of the graph is a face (a theorem for valid inputs,
    re-checked empirically by the invariant suite)."""
    g = q.graph
    fkeys = {face_key(f) for f in g.faces()}
    for v in g.rot:
        nbs = g.rot[v]
        for a in nbs:
            for b in nbs:
                if a >= b:
                    continue
                w = a ^ b ^ v
                if w != v and g.has_edge(a, w) and g.has_edge(b, w):
                    if face_key((v, a, w, b)) not in fkeys:
                        return False
    return True


def opposite_edge_types_ok(q: VennQuadrangulation) -> bool:
    """In every 4-face, opposite edges have equal type (two types total)."""
    n = q.n
    for f in q.graph.faces():
        a, b, c, d = f
        t = [hc.edge_type(a, b, n), hc.edge_type(b, c, n),
             hc.edge_type(c, d, n), hc.edge_type(d, a, n)]
        if t[0] != t[2] or t[1] != t[3] or t[0] == t[1]:
            return False
    return True


def cube_quadrangulation() -> VennQuadrangulation:
    """The 3-cube as the unique 3-Venn quadrangulation."""
    faces = []
    for i in range(3):
        for j in range(i + 1, 3):
            mi, mj = 1 << (2 - i), 1 << (2 - j)
            for base in range(8):
                if base & (mi | mj):
                    continue
                faces.append((base, base | mi, base | mi | mj, base | mj))
    return validate(embedding_from_faces(faces, 3))


def two_venn_quadrangulation() -> VennQuadrangulation:
    """The 4-cycle on two curves, the unique 2-Venn quadrangulation."""
    cyc = (0b00, 0b01, 0b11, 0b10)
    return validate(embedding_from_faces([cyc, cyc[::-1]], 2))
