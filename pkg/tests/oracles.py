"""Independent brute-force oracles used by the test suite.

Everything in here is deliberately naive: straight enumeration plus explicit
group actions, with no shared code paths into the algorithms under test.
"""

from __future__ import annotations

import itertools


def q_neighbors(v: int, m: int):
    return [v ^ (1 << i) for i in range(m)]


def all_cycles_through_zero(m: int, max_len: int | None = None):
    """All simple cycles of Q_m through vertex 0, as vertex tuples starting
    at 0.  Each undirected cycle appears exactly once (direction fixed by
    second vertex < last vertex)."""
    limit = max_len or 2**m
    cycles = []
    path = [0]
    on_path = {0}

    def rec(v):
        for w in q_neighbors(v, m):
            if w == 0 and len(path) >= 4:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w not in on_path and len(path) < limit:
                path.append(w)
                on_path.add(w)
                rec(w)
                on_path.remove(w)
                path.pop()

    rec(0)
    return cycles


def vertex_cycle_to_types(cyc, m: int):
    """Type sequence of a vertex cycle (positions 1..m, MSB-first)."""
    out = []
    for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
        d = a ^ b
        assert d.bit_count() == 1
        out.append(m - d.bit_length() + 1)
    return tuple(out)


def hypercube_automorphisms(m: int):
    """All 2^m * m! automorphisms of Q_m as explicit vertex maps."""
    maps = []
    for perm in itertools.permutations(range(m)):
        base = []
        for v in range(2**m):
            w = 0
            for i in range(m):
                if v >> perm[i] & 1:
                    w |= 1 << i
            base.append(w)
        for c in range(2**m):
            maps.append([w ^ c for w in base])
    return maps


def cycle_orbits_by_group(m: int):
    """Orbit representatives of all simple cycles of Q_m under the full
    automorphism group, keyed by length.  Uses explicit edge-set orbits."""

    def edge_key(cyc):
        es = []
        for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
            es.append((min(a, b), max(a, b)))
        return frozenset(es)

    # enumerate every cycle of Q_m once via smallest-vertex anchoring
    all_cycles = []
    for s in range(2**m):
        path = [s]
        on_path = {s}

        def rec(v):
            for w in q_neighbors(v, m):
                if w == s and len(path) >= 4:
                    if path[1] < path[-1]:
                        all_cycles.append(tuple(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    rec(w)
                    on_path.remove(w)
                    path.pop()

        rec(s)

    group = hypercube_automorphisms(m)
    seen = set()
    orbits = {}
    for cyc in all_cycles:
        k = edge_key(cyc)
        if k in seen:
            continue
        orbit = set()
        for g in group:
            img = frozenset((min(g[a], g[b]), max(g[a], g[b])) for a, b in k)
            orbit.add(img)
        seen |= orbit
        orbits.setdefault(len(cyc), []).append(k)
    return orbits
