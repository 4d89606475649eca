"""Enumeration of hypercube cycles up to automorphism.

Boundary-candidate cycles of Q_m are generated as canonical type sequences
(see :mod:`vennquad.hypercube`): a depth-first search over walks from 0
builds sequences in first-occurrence relabeled form and prunes every prefix
that can no longer be lexicographically minimal among the relabelings of its
cyclic shifts and reversals.  A complete canonicity check runs at each leaf,
so the pruning only needs to be sound, not sharp.

The search keeps one comparison state per cyclic shift: the relabeling map
of the shifted word is extended symbol by symbol and compared against the
prefix of the sequence under construction.  A shifted word that becomes
strictly smaller kills the branch; one that becomes strictly larger is
parked until backtracking.  Reversed words are checked once when their
start position is pushed (their remainder wraps around and is settled at
the leaf).

The hot loop is written against flat numpy arrays so that numba can compile
it; without numba the same function runs interpreted (fine for m <= 4).
"""

from __future__ import annotations

import numpy as np

from vennquad.errors import DimensionTooSmall

try:  # pragma: no cover - exercised implicitly by every fast run
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*a, **k):
        def wrap(f):
            return f

        return wrap if not a or not callable(a[0]) else a[0]


EQ = 1
DEAD = 0

# Outcomes of a prefix-vs-prefix comparison.
_LESS, _EQUAL, _GREATER = -1, 0, 1


def min_boundary_length(n: int) -> int:
    """Smallest boundary-cycle length that can carry an n-Venn split.

    A Venn quadrangulation on 2**n vertices has 2**(n+1) - 4 edges split
    into n type matchings, so the largest matching has at least
    (2**(n+1) - 4) / n edges; the matching doubles as a cycle in Q_{n-1},
    whose length must be even.
    """
    if n < 3:
        raise DimensionTooSmall(f"need n >= 3, got {n}")
    lo = -(-(2 ** (n + 1) - 4) // n)  # ceil
    return lo + (lo % 2)


def max_boundary_length(n: int) -> int:
    return 2 ** (n - 1)


def _kernel(m, lmax, want, prefix, state, out, counts, collect):
    """Resumable DFS step loop; returns (rows_emitted, exhausted)."""
    (tau, vert, visited, maxt, nexttype, status, rmap, rnext,
     ua_s, ua_cnt, ud_s, ud_cnt, rev_dead, misc, pc, tmask, smap) = state
    W = m + 2  # stride of rmap rows / scratch maps

    depth = misc[0]
    bottom = misc[1]
    nout = 0

    if misc[2] == 0:  # forced prefix not yet pushed
        misc[2] = 1
        ok = True
        for i in range(prefix.shape[0]):
            t = prefix[i]
            if t > min(maxt[depth] + 1, m):
                ok = False
                break
            # inline push of symbol t at position depth+1 (commit only)
            dd = depth + 1
            tau[depth] = t
            ua_cnt[dd] = 0
            ud_cnt[dd] = 0
            good = True
            for s in range(1, dd):
                if status[s] == EQ:
                    r = rmap[s * W + t]
                    fresh = r == 0
                    if fresh:
                        r = rnext[s]
                    c = tau[dd - s - 1]
                    if r < c:
                        good = False
                        break
                    if r > c:
                        status[s] = DEAD
                        ud_s[dd * (lmax + 2) + ud_cnt[dd]] = s
                        ud_cnt[dd] += 1
                    elif fresh:
                        rmap[s * W + t] = r
                        rnext[s] += 1
                        ua_s[dd * (lmax + 2) + ua_cnt[dd]] = s
                        ua_cnt[dd] += 1
            if good:
                for k in range(W):
                    smap[k] = 0
                nseen = 0
                cmpres = _EQUAL
                for j in range(dd):
                    sym = tau[depth - j]
                    r = smap[sym]
                    if r == 0:
                        nseen += 1
                        r = nseen
                        smap[sym] = r
                    c = tau[j]
                    if r < c:
                        cmpres = _LESS
                        break
                    if r > c:
                        cmpres = _GREATER
                        break
                if cmpres == _LESS:
                    good = False
                else:
                    rev_dead[dd] = 1 if cmpres == _GREATER else 0
            v = vert[depth] ^ tmask[t]
            if good and (v == 0 or visited[v] != 0 or dd + pc[v] > lmax):
                good = False
            if not good:
                # revert this push and give up on the whole task
                for k in range(ua_cnt[dd]):
                    s = ua_s[dd * (lmax + 2) + k]
                    rnext[s] -= 1
                    rmap[s * W + t] = 0
                for k in range(ud_cnt[dd]):
                    status[ud_s[dd * (lmax + 2) + k]] = EQ
                ok = False
                break
            visited[v] = 1
            vert[dd] = v
            maxt[dd] = maxt[depth] if maxt[depth] >= t else t
            nexttype[dd] = 1
            depth = dd
        bottom = depth
        misc[1] = bottom
        if not ok:
            misc[0] = depth
            return nout, True

    while True:
        descended = False
        if depth < lmax:
            t = nexttype[depth]
            tallow = maxt[depth] + 1
            if tallow > m:
                tallow = m
            while t <= tallow:
                nexttype[depth] = t + 1
                dd = depth + 1
                v = vert[depth] ^ tmask[t]
                closing = v == 0
                if closing:
                    usable = want[dd] != 0
                else:
                    usable = visited[v] == 0 and dd + pc[v] <= lmax
                if not usable:
                    t += 1
                    continue
                # push symbol t at position dd
                tau[depth] = t
                ua_cnt[dd] = 0
                ud_cnt[dd] = 0
                good = True
                for s in range(1, dd):
                    if status[s] == EQ:
                        r = rmap[s * W + t]
                        fresh = r == 0
                        if fresh:
                            r = rnext[s]
                        c = tau[dd - s - 1]
                        if r < c:
                            good = False
                            break
                        if r > c:
                            status[s] = DEAD
                            ud_s[dd * (lmax + 2) + ud_cnt[dd]] = s
                            ud_cnt[dd] += 1
                        elif fresh:
                            rmap[s * W + t] = r
                            rnext[s] += 1
                            ua_s[dd * (lmax + 2) + ua_cnt[dd]] = s
                            ua_cnt[dd] += 1
                if good:
                    for k in range(W):
                        smap[k] = 0
                    nseen = 0
                    cmpres = _EQUAL
                    for j in range(dd):
                        sym = tau[depth - j]
                        r = smap[sym]
                        if r == 0:
                            nseen += 1
                            r = nseen
                            smap[sym] = r
                        c = tau[j]
                        if r < c:
                            cmpres = _LESS
                            break
                        if r > c:
                            cmpres = _GREATER
                            break
                    if cmpres == _LESS:
                        good = False
                    else:
                        rev_dead[dd] = 1 if cmpres == _GREATER else 0

                if good and closing:
                    # completed walk; run the exact canonicity test at l=dd
                    l = dd
                    canonical = True
                    # wrapped tails of parked-equal forward shifts
                    for s in range(1, l):
                        if status[s] != EQ:
                            continue
                        for k in range(W):
                            smap[k] = rmap[s * W + k]
                        nseen = rnext[s] - 1
                        res = _EQUAL
                        for j in range(l - s + 1, l + 1):
                            sym = tau[(s + j - 1) % l]
                            r = smap[sym]
                            if r == 0:
                                nseen += 1
                                r = nseen
                                smap[sym] = r
                            c = tau[j - 1]
                            if r < c:
                                res = _LESS
                                break
                            if r > c:
                                res = _GREATER
                                break
                        if res == _LESS:
                            canonical = False
                            break
                    if canonical:
                        for i0 in range(1, l + 1):
                            if rev_dead[i0] != 0:
                                continue
                            for k in range(W):
                                smap[k] = 0
                            nseen = 0
                            res = _EQUAL
                            for j in range(1, l + 1):
                                sym = tau[(i0 - j) % l]
                                r = smap[sym]
                                if r == 0:
                                    nseen += 1
                                    r = nseen
                                    smap[sym] = r
                                c = tau[j - 1]
                                if r < c:
                                    res = _LESS
                                    break
                                if r > c:
                                    res = _GREATER
                                    break
                            if res == _LESS:
                                canonical = False
                                break
                    if canonical:
                        counts[l] += 1
                        if collect:
                            out[nout, 0] = l
                            for j in range(l):
                                out[nout, 1 + j] = tau[j]
                            nout += 1
                    good = False  # always retract a closing push

                if not good:
                    for k in range(ua_cnt[dd]):
                        s = ua_s[dd * (lmax + 2) + k]
                        rnext[s] -= 1
                        rmap[s * W + t] = 0
                    for k in range(ud_cnt[dd]):
                        status[ud_s[dd * (lmax + 2) + k]] = EQ
                    if collect and nout == out.shape[0]:
                        misc[0] = depth
                        return nout, False
                    t += 1
                    continue

                # commit and descend
                visited[v] = 1
                vert[dd] = v
                maxt[dd] = maxt[depth] if maxt[depth] >= t else t
                nexttype[dd] = 1
                depth = dd
                descended = True
                break

        if descended:
            continue
        if depth <= bottom:
            misc[0] = depth
            return nout, True
        # pop committed depth
        t = tau[depth - 1]
        for k in range(ua_cnt[depth]):
            s = ua_s[depth * (lmax + 2) + k]
            rnext[s] -= 1
            rmap[s * W + t] = 0
        for k in range(ud_cnt[depth]):
            status[ud_s[depth * (lmax + 2) + k]] = EQ
        visited[vert[depth]] = 0
        depth -= 1


_kernel_fast = njit(cache=True)(_kernel) if _HAVE_NUMBA else _kernel


class CycleSearch:
    """Resumable canonical-cycle search over Q_m.

    ``lengths`` is the set of cycle lengths to report; the DFS explores all
    of them in a single tree.  ``prefix`` pins the first type choices, which
    is how the work is partitioned across tasks.
    """

    def __init__(self, m: int, lengths, prefix=(), batch: int = 1 << 15,
                 use_numba: bool = True):
        if m < 2:
            raise DimensionTooSmall(f"need m >= 2, got {m}")
        lengths = sorted(set(int(l) for l in lengths))
        if not lengths:
            raise ValueError("no target lengths")
        for l in lengths:
            if l % 2 or l < 4 or l > 2 ** m:
                raise ValueError(f"invalid cycle length {l} for Q_{m}")
        self.m = m
        self.lmax = max(lengths)
        self.lengths = lengths
        lmax = self.lmax
        nv = 2 ** m
        want = np.zeros(lmax + 2, dtype=np.uint8)
        for l in lengths:
            want[l] = 1
        self._want = want
        self._prefix = np.asarray(prefix, dtype=np.int16)
        if len(prefix) > lmax:
            raise ValueError("prefix longer than maximum length")
        pc = np.array([v.bit_count() for v in range(nv)], dtype=np.int16)
        tmask = np.zeros(m + 1, dtype=np.int64)
        for t in range(1, m + 1):
            tmask[t] = 1 << (m - t)
        self._state = (
            np.zeros(lmax + 2, dtype=np.int16),        # tau
            np.zeros(lmax + 2, dtype=np.int64),        # vert
            np.zeros(nv, dtype=np.uint8),              # visited
            np.zeros(lmax + 2, dtype=np.int16),        # maxt
            np.ones(lmax + 2, dtype=np.int16),         # nexttype
            np.full(lmax + 2, EQ, dtype=np.int8),      # status
            np.zeros((lmax + 2) * (m + 2), dtype=np.int16),  # rmap
            np.ones(lmax + 2, dtype=np.int16),         # rnext
            np.zeros((lmax + 2) * (lmax + 2), dtype=np.int16),  # ua_s
            np.zeros(lmax + 2, dtype=np.int32),        # ua_cnt
            np.zeros((lmax + 2) * (lmax + 2), dtype=np.int16),  # ud_s
            np.zeros(lmax + 2, dtype=np.int32),        # ud_cnt
            np.zeros(lmax + 2, dtype=np.uint8),        # rev_dead
            np.zeros(4, dtype=np.int64),               # misc: depth, bottom, prefix-done
            pc, tmask,
            np.zeros(m + 2, dtype=np.int16),           # smap scratch
        )
        self._state[2][0] = 1  # start vertex is visited
        self._out = np.zeros((batch, lmax + 2), dtype=np.int16)
        self._counts = np.zeros(lmax + 2, dtype=np.int64)
        self._done = False
        self._fn = _kernel_fast if use_numba else _kernel

    def batches(self):
        """Yield numpy row batches [l, t_1..t_l, 0...] until exhausted."""
        while not self._done:
            n, done = self._fn(self.m, self.lmax, self._want, self._prefix,
                               self._state, self._out, self._counts, True)
            self._done = bool(done)
            if n:
                yield self._out[:n]

    def run_counts(self):
        """Exhaust the search without materializing sequences."""
        while not self._done:
            _, done = self._fn(self.m, self.lmax, self._want, self._prefix,
                               self._state, self._out, self._counts, False)
            self._done = bool(done)
        return {l: int(self._counts[l]) for l in self.lengths}

    @property
    def counts(self):
        return {l: int(self._counts[l]) for l in self.lengths}


def cycle_tasks(m: int, depth: int):
    """Deterministic list of DFS prefixes of the given depth.

    Concatenating the outputs of per-prefix searches in list order
    reproduces the unpartitioned enumeration order.
    """
    tasks = [()]
    for _ in range(depth):
        nxt = []
        for p in tasks:
            hi = min((max(p) if p else 0) + 1, m)
            for t in range(1, hi + 1):
                q = p + (t,)
                # keep only simple walks; canonicity pruning happens inside
                # the kernel when the prefix is forced
                seen = {0}
                x = 0
                ok = True
                for tt in q:
                    x ^= 1 << (m - tt)
                    if x in seen:
                        ok = False
                        break
                    seen.add(x)
                if ok:
                    nxt.append(q)
        tasks = nxt
    return tasks


def enumerate_cycles(m: int, length: int, prefix=(), use_numba: bool = True):
    """Canonical representatives of all simple length-``length`` cycles of
    Q_m, one per orbit under hypercube automorphisms, in lexicographic
    order."""
    search = CycleSearch(m, [length], prefix=prefix, use_numba=use_numba)
    for rows in search.batches():
        for row in rows:
            l = int(row[0])
            yield tuple(int(x) for x in row[1 : 1 + l])


def enumerate_cycles_window(m: int, lengths, prefix=(), use_numba: bool = True,
                            batch: int = 1 << 15):
    """Stream (length, type sequence) pairs for all target lengths at once."""
    search = CycleSearch(m, lengths, prefix=prefix, use_numba=use_numba,
                         batch=batch)
    for rows in search.batches():
        for row in rows:
            l = int(row[0])
            yield l, tuple(int(x) for x in row[1 : 1 + l])


def count_cycles(m: int, lengths, use_numba: bool = True):
    """Number of cycle orbits of each target length in Q_m."""
    return CycleSearch(m, lengths, use_numba=use_numba).run_counts()
