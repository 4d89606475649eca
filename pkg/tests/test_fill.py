import itertools

import pytest

from vennquad import fill as fl
from vennquad import cycles, quadrangulation as quad
from vennquad.planegraph import embedding_from_faces


def all_four_cycles(m):
    faces = []
    k = 0
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            ma, mb = 1 << (m - a), 1 << (m - b)
            for base in range(2**m):
                if not base & (ma | mb):
                    fid = k * 2**m + base
                    assert fl.face_id(fl.face_vertices(fid, m), m) == fid
                    faces.append(fid)
            k += 1
    return faces


def oracle_fillings(labels, m):
    """Brute force: every subset of the 4-cycles of Q_m that tiles the
    inside of the boundary (each boundary edge covered once, interior edges
    twice, spanning, sphere embedding)."""
    l = len(labels)
    bedges = set()
    for i in range(l):
        a, b = labels[i], labels[(i + 1) % l]
        bedges.add((min(a, b), max(a, b)))
    fids = all_four_cycles(m)
    want = fl.inner_face_count(m, l)
    good = set()
    for sub in itertools.combinations(fids, want):
        cover = {}
        for fid in sub:
            vs = fl.face_vertices(fid, m)
            for i in range(4):
                a, b = vs[i], vs[(i + 1) % 4]
                e = (min(a, b), max(a, b))
                cover[e] = cover.get(e, 0) + 1
        ok = all(c == (1 if e in bedges else 2) for e, c in cover.items())
        ok = ok and all(cover.get(e, 0) == 1 for e in bedges)
        if not ok:
            continue
        verts = set(labels)
        for fid in sub:
            verts |= set(fl.face_vertices(fid, m))
        if len(verts) != 2**m:
            continue
        try:
            faces = [fl.face_vertices(f, m) for f in sub]
            g = embedding_from_faces(faces + [tuple(labels[::-1])], m)
        except Exception:
            continue
        if g.is_connected() and g.euler_genus_zero():
            good.add(tuple(sorted(sub)))
    return good


def test_q2_unique_filling():
    got = list(fl.fill_types((1, 2, 1, 2), 2))
    assert len(got) == 1
    assert len(got[0].face_ids) == 1
    g = got[0].to_plane_graph()
    assert g.num_edges() == 4 and len(g.faces()) == 2


@pytest.mark.parametrize("tau", [(1, 2, 1, 3, 2, 3), (1, 2, 1, 3, 1, 2, 1, 3),
                                 (1, 2, 3, 1, 2, 3)])
def test_q3_fillings_match_subset_oracle(tau):
    labels = fl.realize_cycle(tau, 3)
    got = {c.face_ids for c in fl.fill(labels, 3)}
    assert got == oracle_fillings(labels, 3)


def test_q3_all_boundaries_match_oracle():
    for l in (4, 6, 8):
        for tau in cycles.enumerate_cycles(3, l):
            labels = fl.realize_cycle(tau, 3)
            got = [c.face_ids for c in fl.fill(labels, 3)]
            assert len(set(got)) == len(got), "duplicate filling"
            assert set(got) == oracle_fillings(labels, 3)


def test_q4_no_duplicates_and_counts():
    ctx = fl.FillContext(4)
    some = list(cycles.enumerate_cycles(4, 8))[:3] + list(cycles.enumerate_cycles(4, 16))[:2]
    for tau in some:
        labels = fl.realize_cycle(tau, 4)
        seen = set()
        for c in fl.fill(labels, 4, ctx):
            assert c.face_ids not in seen
            seen.add(c.face_ids)
            assert len(c.face_ids) == fl.inner_face_count(4, len(labels))
            # edge and face counts per Euler's formula
            assert len(c.edges()) == 2**5 - 2 - len(labels) // 2
            g = c.to_plane_graph()
            assert g.is_connected() and g.euler_genus_zero()
            inner = [f for f in g.faces() if len(f) == 4]
            assert len(g.faces()) - len(inner) in (0, 1)


def test_fill_python_matches_numba():
    for tau in [(1, 2, 1, 3, 2, 3), (1, 2, 3, 1, 2, 3)]:
        labels = fl.realize_cycle(tau, 3)
        fast = [c.face_ids for c in fl.fill(labels, 3, fl.FillContext(3, use_numba=True))]
        slow = [c.face_ids for c in fl.fill(labels, 3, fl.FillContext(3, use_numba=False))]
        assert fast == slow


def test_classify_face_cases():
    labels = fl.realize_cycle((1, 2, 1, 3, 1, 2, 1, 3), 3)  # Hamilton cycle of Q_3
    st = fl.FillState.fresh(labels, 3)
    p, q = labels[0], labels[1]
    pq = p ^ q
    for t in range(1, 4):
        om = 1 << (3 - t)
        if om == pq:
            continue
        fid = fl.face_id((p, q, q ^ om, p ^ om), 3)
        res = fl.classify_face(st, (p, q), fid)
        u, v = p ^ om, q ^ om
        if u in st.hole and st.hole[u] == p or v in st.hole and st.hole[q] == v:
            assert res in (fl.ELIGIBLE, fl.IGNORED, fl.EXCLUDED)
        # all vertices are on the Hamilton boundary: no face can have a
        # free vertex, so nothing is classified by the "new vertex" rule
        assert res in (fl.ELIGIBLE, fl.IGNORED, fl.EXCLUDED)
    # exclusion via the branch set is reported first
    st2 = fl.FillState.fresh(labels, 3)
    for t in range(1, 4):
        om = 1 << (3 - t)
        if om == pq:
            continue
        fid = fl.face_id((p, q, q ^ om, p ^ om), 3)
        if fl.classify_face(st2, (p, q), fid) == fl.ELIGIBLE:
            st2.excluded.add(fid)
            assert fl.classify_face(st2, (p, q), fid) == fl.EXCLUDED
            break


def test_detect_dead_end():
    labels = fl.realize_cycle((1, 2, 1, 2), 2)
    st = fl.FillState.fresh(labels, 2)
    assert not fl.detect_dead_end(st)
    st.excluded.add(fl.face_id((0b00, 0b01, 0b11, 0b10), 2))
    assert fl.detect_dead_end(st)
