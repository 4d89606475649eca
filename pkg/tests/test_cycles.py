from collections import Counter

import pytest

from vennquad import cycles, hypercube as hc
from vennquad.errors import DimensionTooSmall

from oracles import all_cycles_through_zero, cycle_orbits_by_group, vertex_cycle_to_types


def test_min_boundary_length():
    assert cycles.min_boundary_length(6) == 22
    assert cycles.min_boundary_length(5) == 12
    assert cycles.min_boundary_length(4) == 8
    assert cycles.min_boundary_length(3) == 4
    with pytest.raises(DimensionTooSmall):
        cycles.min_boundary_length(2)


def test_q2_unique_cycle():
    got = list(cycles.enumerate_cycles(2, 4))
    assert got == [(1, 2, 1, 2)]


def _oracle_canonical_set(m, length):
    reps = set()
    for cyc in all_cycles_through_zero(m, max_len=length):
        if len(cyc) == length:
            reps.add(hc.canonicalize_cycle(vertex_cycle_to_types(cyc, m)))
    return reps


@pytest.mark.parametrize("m,length", [(3, 4), (3, 6), (3, 8), (4, 6), (4, 8)])
def test_matches_translation_oracle(m, length):
    got = list(cycles.enumerate_cycles(m, length, use_numba=False))
    assert len(set(got)) == len(got)
    for tau in got:
        assert hc.is_canonical_cycle(tau)
    assert set(got) == _oracle_canonical_set(m, length)


def test_q3_orbits_by_explicit_group():
    orbits = cycle_orbits_by_group(3)
    counts = cycles.count_cycles(3, [4, 6, 8], use_numba=False)
    assert counts == {l: len(orbits.get(l, [])) for l in (4, 6, 8)}
    # Q_3: the face, the two hexagon kinds, and the Gray-code cycle
    assert counts == {4: 1, 6: 2, 8: 1}


def test_q4_total_orbits_vs_group():
    orbits = cycle_orbits_by_group(4)
    lengths = list(range(4, 17, 2))
    counts = cycles.count_cycles(4, lengths)
    assert counts == {l: len(orbits.get(l, [])) for l in lengths}


def test_q4_hamilton_count_is_nine():
    # Gray-code equivalence classes of Q_4, OEIS A159344 entry 4
    assert cycles.count_cycles(4, [16]) == {16: 9}


def test_numba_and_python_agree():
    for m, l in [(3, 6), (4, 8), (4, 12)]:
        fast = list(cycles.enumerate_cycles(m, l, use_numba=True))
        slow = list(cycles.enumerate_cycles(m, l, use_numba=False))
        assert fast == slow


def test_prefix_tasks_partition():
    full = list(cycles.enumerate_cycles_window(4, [8, 10, 12]))
    for depth in (1, 2, 3):
        tasks = cycles.cycle_tasks(4, depth)
        merged = []
        for p in tasks:
            merged.extend(cycles.enumerate_cycles_window(4, [8, 10, 12], prefix=p))
        assert merged == full


def test_emitted_orbits_are_disjoint():
    got = list(cycles.enumerate_cycles(4, 10))
    seen = set()
    for tau in got:
        mine = {hc.lexmin_relabel(tuple(var), 4)[0] for var in hc.cycle_variants(tau)}
        assert not (mine & seen)
        seen |= mine
    # counts per length sum like the window run
    window = Counter(l for l, _ in cycles.enumerate_cycles_window(4, [10]))
    assert window[10] == len(got)
