import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aggucluster.oracle import brute_interval_cover, brute_set_cover, brute_set_cover_elements
from aggucluster.setcover import (
    CoverInstance,
    Interval,
    MultiIntervalInstance,
    atomic_decomposition,
    covers_union,
    greedy_bound,
    greedy_set_cover,
    multi_interval_set_cover,
    ply,
    setcover_to_multiinterval,
    solve_with_instance,
    union_measure,
)

Q123 = MultiIntervalInstance([[(0, 2)], [(1, 3)], [(0, 1), (2, 3)]])


@st.composite
def interval_instances(draw, max_sets=8, max_intervals=4, hi=20):
    sets = []
    for _ in range(draw(st.integers(1, max_sets))):
        q = []
        for _ in range(draw(st.integers(1, max_intervals))):
            a, b = sorted((draw(st.integers(0, hi)), draw(st.integers(0, hi))))
            q.append((a, b))
        sets.append(q)
    return MultiIntervalInstance(sets)


@st.composite
def abstract_instances(draw, max_n=7, max_sets=6):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.sets(st.integers(1, n)), min_size=1, max_size=max_sets))
    return n, sets


def test_atoms_overlapping_pair():
    ci = atomic_decomposition(MultiIntervalInstance([[(0, 2)], [(1, 3)]]))
    assert ci.atoms == [Interval(0, 1), Interval(1, 2), Interval(2, 3)]
    assert ci.covers == [frozenset({0, 1}), frozenset({1, 2})]


def test_atoms_single_and_disjoint():
    assert atomic_decomposition(MultiIntervalInstance([[(0, 1)]])).covers == [frozenset({0})]
    ci = atomic_decomposition(MultiIntervalInstance([[(0, 1)], [(2, 3)]]))
    assert ci.atoms == [Interval(0, 1), Interval(2, 3)]
    assert ci.covers == [frozenset({0}), frozenset({1})]


def test_atoms_isolated_point_kept():
    ci = atomic_decomposition(MultiIntervalInstance([[(0, 1)], [(5, 5)]]))
    assert Interval(5, 5) in ci.atoms


def test_atoms_point_inside_interval_merged():
    ci = atomic_decomposition(MultiIntervalInstance([[(0, 2)], [(1, 1)]]))
    assert all(a.hi > a.lo for a in ci.atoms)


def test_greedy_trace():
    ci = CoverInstance([Interval(0, 1), Interval(1, 2), Interval(2, 3)],
                       [frozenset({0, 1}), frozenset({1, 2}), frozenset({2})])
    assert greedy_set_cover(ci).chosen == [0, 1]


def test_greedy_forced_and_trivial():
    atoms = [Interval(i, i + 1) for i in range(4)]
    single = CoverInstance(atoms, [frozenset(range(4))])
    assert greedy_set_cover(single).size == 1
    singletons = CoverInstance(atoms, [frozenset({i}) for i in range(4)])
    assert greedy_set_cover(singletons).size == 4


def test_greedy_infeasible():
    with pytest.raises(ValueError, match="infeasible"):
        greedy_set_cover(CoverInstance([Interval(0, 1), Interval(1, 2)], [frozenset({0})]))


def test_multi_interval_example_is_optimal():
    sol = multi_interval_set_cover(Q123)
    assert sol.chosen == [0, 1]
    assert brute_interval_cover(Q123.sets).optimum == 2
    assert brute_set_cover(atomic_decomposition(Q123)).optimum == 2


def test_redundant_set_not_needed():
    # c lies inside a ∪ b, so {a, b} is optimal and c is never required
    inst = MultiIntervalInstance([[(0, 1)], [(1, 2)], [(0.5, 1.5)]])
    sol = multi_interval_set_cover(inst)
    assert sol.size == 2
    assert brute_interval_cover(inst.sets).optimum == 2


def test_whole_union_in_one_set():
    inst = MultiIntervalInstance([[(0, 1)], [(0, 5)], [(3, 4)]])
    assert multi_interval_set_cover(inst).chosen == [1]


def test_reduction_example():
    inst = setcover_to_multiinterval(3, [{1, 2}, {2, 3}, {3}])
    assert inst.sets == [[Interval(0, 1), Interval(1, 2)], [Interval(1, 2), Interval(2, 3)],
                         [Interval(2, 3)]]
    assert brute_set_cover_elements(3, [{1, 2}, {2, 3}, {3}]).optimum == 2
    assert brute_interval_cover(inst.sets).optimum == 2


def test_reduction_single_element_and_empty_set():
    assert setcover_to_multiinterval(1, [{1}]).sets == [[Interval(0, 1)]]
    inst = setcover_to_multiinterval(2, [set(), {1, 2}])
    assert inst.sets[0] == []
    assert 0 not in brute_interval_cover(inst.sets).witness


def test_reduction_out_of_range():
    with pytest.raises(ValueError):
        setcover_to_multiinterval(2, [{3}])


@pytest.mark.parametrize("sets, want", [
    ([[(0, 1)], [(2, 3)]], 1),
    ([[(0, 2)], [(1, 3)], [(1.5, 2.5)]], 3),
    ([[(0, 1)]] * 4, 4),
])
def test_ply(sets, want):
    assert ply(MultiIntervalInstance(sets)) == want


def test_greedy_bound():
    assert greedy_bound(1) == 1.0
    assert greedy_bound(10) == pytest.approx(math.log(10) + 1)


# --- properties


@given(interval_instances())
def test_cover_is_sound(inst):
    ci, sol = solve_with_instance(inst)
    assert all(sol.atom_coverage)
    assert covers_union(inst, sol.chosen)
    for a in ci.atoms:
        m = (a.lo + a.hi) / 2
        assert any(iv.lo <= m <= iv.hi for i in sol.chosen for iv in inst.sets[i])


@given(interval_instances(max_sets=10))
def test_greedy_within_log_factor(inst):
    ci, sol = solve_with_instance(inst)
    opt = brute_set_cover(ci).optimum
    assert sol.size <= greedy_bound(len(ci.atoms)) * opt + 1e-9


@given(interval_instances())
def test_atoms_lossless(inst):
    ci = atomic_decomposition(inst)
    all_ivs = [iv for q in inst.sets for iv in q]
    assert union_measure(ci.atoms) == pytest.approx(union_measure(all_ivs), abs=1e-9)


@given(abstract_instances(max_n=8))
def test_reduction_preserves_optimum(data):
    n, sets = data
    inst = setcover_to_multiinterval(n, sets)
    if not any(inst.sets):
        return
    a = brute_set_cover_elements(n, sets).optimum
    b = brute_interval_cover(inst.sets).optimum
    assert a == b


@given(interval_instances())
def test_deterministic(inst):
    assert multi_interval_set_cover(inst).chosen == multi_interval_set_cover(inst).chosen
