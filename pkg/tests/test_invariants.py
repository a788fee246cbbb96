import pytest
from hypothesis import given, settings, strategies as st

from symq.algebra import double_cover, dihedral_quandle
from symq.diagram import Diagram, Stratum, flip_normal, load_diagram, parse_pd, pd_to_diagram
from symq.invariants import (
    coloring_hom_crosscheck,
    count_colorings,
    enumerate_colorings,
    is_coloring,
    knot_group_pipeline,
)
from symq.targets import builtin_target, builtin_targets

import oracles
from test_diagram import FIGURE_EIGHT, HOPF, TREFOIL, diagrams

R3 = builtin_target("R3-id")


def diagram(text):
    return pd_to_diagram(parse_pd(text))


def brute_count(d, t):
    return len(oracles.brute_colorings(d, [list(r) for r in t.quandle.op], list(t.rho)))


def test_trefoil_and_figure_eight_over_r3():
    assert count_colorings(diagram(TREFOIL), R3) == 9
    assert count_colorings(diagram(FIGURE_EIGHT), R3) == 3


@pytest.mark.parametrize("name", list(builtin_targets(7)))
def test_unknot_counts_target_size(name):
    t = builtin_target(name)
    assert count_colorings(diagram("Loop[1]"), t) == t.quandle.n


@pytest.mark.parametrize("name", list(builtin_targets(5)))
@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT, HOPF])
def test_counts_match_brute_force(name, text):
    d, t = diagram(text), builtin_target(name)
    assert count_colorings(d, t) == brute_count(d, t)


def test_enumeration_is_sorted_and_valid():
    d = diagram(TREFOIL)
    found = enumerate_colorings(d, R3)
    assert len(found) == 9 and not found.truncated
    assert list(found) == sorted(found)
    assert all(is_coloring(d, R3, c) for c in found)
    assert {(v,) * 6 for v in range(3)} <= set(found)
    assert set(found) == set(oracles.brute_colorings(d, [list(r) for r in R3.quandle.op], [0, 1, 2]))


def test_enumeration_limit():
    found = enumerate_colorings(diagram(TREFOIL), R3, limit=4)
    assert len(found) == 4 and found.truncated
    assert list(found) == sorted(enumerate_colorings(diagram(TREFOIL), R3))[:4]


def test_one_element_target():
    t = builtin_target("triv-1")
    for text in (TREFOIL, FIGURE_EIGHT, HOPF):
        assert len(enumerate_colorings(diagram(text), t)) == 1


def test_is_coloring_rejects():
    d = diagram(TREFOIL)
    assert not is_coloring(d, R3, (0, 1, 0, 0, 0, 0))
    assert not is_coloring(d, R3, (0,) * 5)
    assert not is_coloring(d, R3, (0, 0, 0, 0, 0, 7))


def test_crosscheck_examples():
    assert coloring_hom_crosscheck(diagram(TREFOIL), R3)
    assert coloring_hom_crosscheck(diagram(FIGURE_EIGHT), double_cover(dihedral_quandle(3)))


@settings(max_examples=80, deadline=None)
@given(diagrams(max_m=5, max_strata=4))
def test_crosscheck_random(d):
    for t in builtin_targets(4).values():
        assert coloring_hom_crosscheck(d, t)


@settings(max_examples=80, deadline=None)
@given(diagrams(max_m=5, max_strata=4), st.sampled_from(list(builtin_targets(6))))
def test_count_matches_brute_force_random(d, name):
    t = builtin_target(name)
    assert count_colorings(d, t) == brute_count(d, t)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_m=5, max_strata=4), st.data())
def test_flip_invariance_random(d, data):
    k = data.draw(st.integers(0, d.m - 1))
    for t in builtin_targets(6).values():
        assert count_colorings(flip_normal(d, k), t) == count_colorings(d, t)


@pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
def test_kei_identity_counts_at_least_constants(text):
    for name, t in builtin_targets(7).items():
        if name.startswith("R") and name.endswith("-id"):
            assert count_colorings(diagram(text), t) >= t.quandle.n


def test_overflow_guard():
    # 64 free semi-sheets over a 2-element target: 2**64 colorings
    d = Diagram(64)
    with pytest.raises(OverflowError):
        count_colorings(d, builtin_target("triv-2"))


def test_knot_group_pipeline():
    assert knot_group_pipeline(diagram(TREFOIL))[1] == [0]
    assert knot_group_pipeline(diagram("Loop[1]"))[1] == [0]
    assert knot_group_pipeline(diagram(HOPF))[1] == [0, 0]
    d = load_diagram('{"dimension": 2, "m": 1, "strata": [{"upper": [0, 0], "upper_coherent": false, '
                     '"over": 0, "lower": [0, 0], "lower_coherent": true}]}')
    assert knot_group_pipeline(d)[1] == [2]


def test_two_trefoil_diagrams_agree():
    mirror = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"
    for t in builtin_targets(6).values():
        assert count_colorings(diagram(TREFOIL), t) == count_colorings(diagram(mirror), t)
