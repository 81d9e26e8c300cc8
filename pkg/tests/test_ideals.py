import pytest

from casimir_spectrum import (
    build_root_system,
    enumerate_ideals,
    ideal_weight_sum,
    is_b_normal,
    root_poset,
    verify_weight_sum_injectivity,
)
from casimir_spectrum.root_system import wscale

from oracles import RANK3_TYPES, upper_set_size_counts

RANK4_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]


def test_root_poset_a1_a2():
    a1 = build_root_system("A1")
    p1 = root_poset(a1)
    assert p1.size == 1 and p1.cover_pairs() == []
    a2 = build_root_system("A2")
    p2 = root_poset(a2)
    theta = a2.positive_root_coords.index((1, 1))
    assert sorted(p2.cover_pairs()) == sorted(
        [(a2.positive_root_coords.index((1, 0)), theta),
         (a2.positive_root_coords.index((0, 1)), theta)]
    )


def test_root_poset_b2_structure():
    b2 = build_root_system("B2")
    p = root_poset(b2)
    idx = {rc: t for t, rc in enumerate(b2.positive_root_coords)}
    pairs = set(p.cover_pairs())
    assert (idx[(1, 0)], idx[(1, 1)]) in pairs
    assert (idx[(0, 1)], idx[(1, 1)]) in pairs
    assert (idx[(1, 1)], idx[(1, 2)]) in pairs
    assert len(pairs) == 3


@pytest.mark.parametrize("name", RANK3_TYPES)
def test_covers_generate_the_order(name):
    # reachability through upward covers matches the coordinatewise order
    rs = build_root_system(name)
    p = root_poset(rs)
    reach = [set() for _ in range(rs.r)]
    for a in range(rs.r - 1, -1, -1):
        for b in p.covers_up[a]:
            reach[a].add(b)
            reach[a] |= reach[b]
    for a in range(rs.r):
        for b in range(rs.r):
            assert p.le(a, b) == (a == b or b in reach[a])


def test_enumerate_small_examples():
    a1 = build_root_system("A1")
    assert enumerate_ideals(a1) == [frozenset(), frozenset({0})]
    a2 = build_root_system("A2")
    idx = {rc: t for t, rc in enumerate(a2.positive_root_coords)}
    theta, s1, s2 = idx[(1, 1)], idx[(1, 0)], idx[(0, 1)]
    assert set(enumerate_ideals(a2)) == {
        frozenset(),
        frozenset({theta}),
        frozenset({theta, s1}),
        frozenset({theta, s2}),
        frozenset({theta, s1, s2}),
    }


@pytest.mark.parametrize("name", RANK3_TYPES + ["D4", "F4"])
def test_counts_match_independent_counter(name):
    rs = build_root_system(name)
    expected = upper_set_size_counts(rs)
    ideals = enumerate_ideals(rs)
    assert len(ideals) == sum(expected)
    for k, want in enumerate(expected):
        assert len(enumerate_ideals(rs, k)) == want


def test_known_totals():
    for name, total in [("B2", 6), ("G2", 8), ("A3", 14), ("D4", 50), ("F4", 105)]:
        assert len(enumerate_ideals(build_root_system(name))) == total


@pytest.mark.parametrize("name", ["B3", "G2", "D4"])
def test_upper_closure(name):
    rs = build_root_system(name)
    poset = root_poset(rs)
    for ideal in enumerate_ideals(rs):
        for t in ideal:
            assert all(u in ideal for u in poset.covers_up[t])


def test_enumeration_order_deterministic():
    rs = build_root_system("B3")
    ideals = enumerate_ideals(rs)
    key = lambda ideal: tuple(1 if t in ideal else 0 for t in range(rs.r))
    assert ideals == sorted(ideals, key=key)


def test_size_filter_bounds():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        enumerate_ideals(rs, 4)
    with pytest.raises(ValueError):
        enumerate_ideals(rs, -1)


def test_ideal_weight_sum():
    a2 = build_root_system("A2")
    assert ideal_weight_sum(a2, frozenset()) == (0, 0)
    idx = {rc: t for t, rc in enumerate(a2.positive_root_coords)}
    assert ideal_weight_sum(a2, frozenset({idx[(1, 1)], idx[(1, 0)]})) == (3, 0)
    for name in RANK3_TYPES + ["D4", "F4"]:
        rs = build_root_system(name)
        assert ideal_weight_sum(rs, frozenset(range(rs.r))) == wscale(2, rs.rho)


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_weight_sum_injectivity_rank_le_4(name):
    assert verify_weight_sum_injectivity(build_root_system(name))


def test_b_normal_ideals_and_counterexamples():
    for name in ["A1", "A2", "B2", "B3"]:
        rs = build_root_system(name)
        for ideal in enumerate_ideals(rs):
            assert is_b_normal(rs, [("x", t) for t in ideal])
    a2 = build_root_system("A2")
    theta = a2.positive_root_coords.index((1, 1))
    s1 = a2.positive_root_coords.index((1, 0))
    # lowest root space alone is never Borel-stable
    assert not is_b_normal(build_root_system("A1"), [("y", 0)])
    assert not is_b_normal(a2, [("y", theta)])
    # a non-upper set of positive roots
    assert not is_b_normal(a2, [("x", s1)])
    # the Cartan alone is not stable under the raising operators
    assert not is_b_normal(a2, [("h", 0), ("h", 1)])
    # all of g is an ideal of itself
    full = [("x", t) for t in range(a2.r)] + [("y", t) for t in range(a2.r)] + [
        ("h", j) for j in range(a2.l)
    ]
    assert is_b_normal(a2, full)
    # all positive roots plus any Cartan subset
    assert is_b_normal(a2, [("x", t) for t in range(a2.r)] + [("h", 0)])
    with pytest.raises(ValueError):
        is_b_normal(a2, [("q", 0)])
    with pytest.raises(ValueError):
        is_b_normal(a2, [("x", 99)])
