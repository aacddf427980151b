import numpy as np
import pytest

from racg_anosov.core import DomainError
from racg_anosov.racg import enumerate_ball, normalize, parse_word, random_geodesic
from racg_anosov.walls import (OVER_CAP, bpp_constant, decomposition_bound, disjoint_decomposition, low_crossing_bound,
                               make_wall, minimal_wall_low_crossings, walls_cross, walls_of)
from oracles import brute_bpp


def nf(sys, text):
    return normalize(sys, parse_word(sys, text))


@pytest.mark.parametrize("word,expected", [
    ("", 0),
    ("ab", 1),
    ("bdbdacac", 4),
    ("bdbdeacac", 0),
    ("bdeac", 0),
])
def test_bpp_constant(fig_a1, word, expected):
    gamma = nf(fig_a1, word)
    assert bpp_constant(fig_a1, gamma) == expected
    _, poset = walls_of(fig_a1, gamma)
    assert brute_bpp(poset) == expected


@pytest.mark.parametrize("word", ["abcde", "acbd", "adbc", "abab", "aecbd"])
def test_bpp_constant_matches_labelling_search(pentagon, word):
    gamma = nf(pentagon, word)
    _, poset = walls_of(pentagon, gamma)
    assert bpp_constant(pentagon, gamma) == brute_bpp(poset)


def test_bpp_constant_over_cap(fig_a1):
    assert bpp_constant(fig_a1, nf(fig_a1, "bdbdacac"), cap=3) == OVER_CAP


def test_bounds():
    assert low_crossing_bound(0) == 1
    assert low_crossing_bound(1) == 12
    assert decomposition_bound(0) == 0
    assert decomposition_bound(1) == 13
    assert decomposition_bound(2) == 5 * 16 * 2 + 2


def test_minimal_wall(fig_a1):
    w = minimal_wall_low_crossings(fig_a1, nf(fig_a1, "bdbdacac"), 4)
    assert w in {make_wall(fig_a1, (), fig_a1.index("a")), make_wall(fig_a1, (), fig_a1.index("b"))}
    with pytest.raises(DomainError):
        minimal_wall_low_crossings(fig_a1, nf(fig_a1, ""), 0)


def test_chain_decomposition(fig_a1):
    gamma = nf(fig_a1, "bdbdeacac")
    d = disjoint_decomposition(fig_a1, gamma, 0)
    assert d.bound == 0
    assert len(d.chain) == gamma.length
    assert all(len(s) == 0 for s in d.spacers)
    assert d.itinerary().traversed() == gamma
    window = d.window(0, len(d.chain) - 1)
    assert window.head.length == 0 and window.tail.length == 0
    assert window.core == gamma


def test_product_decomposition(fig_a1):
    gamma = nf(fig_a1, "bdbdacac")
    d = disjoint_decomposition(fig_a1, gamma, 4)
    assert d.bound == decomposition_bound(4)
    assert len(d.chain) + sum(len(s) for s in d.spacers) == gamma.length
    for i in range(len(d.chain)):
        for j in range(i + 1, len(d.chain)):
            assert not walls_cross(fig_a1, d.chain[i], d.chain[j])
    for wall, spacer in zip(d.chain, d.spacers):
        assert all(walls_cross(fig_a1, wall, v) for v in spacer.walls)
    assert d.itinerary().traversed() == gamma
    doc = d.to_dict()
    assert doc["gamma"] == str(gamma) and doc["R"] == d.bound


def test_decomposition_windows(fig_a1):
    d = disjoint_decomposition(fig_a1, nf(fig_a1, "bdbdacac"), 4)
    for i in range(len(d.chain)):
        for j in range(i + 1, len(d.chain)):
            window = d.window(i, j)
            assert max(window.head.length, window.tail.length) <= d.bound
    with pytest.raises(DomainError):
        d.window(1, 1)


def test_decomposition_rejects_small_constant(fig_a1):
    with pytest.raises(DomainError):
        disjoint_decomposition(fig_a1, nf(fig_a1, "bdbdacac"), 3)
    with pytest.raises(DomainError):
        disjoint_decomposition(fig_a1, nf(fig_a1, "ab"), -1)


@pytest.mark.slow
def test_low_crossing_wall_over_the_radius_ten_ball(fig_a1):
    for gamma in enumerate_ball(fig_a1, 10)[1:]:
        D = bpp_constant(fig_a1, gamma)
        walls, poset = walls_of(fig_a1, gamma)
        i = walls.index(minimal_wall_low_crossings(fig_a1, gamma, D))
        assert i in poset.minimal()
        assert len(poset.crossings(i)) <= low_crossing_bound(D), str(gamma)


@pytest.mark.slow
def test_decompositions_of_random_geodesics(fig_a1):
    rng = np.random.default_rng(2024)
    for _ in range(500):
        gamma = normalize(fig_a1, random_geodesic(fig_a1, int(rng.integers(1, 31)), rng))
        D = bpp_constant(fig_a1, gamma)
        d = disjoint_decomposition(fig_a1, gamma, D)
        R = decomposition_bound(D)
        assert d.bound == R
        assert d.itinerary().traversed() == gamma
        for k, (wall, spacer) in enumerate(zip(d.chain, d.spacers)):
            assert len(spacer.walls) <= R
            assert all(walls_cross(fig_a1, wall, v) for v in spacer.walls)
            assert len(d.poset.crossings(d.chain_positions[k])) <= R
        for i in range(len(d.chain)):
            for j in range(i + 1, len(d.chain)):
                assert not walls_cross(fig_a1, d.chain[i], d.chain[j])
