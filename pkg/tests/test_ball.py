import numpy as np
import pytest

from racg_anosov.core import DomainError, LimitExceeded
from racg_anosov.racg import builtin_system, enumerate_ball, normalize, random_geodesic
from oracles import matrix_ball_size


def test_radius_zero(fig_a1):
    ball = enumerate_ball(fig_a1, 0)
    assert len(ball) == 1
    assert ball[0].length == 0


def test_infinite_dihedral(dihedral):
    ball = enumerate_ball(dihedral, 3)
    assert [str(x) for x in ball] == ["ε", "s", "t", "st", "ts", "sts", "tst"]


def test_finite_group_stops_growing(klein):
    assert len(enumerate_ball(klein, 2)) == 4
    assert len(enumerate_ball(klein, 5)) == 4


def test_ordering_and_uniqueness(fig_a1):
    ball = enumerate_ball(fig_a1, 4)
    keys = [(x.length, x.letters) for x in ball]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for x in ball:
        assert normalize(fig_a1, x.letters) == x


@pytest.mark.parametrize("name,radius", [("fig-a1", 5), ("pentagon", 5), ("free3", 6), ("fig-a2", 4), ("dihedral", 6)])
def test_size_matches_geometric_representation(name, radius):
    sys = builtin_system(name)
    assert len(enumerate_ball(sys, radius)) == matrix_ball_size(sys, radius)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["fig-a1", "pentagon", "free3", "dihedral"])
def test_size_matches_geometric_representation_at_radius_eight(name):
    sys = builtin_system(name)
    assert len(enumerate_ball(sys, 8)) == matrix_ball_size(sys, 8)


def test_free_product_growth(free3):
    # 1 + 3 + 3·2 + 3·4
    assert len(enumerate_ball(free3, 3)) == 22


def test_caps(fig_a1):
    with pytest.raises(LimitExceeded):
        enumerate_ball(fig_a1, 13)
    with pytest.raises(LimitExceeded):
        enumerate_ball(fig_a1, 4, cap=3)
    with pytest.raises(DomainError):
        enumerate_ball(fig_a1, -1)


def test_random_geodesic_is_reduced(pentagon):
    rng = np.random.default_rng(5)
    for length in (0, 1, 7, 20):
        w = random_geodesic(pentagon, length, rng)
        assert len(w) == length
        assert normalize(pentagon, w).length == length


def test_random_geodesic_is_seeded(fig_a2):
    a = random_geodesic(fig_a2, 15, np.random.default_rng(11))
    b = random_geodesic(fig_a2, 15, np.random.default_rng(11))
    assert a == b


def test_random_geodesic_in_finite_group(klein):
    assert len(random_geodesic(klein, 5, np.random.default_rng(0))) == 2
