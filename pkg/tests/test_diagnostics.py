import math

import numpy as np
import pytest

from racg_anosov.anosov import (DEFINED, UNDEFINED, cone_distance, convergence_check, gap_trace, halfcone_subspace_check,
                                projective_angle, trace_from_matrices)
from racg_anosov.core import DomainError
from racg_anosov.racg import parse_word


def test_projective_angle():
    e1, e2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    assert projective_angle(e1, -e1) == 0.0
    assert projective_angle(e1, e2) == pytest.approx(math.pi / 2)
    assert projective_angle(e1, e1 + e2) == pytest.approx(math.pi / 4)


def test_cone_distance():
    quadrant = [(1, 0), (0, 1)]
    assert cone_distance(quadrant, np.array([1.0, 1.0])) == pytest.approx(0.0, abs=1e-12)
    # lines, not rays
    assert cone_distance(quadrant, np.array([-1.0, -2.0])) == pytest.approx(0.0, abs=1e-12)
    assert cone_distance(quadrant, np.array([1.0, -1.0])) == pytest.approx(math.sqrt(0.5))


def test_constant_subspaces_converge_immediately():
    trace = trace_from_matrices([np.diag([2.0 ** n, 1.0, 2.0 ** -n]) for n in range(6)])
    report = convergence_check(trace)
    assert report["unstable_steps"] == [0.0] * 4
    assert report["stable_steps"] == [0.0] * 4
    assert report["unstable_rate"] == math.inf
    assert report["certified"]


def test_hyperbolic_word_converges(hyperbolic_dihedral):
    report = convergence_check(gap_trace(hyperbolic_dihedral, (0, 1) * 10))
    assert report["certified"]
    assert report["final_unstable"] < 1e-6
    assert report["final_stable"] < 1e-6
    assert report["unstable_rate"] > 0


def test_unipotent_word_converges_slowly(unipotent_dihedral):
    report = convergence_check(gap_trace(unipotent_dihedral, (0, 1) * 32))
    assert not report["certified"]
    assert report["final_unstable"] > 1e-6


def test_convergence_needs_defined_subspaces():
    with pytest.raises(DomainError):
        convergence_check(trace_from_matrices([np.eye(2), np.diag([2.0, 1.0])]))
    with pytest.raises(DomainError):
        convergence_check(trace_from_matrices([np.eye(2), np.diag([2.0, 1.0]), np.eye(2)]))


def test_undefined_unstable_line(pentagon_rep, pentagon):
    report = halfcone_subspace_check(pentagon_rep, parse_word(pentagon, "ac"), threshold=1e3)
    assert report["status"] == UNDEFINED
    assert "unstable" not in report


def test_subspace_report(pentagon_rep, pentagon):
    report = halfcone_subspace_check(pentagon_rep, parse_word(pentagon, "acac"), k=1, depth=1)
    assert report["status"] == DEFINED
    assert report["word"] == "acac"
    assert report["wall"] == "W(a)"
    assert report["distance_halfcone"] >= 0.0
    assert report["localized"] == (report["distance_halfcone"] <= report["eps"])
    assert report["support"] == ["a", "c"]
    assert 0.0 <= report["eps0"] <= 1.0
    assert report["repelled"] == (report["distance_perp"] >= report["eps0"] - report["distance_vt"])


def test_subspace_check_wall_index(pentagon_rep, pentagon):
    with pytest.raises(DomainError):
        halfcone_subspace_check(pentagon_rep, parse_word(pentagon, "ac"), k=3)
    with pytest.raises(DomainError):
        halfcone_subspace_check(pentagon_rep, (), k=1)
