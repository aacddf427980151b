import math

import numpy as np
import pytest
import sympy as sp

from racg_anosov.anosov import (additivity_sweep, check_additivity, check_transversality, compound, float_product, second_compound,
                                singular_report, transversality_sweep)
from racg_anosov.core import DomainError, RunContext


def test_reflection_gap(hyperbolic_dihedral):
    # ρ(s)ᵀρ(s) has eigenvalues 3 ± 2√2
    report = singular_report(hyperbolic_dihedral.generator(0))
    assert report.mu12 == pytest.approx(2 * math.log(1 + math.sqrt(2)))
    assert report.mu == pytest.approx([math.log(1 + math.sqrt(2)), -math.log(1 + math.sqrt(2))])
    assert report.defined
    assert report.to_dict()["subspaces"] == "defined"


def test_product_gap(hyperbolic_dihedral):
    report = singular_report(hyperbolic_dihedral.evaluate((0, 1)))
    # σ₁² + σ₂² = 39 and σ₁σ₂ = 1
    assert report.mu12 == pytest.approx(math.log((39 + math.sqrt(1517)) / 2))
    assert report.mu12 == pytest.approx(3.663, abs=1e-3)
    assert report.mu1d == pytest.approx(report.mu12)


def test_undefined_subspaces():
    report = singular_report(np.eye(3))
    assert not report.defined
    assert report.mu12 == 0.0
    assert report.to_dict()["subspaces"] == "UNDEFINED"
    assert singular_report(np.eye(2), log_scale=2.0).mu.tolist() == [2.0, 2.0]


def test_singular_matrix_is_rejected():
    with pytest.raises(DomainError):
        singular_report([[1, 1], [1, 1]])


def test_second_compound_is_exact():
    C = second_compound(sp.Matrix([[1, 2], [3, 4]]))
    assert C.tolist() == [[-2]]
    assert second_compound(sp.eye(3)).tolist() == np.eye(3, dtype=int).tolist()
    half = second_compound(sp.Matrix([[sp.Rational(1, 2), 0], [0, 3]]))
    assert half[0, 0] == sp.Rational(3, 2)


def test_additivity(hyperbolic_dihedral):
    s, t = hyperbolic_dihedral.generator(0), hyperbolic_dihedral.generator(1)
    report = check_additivity(hyperbolic_dihedral.evaluate((0, 1)), s, t)
    assert not report["violation"]
    assert check_additivity(np.diag([math.e, 1.0]), np.eye(2), np.eye(2))["deviation"] == pytest.approx(0.0)


def test_transversality_equality_case():
    report = check_transversality(np.diag([4.0, 1.0]), np.diag([3.0, 1.0]))
    assert report["sin_theta"] == pytest.approx(1.0)
    assert report["lhs"] == pytest.approx(math.log(12))
    assert report["rhs"] == pytest.approx(math.log(12))
    assert report["holds"] and not report["vacuous"]


def test_transversality_vacuous_case():
    report = check_transversality(np.diag([4.0, 1.0]), np.diag([0.25, 1.0]))
    assert report["vacuous"]
    assert report["sin_theta"] == 0.0
    assert report["rhs"] == -math.inf
    assert report["holds"]


def test_transversality_needs_gaps():
    with pytest.raises(DomainError):
        check_transversality(np.eye(2), np.diag([2.0, 1.0]))


def test_float_product(hyperbolic_dihedral):
    gens = hyperbolic_dihedral.float_generators()
    assert float_product(gens, (0, 1)).tolist() == [[-1.0, -3.0], [2.0, 5.0]]
    assert float_product(gens, ()).tolist() == np.eye(2).tolist()


def test_sweeps_record_their_seeds(pentagon_rep):
    additivity = additivity_sweep(pentagon_rep, seed=5, samples=30, max_length=4)
    assert additivity["violations"] == 0
    assert additivity["samples"] == 30
    transversality = transversality_sweep(pentagon_rep, seed=6, samples=30, max_length=4)
    assert transversality["violations"] == 0
    assert transversality["checked"] <= 30
    assert RunContext.get_seeds() == {"additivity": 5, "transversality": 6}


def test_sweeps_are_reproducible(pentagon_rep):
    assert additivity_sweep(pentagon_rep, 3, 20, 4) == additivity_sweep(pentagon_rep, 3, 20, 4)


@pytest.mark.slow
def test_sweeps_at_full_size(pentagon_rep):
    additivity = additivity_sweep(pentagon_rep, seed=10, samples=10_000)
    assert additivity["samples"] == 10_000
    assert additivity["violations"] == 0
    transversality = transversality_sweep(pentagon_rep, seed=11, samples=10_000)
    assert transversality["checked"] > 0
    assert transversality["violations"] == 0


def test_compound_matrices(pentagon_rep):
    g = pentagon_rep.float_generators()[0] @ pentagon_rep.float_generators()[2]
    h = pentagon_rep.float_generators()[1]
    np.testing.assert_allclose(compound(g, 1), g)
    np.testing.assert_allclose(compound(g, 2), second_compound(g), atol=1e-9)
    assert compound(g, 0).tolist() == [[1.0]]
    assert compound(g, 5)[0, 0] == pytest.approx(np.linalg.det(g))
    # Cauchy-Binet
    np.testing.assert_allclose(compound(g @ h, 3), compound(g, 3) @ compound(h, 3), atol=1e-8)
    # top singular value of the k-th compound is the product of the k largest singular values
    s = np.linalg.svd(g, compute_uv=False)
    assert np.linalg.norm(compound(g, 3), 2) == pytest.approx(s[0] * s[1] * s[2])
