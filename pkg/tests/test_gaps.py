import math

import numpy as np
import pytest

from racg_anosov.anosov import (CSV_HEADER, fit_gaps, fit_regularity, gap_scan, gap_trace, load_trace, trace_from_matrices,
                                trace_from_rows, uniform_regularity_check)
import racg_anosov.anosov.gaps as gaps_module
from racg_anosov.core import CertificationFailure, DomainError, RunContext
from racg_anosov.racg import random_geodesic
from racg_anosov.vinberg import build_rep, random_fully_nondegenerate

LOG_LAMBDA = math.log(2 + math.sqrt(3))


def test_header():
    assert ",".join(CSV_HEADER) == "n,length,mu1,mu2,gap12"


def test_trace_of_a_short_word(hyperbolic_dihedral):
    trace = gap_trace(hyperbolic_dihedral, (0, 1))
    assert len(trace) == 3
    assert trace.rows()[0] == [0, 0, 0.0, 0.0, 0.0]
    assert trace.gaps[1] == pytest.approx(2 * math.log(1 + math.sqrt(2)))
    assert trace.gaps[2] == pytest.approx(math.log((39 + math.sqrt(1517)) / 2))
    assert trace.unstable[0] is None
    assert all(v is not None for v in trace.unstable[1:])
    doc = trace.to_dict()
    assert doc["word"] == "st"
    assert doc["header"] == list(CSV_HEADER)
    assert "pairwise" not in doc


def test_non_geodesic_words_are_rejected(hyperbolic_dihedral):
    with pytest.raises(DomainError):
        gap_trace(hyperbolic_dihedral, (0, 0))


def test_hyperbolic_slope(hyperbolic_dihedral):
    # ρ(st) has eigenvalues 2 ± √3, so each letter adds log(2 + √3) on average
    trace = gap_trace(hyperbolic_dihedral, (0, 1) * 100)
    fit = fit_gaps([trace])
    assert fit.A == pytest.approx(LOG_LAMBDA, rel=0.05)
    assert fit.B <= fit.b_cap
    assert fit.min_slack >= -1e-9
    assert trace.gaps[-1] / 200 == pytest.approx(LOG_LAMBDA, rel=0.05)


def test_unipotent_slope_vanishes(unipotent_dihedral):
    # (st)^k = I + kN with N² = 0, so gaps only grow like 2 log k
    trace = gap_trace(unipotent_dihedral, (0, 1) * 1024)
    fit = fit_gaps([trace])
    assert fit.A < 0.01
    assert trace.gaps[-1] == pytest.approx(2 * math.log(4096), abs=0.1)


def test_fit_without_positive_lengths():
    fit = fit_gaps([trace_from_rows([[0, 0, 0.0, 0.0, 0.0]])])
    assert fit.A is None
    assert fit.B == 0.0


def test_linear_trace_fits_without_offset():
    fit = fit_gaps([trace_from_rows([[n, n, n, -n, 2 * n] for n in range(11)])])
    assert fit.A == pytest.approx(2.0)
    assert fit.B == 0.0
    assert fit.min_slack == pytest.approx(0.0)


def test_offset_absorbs_negative_gaps():
    fit = fit_gaps([trace_from_rows([[0, 0, 0, 0.5, -0.5], [1, 1, 1.5, 0, 1.5], [2, 2, 3.5, 0, 3.5]])])
    assert fit.A == pytest.approx(2.0)
    assert fit.B == pytest.approx(0.5)
    with pytest.raises(DomainError):
        fit_gaps([trace_from_rows([[0, 0, 0, 2, -2], [1, 1, 1, 0, 1]])], b_cap=1.0)


def test_fit_rejects_bad_input(hyperbolic_dihedral):
    with pytest.raises(DomainError):
        fit_gaps([])
    with pytest.raises(DomainError):
        fit_gaps([gap_trace(hyperbolic_dihedral, (0,))], b_cap=-1.0)


def test_trace_from_matrices():
    trace = trace_from_matrices([np.diag([2.0 ** n, 1.0]) for n in range(4)])
    assert trace.gaps == pytest.approx([n * math.log(2) for n in range(4)])
    assert trace.unstable[0] is None
    assert trace.unstable[1].tolist() == [1.0, 0.0]


def test_trace_from_rows():
    trace = trace_from_rows([["0", "0", "0", "0", "0"], ["1", "1", "2.5", "0.5", "2"]])
    assert trace.gaps == [0.0, 2.0]
    with pytest.raises(DomainError):
        trace_from_rows([[0, 1, 0, 0, 0]])


def test_load_trace(tmp_path):
    path = tmp_path / "trace.csv"
    path.write_text("# produced by a gap trace\nn,length,mu1,mu2,gap12\n0,0,0,0,0\n1,1,1.5,-1.5,3\n\n2,2,3,-3,6\n")
    trace = load_trace(str(path))
    assert trace.lengths == [0, 1, 2]
    assert trace.gaps == [0.0, 3.0, 6.0]
    fit = fit_gaps([trace])
    assert fit.A == pytest.approx(3.0)
    assert fit.B == 0.0


def test_load_trace_errors(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("n,length,mu1\n0,0,0\n")
    with pytest.raises(DomainError):
        load_trace(str(path))
    with pytest.raises(DomainError):
        load_trace(str(tmp_path / "missing.csv"))


def test_pairwise_data(hyperbolic_dihedral):
    trace = gap_trace(hyperbolic_dihedral, (0, 1) * 3, pairwise=True)
    L = len(trace)
    assert trace.pairwise.shape == (L, L)
    assert trace.pairwise_deviation < 1e-9
    # windows starting at the identity are the prefixes
    assert trace.pairwise[0] == pytest.approx(trace.gaps)
    # a window and its reverse are inverse to each other
    assert trace.pairwise == pytest.approx(trace.pairwise.T)
    assert len(trace.samples()) == L * L
    assert trace.to_dict()["pairwise_deviation"] == trace.pairwise_deviation


def test_pairwise_windows_match_the_exact_prefixes(pentagon_rep):
    word = random_geodesic(pentagon_rep.system, 30, np.random.default_rng(7))
    trace = gap_trace(pentagon_rep, word, pairwise=True)
    assert trace.pairwise_deviation <= 1e-9 * max(1.0, trace.pairwise.max())
    # row 0 holds the prefixes, which gap_trace also evaluates exactly
    assert trace.pairwise[0] == pytest.approx(trace.gaps, rel=1e-7, abs=1e-9)
    assert trace.pairwise_mu1d[0] == pytest.approx(np.subtract(trace.mu1, trace.mud), rel=1e-7, abs=1e-9)
    assert (trace.pairwise >= 0).all()


def test_pairwise_disagreement_raises(hyperbolic_dihedral, monkeypatch):
    monkeypatch.setattr(gaps_module, "PAIRWISE_TOL", -1.0)
    with pytest.raises(CertificationFailure) as info:
        gap_trace(hyperbolic_dihedral, (0, 1), pairwise=True)
    assert "pairwise_deviation" in info.value.report


def test_regularity_in_dimension_two(hyperbolic_dihedral):
    # with determinant ±1, μ₁,d = μ₁,₂
    trace = gap_trace(hyperbolic_dihedral, (0, 1) * 3, pairwise=True)
    assert trace.pairwise_mu1d == pytest.approx(trace.pairwise)
    fit = fit_regularity([trace])
    assert fit.A == pytest.approx(1.0, rel=1e-9)
    assert fit.B == pytest.approx(0.0, abs=1e-9)
    assert fit.kind == "regularity"
    report = uniform_regularity_check([trace], 1.0, 0.0)
    assert report["holds"]
    assert report["worst_slack"] == pytest.approx(0.0, abs=1e-9)


def test_regularity_needs_pairwise_data(hyperbolic_dihedral):
    with pytest.raises(DomainError):
        fit_regularity([gap_trace(hyperbolic_dihedral, (0, 1))])
    with pytest.raises(DomainError):
        uniform_regularity_check([], 1.0, 0.0)


def test_gap_scan(pentagon_rep):
    scan = gap_scan(pentagon_rep, seed=11, samples=6, max_length=5)
    assert len(scan.traces) == 6
    assert all(1 <= len(t) - 1 <= 5 for t in scan.traces)
    assert scan.fit.A is not None
    assert RunContext.get_seeds() == {"gap_scan": 11}
    doc = scan.to_dict()
    assert doc["seed"] == 11
    assert doc["regularity"] is None
    assert len(scan.rows()) == 6
    assert [t.word for t in gap_scan(pentagon_rep, 11, 6, 5).traces] == doc["words"]


def test_gap_scan_with_pairwise_data(pentagon_rep):
    scan = gap_scan(pentagon_rep, seed=2, samples=3, max_length=4, pairwise=True)
    assert scan.regularity_fit is not None
    assert scan.regularity["holds"]


def test_gap_scan_rejects_empty_scans(pentagon_rep):
    with pytest.raises(DomainError):
        gap_scan(pentagon_rep, seed=0, samples=0)


@pytest.mark.slow
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_gap_scan_at_full_length(pentagon, seed):
    rep = build_rep(random_fully_nondegenerate(pentagon, seed))
    scan = gap_scan(rep, seed=seed, samples=200, max_length=40, pairwise=True)
    assert len(scan.traces) == 200
    assert max(len(t) - 1 for t in scan.traces) <= 40
    assert scan.fit.A > 0
    assert scan.fit.B == pytest.approx(0.0, abs=1e-9)
    # B = 0, so A is the smallest gap per letter over every window
    ratios = [mu / ell for t in scan.traces for ell, mu in t.samples() if ell > 0]
    assert scan.fit.A == pytest.approx(min(ratios))
    assert scan.regularity_fit.A > 0
    assert scan.regularity["holds"]
    assert uniform_regularity_check(scan.traces, scan.regularity_fit.A, scan.regularity_fit.B)["holds"]
