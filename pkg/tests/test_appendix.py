import pytest
import sympy as sp

from racg_anosov.core import DomainError, RunContext
from racg_anosov.projgeom import MARGIN_DECAY, appendix_certify, certify_a1, certify_a2, fixed_subspace
from racg_anosov.racg import builtin_system
from racg_anosov.vinberg import build_rep, geometric_rep, random_fully_nondegenerate


def test_a1_with_the_default_representation(fig_a1_rep):
    report = certify_a1(k=1, depth=2, rep=fig_a1_rep)
    assert report.certified
    assert report.word == "bdeac"
    assert report.gamma == "bdeac"
    assert str(report.outer) == "W(b)"
    assert len(report.witnesses) == 2
    assert report.probe.relation == MARGIN_DECAY
    assert [r.min_margin for r in report.probe.records] == [0, 0, 0]
    doc = report.to_dict()
    assert doc["certified"] is True
    assert all(i["holds"] for i in doc["incidences"])
    assert len(report.rows()) == 3


def test_a1_for_longer_words(fig_a1_rep):
    report = certify_a1(k=3, depth=1, rep=fig_a1_rep)
    assert report.certified
    assert report.word == "bdbdbdeacacac"


def test_a1_records_the_seed_of_the_default_representation():
    report = appendix_certify("A1", depth=0)
    assert report.certified
    assert RunContext.get_seeds() == {"cartan": 1}


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_a2_in_several_representations(seed):
    rep = build_rep(random_fully_nondegenerate(builtin_system("fig-a2"), seed))
    report = certify_a2(depth=1, rep=rep)
    assert report.certified
    assert report.gamma == report.word
    assert len(report.witnesses) == 2


def test_a1_needs_a_nonsingular_cartan_matrix(fig_a1):
    with pytest.raises(DomainError):
        certify_a1(rep=geometric_rep(fig_a1), depth=0)


def test_wrong_group_or_case(fig_a2_rep):
    with pytest.raises(DomainError):
        certify_a1(rep=fig_a2_rep, depth=0)
    with pytest.raises(DomainError):
        appendix_certify("a3")
    with pytest.raises(DomainError):
        certify_a1(k=0)


def test_fixed_subspace(fig_a1_rep, fig_a1):
    a, b, c = (fig_a1.index(x) for x in "abc")
    basis = fixed_subspace(fig_a1_rep, [(a,), (c,)])
    # two independent reflections fix a codimension two subspace
    assert len(basis) == fig_a1.n - 2
    for v in basis:
        for g in ((a,), (c,)):
            assert list(fig_a1_rep.evaluate(g) * sp.Matrix(v)) == list(v)
    assert len(fixed_subspace(fig_a1_rep, [(b,)])) == fig_a1.n - 1
