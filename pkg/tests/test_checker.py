from fractions import Fraction

import pytest

from conftest import atlas_graphs
from vizingdom.checker import check_pair, PairChecker
from vizingdom.classify import classify
from vizingdom.data import SurveyOptions, PairContext
from vizingdom.errors import IntegrityError, DomainError
from vizingdom.generators import generate, GraphFamily
from vizingdom.graph import Graph
from vizingdom.rules.base import BoundRule
from vizingdom.search import SearchBudget


def path(n):
    return generate(GraphFamily.PATH, n)


def cycle(n):
    return generate(GraphFamily.CYCLE, n)


def test_torus():
    report = check_pair(cycle(4), cycle(4))
    assert report.exact
    assert (report.gamma_g, report.gamma_h, report.gamma_product, report.pi_g) == (2, 2, 4, 2)
    assert report.row('suen_tarr').value == 3 and report.row('suen_tarr').satisfied
    assert report.row('power').value == Fraction(8, 3) and report.row('power').satisfied
    assert report.vizing_ratio == 1
    assert report.worst_bound_margin == 0
    assert report.g_id == 'Cl'


def test_k1_factor_collapses_bounds():
    h = generate(GraphFamily.COMPLETE_BIPARTITE, 2, 3)
    report = check_pair(generate(GraphFamily.COMPLETE, 1), h)
    assert report.gamma_product == report.gamma_h == 2
    assert report.vizing_ratio == 1
    for name in ('power', 'vizing', 'small_gamma', 'cograph'):
        row = report.row(name)
        assert row.applicable and row.value == 2, name


def test_claw_and_p6_free_route():
    report = check_pair(path(4), path(4))
    assert report.gamma_product == 4
    row = report.row('claw_p6')
    assert row.applicable and row.value == 4 and row.satisfied
    vizing = report.row('vizing')
    assert vizing.proven and 'claw_p6' in vizing.note


def test_vizing_is_report_only_without_route():
    # Path on 12 vertices with a pendant at vertex 1: a claw, an induced P_5 and γ = 4
    g = Graph.from_edges(13, [(i, i + 1) for i in range(11)] + [(1, 12)])
    profile = classify(g)
    assert not profile.claw_free and not profile.path_free[5]
    report = check_pair(g, generate(GraphFamily.COMPLETE, 1))
    assert report.gamma_g == 4
    assert not report.row('vizing').proven
    assert report.row('vizing').note == ''


def test_diameter_row():
    report = check_pair(path(7), cycle(4))
    row = report.row('diameter')
    assert row.applicable and row.value == 6 and row.note == 'd=6'


def test_fair_row_uses_exact_fair_domination():
    report = check_pair(path(4), path(3))
    assert (report.gamma_f_g, report.gamma_f_h) == (2, 1)
    row = report.row('fair')
    assert row.applicable and row.value == 2


def test_fair_row_skipped_for_large_factors():
    report = check_pair(path(7), path(2), SurveyOptions(fair_max_vertices=5))
    assert report.gamma_f_g is None
    assert not report.row('fair').applicable


def test_informational_rows():
    report = check_pair(path(4), path(4), SurveyOptions(critical_subgraph=True))
    two_thirds = report.row('claw_free_two_thirds')
    assert two_thirds.applicable and not two_thirds.proven
    critical = report.row('critical_subgraph')
    assert critical is not None and critical.satisfied and not critical.proven
    assert check_pair(path(4), path(4)).row('critical_subgraph') is None


def test_budget_exhaustion_marks_pair_inexact():
    report = check_pair(cycle(4), cycle(4), SurveyOptions(budget=SearchBudget(node_limit=1)))
    assert not report.exact
    assert report.gamma_product is None
    assert report.to_json()['exact'] is False


def test_null_graph_rejected():
    with pytest.raises(DomainError):
        check_pair(Graph(n=0, rows=()), path(2))


class ImpossibleRule(BoundRule):
    def bound_rows(self, ctx: PairContext) -> None:
        ctx.add_row('impossible', Fraction(1000), applicable=True)


def test_violated_proven_bound_raises_with_witness():
    checker = PairChecker(SurveyOptions())
    checker.rules.add(ImpossibleRule())
    g = checker.analyze('A_', generate(GraphFamily.COMPLETE, 2))
    with pytest.raises(IntegrityError) as ex:
        checker.check(g, g)
    assert 'impossible' in str(ex.value)
    assert ex.value.witness['report']['gamma_product'] == 2
    assert ex.value.witness['product_gamma_set']


def test_report_json():
    out = check_pair(cycle(4), path(2)).to_json()
    assert out['vizing_ratio'] == '1'
    power = next(r for r in out['bounds'] if r['name'] == 'power')
    assert power['value'] == '4/3' and power['decimal'] == '1.3333'


def connected(min_n, max_n):
    return atlas_graphs(max_n, min_n=min_n)


@pytest.mark.slow
def test_suen_tarr_and_power_bounds_hold():
    checker = PairChecker(SurveyOptions(fair_max_vertices=0))
    facts = [checker.analyze(str(i), g) for i, g in enumerate(connected(3, 5))]
    for g in facts:
        for h in facts:
            report = checker.check(g, h)
            assert report.row('suen_tarr').satisfied
            assert report.row('power').satisfied
            assert report.vizing_ratio >= 1
            if g.pi == 1:
                assert report.gamma_product >= g.gamma * h.gamma


@pytest.mark.slow
def test_claw_and_p6_free_graphs_satisfy_vizing():
    checker = PairChecker(SurveyOptions(fair_max_vertices=0))
    facts = [checker.analyze(str(i), g) for i, g in enumerate(connected(1, 5))]
    for g in facts:
        if not (g.profile.claw_free and g.profile.path_free[6]):
            continue
        for h in facts:
            report = checker.check(g, h)
            assert report.row('claw_p6').applicable
            assert report.gamma_product >= g.gamma * h.gamma
