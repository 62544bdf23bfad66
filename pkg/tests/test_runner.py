import json
from fractions import Fraction

import pytest

from conftest import atlas_graphs, write_corpus
from vizingdom.config import load_survey_options
from vizingdom.errors import GraphSizeError
from vizingdom.generators import generate, GraphFamily
from vizingdom.graph import Graph
from vizingdom.runner import SurveyRunner
from vizingdom.writers.jsonl import JsonLinesWriter
from vizingdom.writers.tabular import CsvWriter


def run(writer=None, **overrides):
    options = load_survey_options(**overrides)
    return SurveyRunner(writer or JsonLinesWriter()).run(options)


def test_connected_graphs_up_to_four_vertices(connected4_corpus, tmp_path):
    out = tmp_path / 'reports.jsonl'
    summary = run(g_corpus=connected4_corpus, out=out)
    assert summary.pairs == 100
    assert summary.inexact == 0
    assert summary.min_vizing_ratio == 1
    assert summary.vizing_violations == []
    reports = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(reports) == 100
    assert reports[0]['g_id'] == reports[0]['h_id'] == '@'
    for name, counts in summary.rows.items():
        if name not in ('vizing', 'claw_free_two_thirds'):
            assert counts['satisfied'] == counts['applicable'], name
    assert summary.to_json()['min_vizing_ratio_decimal'] == '1.0000'


def test_diameter_table(connected4_corpus, tmp_path):
    summary = run(g_corpus=connected4_corpus, out=tmp_path / 'reports.jsonl')
    table = {row['diameter']: row for row in summary.diameter_table}
    assert sorted(table) == [0, 1, 2, 3]
    assert sum(row['pairs'] for row in table.values()) == 100
    assert [table[d]['pairs'] for d in range(4)] == [10, 30, 50, 10]
    # P_3, K_{1,3}, the paw and the diamond have d(G) = 2 > 3/2 γ(G)
    assert table[2]['long_diameter'] == 40
    assert table[3]['long_diameter'] == 0


def test_workers_do_not_change_output(connected4_corpus, tmp_path):
    single, pooled = tmp_path / 'single.jsonl', tmp_path / 'pooled.jsonl'
    run(g_corpus=connected4_corpus, out=single, workers=1)
    run(g_corpus=connected4_corpus, out=pooled, workers=8)
    assert single.read_bytes() == pooled.read_bytes()


def test_empty_corpus(tmp_path):
    corpus = tmp_path / 'empty.g6'
    corpus.write_text('')
    out = tmp_path / 'reports.jsonl'
    summary = run(g_corpus=corpus, out=out)
    assert summary.pairs == 0
    assert summary.min_vizing_ratio is None
    assert out.read_text() == ''


def test_disconnected_graph_skipped(tmp_path, caplog):
    corpus = write_corpus(tmp_path / 'corpus.g6', [Graph.from_edges(2, []), generate(GraphFamily.COMPLETE, 2)])
    with caplog.at_level('INFO'):
        summary = run(g_corpus=corpus, out=tmp_path / 'reports.jsonl')
    assert summary.skipped == [('A?', 'disconnected')]
    assert summary.pairs == 1
    assert 'Skipping A?' in caplog.text


def test_all_graphs_keeps_disconnected(tmp_path):
    corpus = write_corpus(tmp_path / 'corpus.g6', [Graph.from_edges(2, []), generate(GraphFamily.COMPLETE, 2)])
    summary = run(g_corpus=corpus, out=tmp_path / 'reports.jsonl', connected_only=False)
    assert summary.pairs == 4
    assert summary.min_vizing_ratio == 1


def test_require_filters_g_side(connected4_corpus, tmp_path):
    summary = run(g_corpus=connected4_corpus, out=tmp_path / 'reports.jsonl', require=['claw_free'])
    # K_{1,3} is the only connected graph on at most four vertices with a claw
    assert summary.pairs == 90
    assert [reason for _, reason in summary.skipped] == ['not claw_free']


def test_separate_h_corpus(connected4_corpus, tmp_path):
    h_corpus = write_corpus(tmp_path / 'h.g6', [generate(GraphFamily.PATH, 2), generate(GraphFamily.CYCLE, 5)])
    summary = run(g_corpus=connected4_corpus, h_corpus=h_corpus, out=tmp_path / 'reports.jsonl')
    assert summary.pairs == 20


def test_product_cap_is_a_precondition(connected4_corpus, tmp_path):
    with pytest.raises(GraphSizeError):
        run(g_corpus=connected4_corpus, out=tmp_path / 'reports.jsonl', product_cap=15)


def test_csv_report(tmp_path):
    corpus = write_corpus(tmp_path / 'corpus.g6', [generate(GraphFamily.CYCLE, 4)])
    out = tmp_path / 'reports.csv'
    run(CsvWriter(), g_corpus=corpus, out=out, format='csv')
    lines = out.read_text().splitlines()
    assert lines[0] == ','.join(CsvWriter.COLUMNS)
    assert lines[1] == 'Cl,Cl,2,2,4,2,2,1.0000,0.0000'


@pytest.mark.slow
def test_five_vertex_survey(tmp_path):
    corpus = write_corpus(tmp_path / 'connected5.g6', atlas_graphs(5, min_n=3))
    summary = run(g_corpus=corpus, out=tmp_path / 'reports.jsonl', workers=4)
    assert summary.pairs == 29 * 29
    assert summary.min_vizing_ratio >= Fraction(1)
