from pathlib import Path

import pytest

from vizingdom.config import load_survey_options
from vizingdom.errors import ConfigError


@pytest.fixture
def corpus(tmp_path) -> Path:
    path = tmp_path / 'corpus.g6'
    path.write_text('A_\n')
    return path


def write_config(tmp_path, text) -> Path:
    path = tmp_path / 'survey.env'
    path.write_text(text)
    return path


def test_defaults(corpus):
    options = load_survey_options(g_corpus=corpus)
    assert options.g_corpus == corpus
    assert options.h_corpus is None
    assert options.connected_only is True
    assert options.require == []
    assert options.format == 'json'
    assert options.all_corpora == [corpus]


def test_file_values(tmp_path, corpus):
    config = write_config(tmp_path, f'G_CORPUS={corpus}\nPRODUCT_CAP=64\nNODE_BUDGET=1000\n'
                                    f'REQUIRE=claw_free,path_free:6\nCONNECTED_ONLY=false\nFORMAT=CSV\n'
                                    f'CRITICAL_SUBGRAPH=true\n')
    options = load_survey_options(config)
    assert options.product_cap == 64
    assert options.budget.node_limit == 1000
    assert options.require == ['claw_free', 'path_free:6']
    assert options.connected_only is False
    assert options.critical_subgraph is True
    assert options.format == 'csv'


def test_precedence(tmp_path, corpus, monkeypatch):
    config = write_config(tmp_path, f'G_CORPUS={corpus}\nPRODUCT_CAP=64\nWORKERS=2\nR_MAX=5\n')
    monkeypatch.setenv('PRODUCT_CAP', '100')
    monkeypatch.setenv('WORKERS', '3')
    options = load_survey_options(config, product_cap=200)
    assert options.product_cap == 200
    assert options.workers == 3
    assert options.r_max == 5


@pytest.mark.parametrize('text,overrides', [
    ('PRODUCT_CAP=0\n', {}),
    ('WORKERS=0\n', {}),
    ('NODE_BUDGET=-1\n', {}),
    ('R_MAX=3\n', {}),
    ('FORMAT=xml\n', {}),
    ('REQUIRE=bipartite\n', {}),
    ('REQUIRE=k_free:9\n', {}),
    ('PRODUCT_CAP=many\n', {}),
    ('', {'h_corpus': Path('missing.g6')}),
])
def test_invalid_values(tmp_path, corpus, text, overrides):
    config = write_config(tmp_path, f'G_CORPUS={corpus}\n{text}')
    with pytest.raises(ConfigError):
        load_survey_options(config, **overrides)


def test_missing_corpus(tmp_path):
    with pytest.raises(ConfigError):
        load_survey_options()
    with pytest.raises(ConfigError):
        load_survey_options(g_corpus=tmp_path / 'missing.g6')


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_survey_options(tmp_path / 'missing.env')
