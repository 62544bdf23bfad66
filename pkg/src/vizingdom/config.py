import logging
from pathlib import Path
from typing import Optional

from decouple import Config, RepositoryEnv, RepositoryEmpty, Csv, UndefinedValueError

from vizingdom.classify import ClassProfile, PATH_ORDERS
from vizingdom.data import SurveyOptions
from vizingdom.errors import ConfigError, DomainError
from vizingdom.search import SearchBudget

REPORT_FORMATS = ('json', 'csv')


def _optional_path(value) -> Optional[Path]:
    return Path(value) if value else None


def load_survey_options(config_file: Optional[Path] = None, **overrides) -> SurveyOptions:
    """
    Build survey options from a flat KEY=value file. Non-None keyword overrides (CLI flags) win over
    the process environment, which wins over the file, which wins over the defaults.
    """
    if config_file is not None and not config_file.is_file():
        raise ConfigError(f'Config file {config_file} does not exist')
    source = Config(RepositoryEnv(str(config_file)) if config_file else RepositoryEmpty())
    defaults = SurveyOptions()

    def value(key: str, default, cast):
        if (override := overrides.get(key.lower())) is not None:
            return override
        try:
            return source(key, default=default, cast=cast)
        except (ValueError, UndefinedValueError) as ex:
            raise ConfigError(f'Invalid value for {key}: {ex}') from ex

    options = SurveyOptions(
        g_corpus=value('G_CORPUS', None, _optional_path),
        h_corpus=value('H_CORPUS', None, _optional_path),
        product_cap=value('PRODUCT_CAP', defaults.product_cap, int),
        budget=SearchBudget(
            node_limit=value('NODE_BUDGET', defaults.budget.node_limit, int),
            enumeration_cap=value('ENUMERATION_CAP', defaults.budget.enumeration_cap, int),
        ),
        r_max=value('R_MAX', defaults.r_max, int),
        connected_only=value('CONNECTED_ONLY', defaults.connected_only, bool),
        require=list(value('REQUIRE', '', Csv())),
        fair_max_vertices=value('FAIR_MAX_VERTICES', defaults.fair_max_vertices, int),
        critical_subgraph=value('CRITICAL_SUBGRAPH', defaults.critical_subgraph, bool),
        workers=value('WORKERS', defaults.workers, int),
        out=value('OUT', None, _optional_path),
        format=value('FORMAT', defaults.format, str).lower(),
    )
    validate_survey_options(options)
    logging.debug(f'Survey options: {options}')
    return options


def validate_survey_options(options: SurveyOptions):
    if options.g_corpus is None:
        raise ConfigError('No G corpus configured (G_CORPUS or --g-corpus)')
    for path in options.all_corpora:
        if not path.is_file():
            raise ConfigError(f'Corpus {path} does not exist')
    for name in ('product_cap', 'workers'):
        if getattr(options, name) < 1:
            raise ConfigError(f'{name} must be positive')
    if options.budget.node_limit < 1 or options.budget.enumeration_cap < 1:
        raise ConfigError('Search budgets must be positive')
    if options.r_max < 4:
        raise ConfigError('r_max must be at least 4 to classify K_4-freeness')
    if options.fair_max_vertices < 0:
        raise ConfigError('fair_max_vertices must not be negative')
    if options.format not in REPORT_FORMATS:
        raise ConfigError(f'Unknown report format {options.format}')

    # An all-true profile accepts exactly the predicates a real profile can answer
    permissive = ClassProfile(r_max=options.r_max, k_free=dict.fromkeys(range(2, options.r_max + 1), True),
                              star_free=dict.fromkeys(range(2, options.r_max + 1), True),
                              path_free=dict.fromkeys(PATH_ORDERS, True))
    for predicate in options.require:
        try:
            permissive.check(predicate)
        except DomainError as ex:
            raise ConfigError(str(ex)) from ex
