import contextlib
import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from vizingdom.checker import PairChecker
from vizingdom.config import validate_survey_options
from vizingdom.data import SurveyOptions, SurveySummary, GraphFacts
from vizingdom.errors import GraphSizeError
from vizingdom.graph import Graph, is_connected
from vizingdom.graph6 import read_graph6_file
from vizingdom.writers.base import ReportWriter

# One checker per worker process
_checker: Optional[PairChecker] = None


def _init_worker(options: SurveyOptions):
    global _checker
    _checker = PairChecker(options)


def _analyze(item: tuple[str, Graph, bool]) -> GraphFacts:
    gid, g, with_power = item
    return _checker.analyze(gid, g, with_power=with_power)


def _check(pair: tuple[GraphFacts, GraphFacts]):
    return _checker.check(*pair)


class SurveyRunner:
    def __init__(self, writer: ReportWriter):
        self.writer = writer

    @contextlib.contextmanager
    def _worker_map(self, options: SurveyOptions):
        """
        Yields a map function. Results always come back in input order, so reports do not depend on the
        number of workers.
        """
        if options.workers <= 1:
            _init_worker(options)
            yield map
        else:
            with ProcessPoolExecutor(max_workers=options.workers, initializer=_init_worker,
                                     initargs=(options,)) as pool:
                yield functools.partial(pool.map, chunksize=4)

    def _load_corpus(self, options: SurveyOptions, path, summary: SurveySummary) -> list[tuple[str, Graph]]:
        logging.info(f'Loading corpus {path}')
        out = []
        for gid, g in read_graph6_file(path):
            if g.n == 0:
                reason = 'null graph'
            elif options.connected_only and not is_connected(g):
                reason = 'disconnected'
            else:
                out.append((gid, g))
                continue
            logging.info(f'Skipping {gid}: {reason}')
            summary.skipped.append((gid, reason))
        logging.info(f'Loaded {len(out)} graphs from {path}')
        return out

    def _filter_g_side(self, options: SurveyOptions, facts: list[GraphFacts],
                       summary: SurveySummary) -> list[GraphFacts]:
        if not options.require:
            return facts
        out = []
        for f in facts:
            if f.profile is None:
                reason = 'class profile unavailable'
            elif failed := [p for p in options.require if not f.profile.check(p)]:
                reason = f'not {",".join(failed)}'
            else:
                out.append(f)
                continue
            logging.info(f'Skipping {f.gid} on the G side: {reason}')
            summary.skipped.append((f.gid, reason))
        return out

    def run(self, options: SurveyOptions) -> SurveySummary:
        validate_survey_options(options)
        summary = SurveySummary()

        g_side = self._load_corpus(options, options.g_corpus, summary)
        same_corpus = options.h_corpus is None or options.h_corpus == options.g_corpus
        h_side = g_side if same_corpus else self._load_corpus(options, options.h_corpus, summary)

        if g_side and h_side:
            largest = max(g.n for _, g in g_side) * max(h.n for _, h in h_side)
            if largest > options.product_cap:
                raise GraphSizeError(f'Corpus products reach {largest} vertices, cap is {options.product_cap}')

        with self._worker_map(options) as worker_map:
            logging.info('Computing per-graph facts')
            g_facts = list(worker_map(_analyze, [(gid, g, True) for gid, g in g_side]))
            h_facts = g_facts if same_corpus else list(worker_map(_analyze, [(gid, g, False) for gid, g in h_side]))
            g_facts = self._filter_g_side(options, g_facts, summary)

            pairs = [(g, h) for g in g_facts for h in h_facts]
            logging.info(f'Checking {len(pairs)} pairs')
            with self.writer.open(options.out) as out:
                self.writer.begin(out)
                for report in worker_map(_check, pairs):
                    self.writer.write(out, report)
                    summary.add(report)

        logging.info(f'Survey finished: {summary.pairs} pairs, {summary.inexact} inexact')
        if not summary.pairs:
            logging.warning('Survey checked zero pairs')
        return summary
