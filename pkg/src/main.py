import json
import logging
from pathlib import Path

import click

from vizingdom.classify import classify
from vizingdom.config import load_survey_options
from vizingdom.domination import domination_number, power_with_witness
from vizingdom.errors import VizingDomError, InvalidGraphError
from vizingdom.fair import level_set_fair_reception, verify_fair_reception, read_fair_reception, \
    fair_domination_certificate
from vizingdom.graph import Graph, cartesian_product, is_connected
from vizingdom.graph6 import encode_graph6, read_graph6_file
from vizingdom.runner import SurveyRunner
from vizingdom.search import SearchBudget
from vizingdom.utils import ChoiceMap, GeneratorParamType, Graph6ParamType
from vizingdom.writers.jsonl import JsonLinesWriter
from vizingdom.writers.tabular import CsvWriter


REPORT_WRITERS = {
    'json': JsonLinesWriter(),
    'csv': CsvWriter(),
}


def to_path(ctx, param, value):
    return Path(value) if value else None


class VizingDomGroup(click.Group):
    """
    Renders library errors as {"error": code, "message": ...} on stderr, plus the witness of an integrity error
    """
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except VizingDomError as ex:
            out = {'error': ex.code, 'message': str(ex)}
            if getattr(ex, 'witness', None):
                out['witness'] = ex.witness
            click.echo(json.dumps(out, sort_keys=True), err=True)
            ctx.exit(ex.exit_code)


def graph_input(f):
    f = click.option('--gen', 'gen', type=GeneratorParamType(), multiple=True, help='Generator token, e.g. path:6')(f)
    f = click.option('--g6', 'g6', type=Graph6ParamType(), multiple=True, help='graph6 string')(f)
    f = click.option('--file', 'file', type=click.Path(exists=True, dir_okay=False), callback=to_path,
                     help='graph6 file, one record per line')(f)
    f = click.option('--budget', type=click.IntRange(min=1), default=None, help='Search node limit')(f)
    return f


def collect_graphs(gen, g6, file) -> list[tuple[str, Graph]]:
    graphs = list(gen) + list(g6)
    if file:
        graphs += read_graph6_file(file)
    if not graphs:
        raise InvalidGraphError('No input graph (use --gen, --g6 or --file)')
    return graphs


def single_graph(gen, g6, file) -> Graph:
    graphs = collect_graphs(gen, g6, file)
    if len(graphs) != 1:
        raise InvalidGraphError(f'Expected exactly one input graph, got {len(graphs)}')
    return graphs[0][1]


def make_budget(budget) -> SearchBudget:
    return SearchBudget(node_limit=budget) if budget else SearchBudget()


@click.group(cls=VizingDomGroup)
@click.option('-v', '--verbose', count=True, default=0)
def main(verbose):
    # Set up logging
    logging.basicConfig(level=logging.DEBUG if verbose >= 2 else logging.INFO if verbose >= 1 else logging.WARNING)


@main.command()
@graph_input
@click.option('--all', 'enumerate_all', is_flag=True, default=False, help='Also list every γ-set')
def gamma(gen, g6, file, budget, enumerate_all):
    cert = domination_number(single_graph(gen, g6, file), make_budget(budget), enumerate_all=enumerate_all)
    click.echo(f'gamma={cert.gamma}')
    click.echo(f'gamma_set={list(cert.one_gamma_set)}')
    if cert.all_gamma_sets is not None:
        for s in cert.all_gamma_sets:
            click.echo(f'gamma_set={list(s)}')


@main.command()
@graph_input
def power(gen, g6, file, budget):
    pi, witness = power_with_witness(single_graph(gen, g6, file), make_budget(budget))
    click.echo(f'pi={pi}')
    click.echo(f'witness={list(witness)}')


@main.command('classify')
@graph_input
@click.option('--rmax', type=click.IntRange(min=3), default=None)
def classify_cmd(gen, g6, file, budget, rmax):
    profile = classify(single_graph(gen, g6, file), rmax)
    click.echo(json.dumps(profile.to_json(), sort_keys=True))


@main.command()
@graph_input
@click.option('--cap', type=click.IntRange(min=1), default=None, help='Product vertex cap')
def product(gen, g6, file, budget, cap):
    graphs = collect_graphs(gen, g6, file)
    if len(graphs) != 2:
        raise InvalidGraphError(f'product takes exactly two graphs, got {len(graphs)}')
    p = cartesian_product(graphs[0][1], graphs[1][1], cap=cap)
    click.echo(f'n={p.n}')
    click.echo(f'm={p.num_edges}')
    click.echo(f'graph6={encode_graph6(p)}')


@main.command()
@graph_input
@click.option('--construct', is_flag=True, default=False, help='Build the level-set fair reception')
@click.option('--verify', 'verify_file', type=click.Path(exists=True, dir_okay=False), callback=to_path,
              help='Verify the fair reception in this file, one set per line')
def fair(gen, g6, file, budget, construct, verify_file):
    if construct == bool(verify_file):
        raise click.UsageError('Use exactly one of --construct and --verify')
    g = single_graph(gen, g6, file)
    if construct:
        fr = level_set_fair_reception(g, make_budget(budget))
        verdict = None
    else:
        fr = read_fair_reception(verify_file, g)
        verdict = verify_fair_reception(g, fr, make_budget(budget))
    click.echo(f'k={fr.k}')
    click.echo(f'verified={str(fr.verified).lower()}')
    out = fr.to_json()
    if verdict is not None:
        out['verdict'] = verdict.to_json()
    click.echo(json.dumps(out, sort_keys=True))


@main.command()
@graph_input
def gammaf(gen, g6, file, budget):
    g = single_graph(gen, g6, file)
    fr = fair_domination_certificate(g, make_budget(budget))
    click.echo(f'gamma_f={fr.k}')
    if is_connected(g):
        click.echo(f'level_set_k={level_set_fair_reception(g, make_budget(budget)).k}')
    click.echo(json.dumps(fr.to_json(), sort_keys=True))


@main.command()
@click.option('--config', 'config_file', type=click.Path(exists=True, dir_okay=False), callback=to_path,
              help='Flat KEY=value survey configuration')
@click.option('--g-corpus', type=click.Path(), callback=to_path)
@click.option('--h-corpus', type=click.Path(), callback=to_path, help='Defaults to the G corpus')
@click.option('--cap', 'product_cap', type=click.INT, default=None)
@click.option('--budget', 'node_budget', type=click.INT, default=None)
@click.option('--enum-cap', 'enumeration_cap', type=click.INT, default=None)
@click.option('--rmax', 'r_max', type=click.INT, default=None)
@click.option('--format', 'writer', type=ChoiceMap(choices=REPORT_WRITERS), default=None)
@click.option('--workers', type=click.INT, default=None)
@click.option('--out', type=click.Path(dir_okay=False), callback=to_path)
@click.option('--require', multiple=True, help='Class predicate every G must satisfy, e.g. claw_free or path_free:6')
@click.option('--connected-only/--all-graphs', default=None)
@click.option('--fair-max', 'fair_max_vertices', type=click.INT, default=None)
@click.option('--critical-subgraph/--no-critical-subgraph', default=None,
              help='Assert every G is a spanning subgraph of a domination critical graph')
def survey(config_file, g_corpus, h_corpus, product_cap, node_budget, enumeration_cap, r_max, writer, workers, out,
           require, connected_only, fair_max_vertices, critical_subgraph):
    options = load_survey_options(
        config_file,
        g_corpus=g_corpus,
        h_corpus=h_corpus,
        product_cap=product_cap,
        node_budget=node_budget,
        enumeration_cap=enumeration_cap,
        r_max=r_max,
        format=writer.name if writer else None,
        workers=workers,
        out=out,
        require=list(require) or None,
        connected_only=connected_only,
        fair_max_vertices=fair_max_vertices,
        critical_subgraph=critical_subgraph,
    )
    summary = SurveyRunner(REPORT_WRITERS[options.format]).run(options)

    # Reports own stdout unless they go to a file
    click.echo(json.dumps(summary.to_json(), sort_keys=True), err=options.out is None)
    if summary.inexact:
        logging.warning(f'{summary.inexact} pair(s) could not be decided exactly')


if __name__ == '__main__':
    main()
