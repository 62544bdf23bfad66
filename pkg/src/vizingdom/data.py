import dataclasses
from fractions import Fraction
from pathlib import Path
from typing import Optional

import vizingdom
from vizingdom import settings
from vizingdom.bounds import render_decimal
from vizingdom.classify import ClassProfile
from vizingdom.domination import DominationCertificate
from vizingdom.graph import Graph
from vizingdom.search import SearchBudget
from vizingdom.utils import groupby


@dataclasses.dataclass
class SurveyOptions:
    """
    graph6 corpus of the G side
    """
    g_corpus: Optional[Path] = None

    """
    graph6 corpus of the H side. Defaults to the G corpus.
    """
    h_corpus: Optional[Path] = None

    product_cap: int = dataclasses.field(default_factory=lambda: settings.PRODUCT_CAP)
    budget: SearchBudget = dataclasses.field(default_factory=SearchBudget)
    r_max: int = dataclasses.field(default_factory=lambda: settings.R_MAX)

    """
    Skip disconnected graphs on both sides
    """
    connected_only: bool = True

    """
    Class predicates every G-side graph must satisfy, e.g. "claw_free" or "path_free:6"
    """
    require: list[str] = dataclasses.field(default_factory=list)

    """
    Exact fair domination numbers are computed for graphs up to this many vertices
    """
    fair_max_vertices: int = dataclasses.field(default_factory=lambda: settings.FAIR_MAX_VERTICES)

    """
    User-asserted membership of every G in the class of spanning subgraphs of domination critical graphs.
    Enables the informational critical_subgraph row.
    """
    critical_subgraph: bool = False

    workers: int = dataclasses.field(default_factory=lambda: settings.WORKERS)
    out: Optional[Path] = None
    format: str = 'json'

    @property
    def all_corpora(self) -> list[Path]:
        return [self.g_corpus] + ([self.h_corpus] if self.h_corpus and self.h_corpus != self.g_corpus else [])


@dataclasses.dataclass()
class GraphFacts:
    """
    Everything about a single corpus graph that pair checks need, computed once
    """
    gid: str
    graph: Graph = dataclasses.field(repr=False)
    connected: bool = dataclasses.field(default=False, repr=False)
    certificate: Optional[DominationCertificate] = dataclasses.field(default=None, repr=False)
    pi: Optional[int] = dataclasses.field(default=None, repr=False)
    pi_witness: Optional[tuple[int, ...]] = dataclasses.field(default=None, repr=False)
    diameter: Optional[int] = dataclasses.field(default=None, repr=False)
    profile: Optional[ClassProfile] = dataclasses.field(default=None, repr=False)
    gamma_f: Optional[int] = dataclasses.field(default=None, repr=False)

    """
    Set when a solver ran out of budget; pairs involving this graph are reported inexact
    """
    error: Optional[str] = dataclasses.field(default=None, repr=True)

    @property
    def gamma(self) -> Optional[int]:
        return self.certificate.gamma if self.certificate else None

    def to_json(self) -> dict:
        return {
            'id': self.gid,
            'n': self.graph.n,
            'gamma': self.gamma,
            'gamma_set': list(self.certificate.one_gamma_set) if self.certificate else None,
            'pi': self.pi,
            'pi_witness': list(self.pi_witness) if self.pi_witness else None,
            'diameter': self.diameter,
            'gamma_f': self.gamma_f,
            'profile': self.profile.to_json() if self.profile else None,
            'error': self.error,
        }


@dataclasses.dataclass()
class BoundRow:
    name: str
    value: Fraction
    applicable: bool

    """
    Proven rows must hold whenever applicable; the others are report-only
    """
    proven: bool
    satisfied: bool
    note: str = ''

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'value': str(self.value),
            'decimal': render_decimal(self.value),
            'applicable': self.applicable,
            'proven': self.proven,
            'satisfied': self.satisfied,
            'note': self.note,
        }


@dataclasses.dataclass()
class BoundReport:
    g_id: str
    h_id: str
    gamma_g: Optional[int] = None
    gamma_h: Optional[int] = None
    gamma_product: Optional[int] = None
    pi_g: Optional[int] = None
    diam_g: Optional[int] = None
    gamma_f_g: Optional[int] = None
    gamma_f_h: Optional[int] = None
    bounds: list[BoundRow] = dataclasses.field(default_factory=list)
    vizing_ratio: Optional[Fraction] = None

    """
    Reason the pair could not be decided exactly, None for exact reports
    """
    inexact: Optional[str] = None

    @property
    def exact(self) -> bool:
        return self.inexact is None

    def row(self, name: str) -> Optional[BoundRow]:
        return next((r for r in self.bounds if r.name == name), None)

    @property
    def worst_bound_margin(self) -> Optional[Fraction]:
        margins = [self.gamma_product - r.value for r in self.bounds if r.applicable and r.proven]
        return min(margins, default=None)

    @property
    def violations(self) -> list[BoundRow]:
        return [r for r in self.bounds if r.applicable and r.proven and not r.satisfied]

    def to_json(self) -> dict:
        margin = self.worst_bound_margin
        return {
            'g_id': self.g_id,
            'h_id': self.h_id,
            'exact': self.exact,
            'inexact': self.inexact,
            'gamma_g': self.gamma_g,
            'gamma_h': self.gamma_h,
            'gamma_product': self.gamma_product,
            'pi_g': self.pi_g,
            'diam_g': self.diam_g,
            'gamma_f_g': self.gamma_f_g,
            'gamma_f_h': self.gamma_f_h,
            'vizing_ratio': str(self.vizing_ratio) if self.vizing_ratio is not None else None,
            'worst_bound_margin': str(margin) if margin is not None else None,
            'bounds': [r.to_json() for r in self.bounds],
        }


@dataclasses.dataclass()
class PairContext:
    instance: 'vizingdom.checker.PairChecker' = dataclasses.field(repr=False)
    g: GraphFacts = dataclasses.field(repr=True)
    h: GraphFacts = dataclasses.field(repr=True)
    product: Optional[Graph] = dataclasses.field(default=None, repr=False)
    product_certificate: Optional[DominationCertificate] = dataclasses.field(default=None, repr=False)
    rows: list[BoundRow] = dataclasses.field(default_factory=list, repr=False)

    @property
    def gamma_product(self) -> int:
        return self.product_certificate.gamma

    def add_row(self, name: str, value: Fraction, applicable: bool, proven: bool = True, note: str = '',
                satisfied: Optional[bool] = None):
        if satisfied is None:
            satisfied = self.gamma_product >= value
        self.rows.append(BoundRow(name=name, value=value, applicable=applicable, proven=proven,
                                  satisfied=satisfied, note=note))


@dataclasses.dataclass()
class SurveySummary:
    pairs: int = 0
    inexact: int = 0

    """
    (graph id, reason) for every corpus graph left out of the survey
    """
    skipped: list[tuple[str, str]] = dataclasses.field(default_factory=list)
    min_vizing_ratio: Optional[Fraction] = None
    vizing_violations: list[tuple[str, str]] = dataclasses.field(default_factory=list)

    """
    Per bound row: number of pairs where it applied and where it held
    """
    rows: dict[str, dict[str, int]] = dataclasses.field(default_factory=dict)

    """
    (d(G), d(G) > 3/2 γ(G), diameter bound > suen_tarr bound) per exact pair with connected G
    """
    strata: list[tuple[int, bool, bool]] = dataclasses.field(default_factory=list, repr=False)

    def add(self, report: BoundReport):
        self.pairs += 1
        if not report.exact:
            self.inexact += 1
            return
        if self.min_vizing_ratio is None or report.vizing_ratio < self.min_vizing_ratio:
            self.min_vizing_ratio = report.vizing_ratio
        if report.vizing_ratio < 1:
            self.vizing_violations.append((report.g_id, report.h_id))
        for r in report.bounds:
            counts = self.rows.setdefault(r.name, {'applicable': 0, 'satisfied': 0})
            if r.applicable:
                counts['applicable'] += 1
                counts['satisfied'] += r.satisfied
        if report.diam_g is not None:
            self.strata.append((
                report.diam_g,
                2 * report.diam_g > 3 * report.gamma_g,
                report.row('diameter').value > report.row('suen_tarr').value,
            ))

    @property
    def diameter_table(self) -> list[dict]:
        return [
            {
                'diameter': d,
                'pairs': len(items),
                'long_diameter': sum(long for _, long, _ in items),
                'diameter_beats_suen_tarr': sum(beats for _, _, beats in items),
            }
            for d, items in groupby(self.strata, key=lambda t: t[0])
        ]

    def to_json(self) -> dict:
        return {
            'pairs': self.pairs,
            'inexact': self.inexact,
            'skipped': [{'id': gid, 'reason': reason} for gid, reason in self.skipped],
            'min_vizing_ratio': str(self.min_vizing_ratio) if self.min_vizing_ratio is not None else None,
            'min_vizing_ratio_decimal':
                render_decimal(self.min_vizing_ratio) if self.min_vizing_ratio is not None else None,
            'vizing_violations': [list(p) for p in self.vizing_violations],
            'rows': {name: counts for name, counts in sorted(self.rows.items())},
            'diameter_table': self.diameter_table,
        }
