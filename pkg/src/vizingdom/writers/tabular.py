import csv
from typing import TextIO

from vizingdom.bounds import render_decimal
from vizingdom.data import BoundReport
from vizingdom.writers.base import ReportWriter


class CsvWriter(ReportWriter):
    name = 'csv'
    COLUMNS = ['g_id', 'h_id', 'gamma_g', 'gamma_h', 'gamma_product', 'pi_g', 'diam_g', 'ratio', 'worst_bound_margin']

    def begin(self, out: TextIO) -> None:
        csv.writer(out, lineterminator='\n').writerow(self.COLUMNS)

    def write(self, out: TextIO, report: BoundReport) -> None:
        margin = report.worst_bound_margin
        csv.writer(out, lineterminator='\n').writerow([
            report.g_id, report.h_id, report.gamma_g, report.gamma_h, report.gamma_product, report.pi_g,
            report.diam_g,
            render_decimal(report.vizing_ratio) if report.vizing_ratio is not None else '',
            render_decimal(margin) if margin is not None else '',
        ])
