import json
from typing import TextIO

from vizingdom.data import BoundReport
from vizingdom.writers.base import ReportWriter


class JsonLinesWriter(ReportWriter):
    name = 'json'

    def write(self, out: TextIO, report: BoundReport) -> None:
        out.write(json.dumps(report.to_json(), sort_keys=True) + '\n')
