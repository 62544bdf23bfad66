import abc
import contextlib
import sys
from pathlib import Path
from typing import Optional, TextIO, Iterator

from vizingdom.data import BoundReport


class ReportWriter(abc.ABC):
    @property
    @abc.abstractmethod
    def name(self) -> str:
        pass

    @contextlib.contextmanager
    def open(self, path: Optional[Path]) -> Iterator[TextIO]:
        """
        Open the report destination, stdout when no path is given
        """
        if path is None:
            yield sys.stdout
            return
        with open(path, 'w', encoding='utf-8', newline='') as f:
            yield f

    def begin(self, out: TextIO) -> None:
        pass

    @abc.abstractmethod
    def write(self, out: TextIO, report: BoundReport) -> None:
        pass
