

class VizingDomError(Exception):
    code = 'error'
    exit_code = 1


class InvalidGraphError(VizingDomError):
    code = 'invalid_graph'


class Graph6ParseError(InvalidGraphError):
    code = 'graph6_parse'

    def __init__(self, message: str, offset: int, line: int = None):
        self.reason = message
        self.offset = offset
        self.line = line
        where = f'byte {offset}' if line is None else f'line {line}, byte {offset}'
        super().__init__(f'{message} ({where})')


class UnsupportedSizeError(VizingDomError):
    code = 'unsupported_size'


class GeneratorError(VizingDomError):
    code = 'generator'


class GraphSizeError(VizingDomError):
    code = 'graph_size'


class DomainError(VizingDomError):
    code = 'domain'


class SearchBudgetExceeded(VizingDomError):
    code = 'inexact'
    exit_code = 3


class EnumerationCapExceeded(SearchBudgetExceeded):
    code = 'enumeration_cap'


class SizeGuardError(VizingDomError):
    code = 'size_guard'


class IntegrityError(VizingDomError):
    code = 'integrity'
    exit_code = 4

    def __init__(self, message: str, witness: dict = None):
        self.witness = witness or {}
        super().__init__(message)


class ConfigError(VizingDomError):
    code = 'config'
    exit_code = 2
