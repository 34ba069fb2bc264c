'''
ApspError Exception
A standardized way to communicate failure modes of the library and the CLI.
Every error carries an `error` dict ({'code', 'description'}) and the process
exit code the CLI should terminate with.
'''

USAGE_EXIT = 2
FAILURE_EXIT = 1


class ApspError(Exception):
    def __init__(self, error, exit_code=USAGE_EXIT):
        super().__init__(error['description'])
        self.error = error
        self.exit_code = exit_code

    @property
    def code(self):
        return self.error['code']

    @property
    def description(self):
        return self.error['description']


## Graph construction

class IdOutOfRange(ApspError):
    def __init__(self, vertex, n):
        super().__init__({
            'code': 'id_out_of_range',
            'description': f'Vertex id {vertex} is outside [0, {n}).'
        })
        self.vertex = vertex


class SelfLoop(ApspError):
    def __init__(self, vertex):
        super().__init__({
            'code': 'self_loop',
            'description': f'Edge ({vertex}, {vertex}) is a self-loop.'
        })
        self.vertex = vertex


class DuplicateEdge(ApspError):
    def __init__(self, u, v):
        super().__init__({
            'code': 'duplicate_edge',
            'description': f'Edge ({u}, {v}) appears more than once.'
        })
        self.edge = (u, v)


class InvalidParams(ApspError):
    def __init__(self, description):
        super().__init__({
            'code': 'invalid_params',
            'description': description
        })


class ParseError(ApspError):
    def __init__(self, line, description):
        super().__init__({
            'code': 'parse_error',
            'description': f'line {line}: {description}'
        })
        self.line = line


## Algorithms

class QueueOverflow(ApspError):
    def __init__(self, capacity):
        super().__init__({
            'code': 'queue_overflow',
            'description': f'd-queue of capacity {capacity} is full.'
        }, FAILURE_EXIT)


class DimensionMismatch(ApspError):
    def __init__(self, expected, actual):
        super().__init__({
            'code': 'dimension_mismatch',
            'description': f'Expected a {expected} matrix, got {actual}.'
        })


class VerificationFailed(ApspError):
    def __init__(self, description, diagnostics=()):
        super().__init__({
            'code': 'verification_failed',
            'description': description
        }, FAILURE_EXIT)
        self.diagnostics = list(diagnostics)


## Configuration and output

class InvalidConfig(ApspError):
    def __init__(self, errors):
        details = '; '.join(
            f'{field}: {", ".join(map(str, messages))}'
            for field, messages in sorted(errors.items()))
        super().__init__({
            'code': 'invalid_config',
            'description': f'Invalid bench configuration ({details}).'
        })
        self.errors = errors


class ReportIOError(ApspError):
    def __init__(self, path, reason):
        super().__init__({
            'code': 'io_error',
            'description': f'Cannot write {path}: {reason}'
        })


class EmptyReport(ApspError):
    def __init__(self):
        super().__init__({
            'code': 'empty_report',
            'description': 'There are no rows to report.'
        })


class MatrixTooLarge(ApspError):
    def __init__(self, n, limit):
        super().__init__({
            'code': 'matrix_too_large',
            'description': (f'Refusing to write a {n}x{n} matrix CSV '
                            f'(limit {limit}); pass --force to override.')
        })
