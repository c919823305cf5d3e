"""
Error hierarchy shared by every lattice13 module
Each error carries the process exit code the CLI reports for it
"""


class LatticeError(Exception):
    """Base class for all lattice13 failures"""
    exit_code = 3

    def to_dict(self):
        return {'success': False, 'error': str(self), 'type': type(self).__name__}


# Usage / parse failures (exit 2)

class ParseError(LatticeError):
    exit_code = 2

    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class KindMismatch(LatticeError):
    """Two embeddings of different kinds were compared"""
    exit_code = 2


class InvalidCellParameters(LatticeError):
    exit_code = 2


class NotUnimodular(LatticeError, ValueError):
    exit_code = 2


class UnsupportedParameters(LatticeError, ValueError):
    exit_code = 2


# Numeric failures (exit 3)

class NonPositiveDefinite(LatticeError):
    exit_code = 3


class NonTermination(LatticeError):
    """Iteration cap exceeded; only expected with float input"""
    exit_code = 3


class InternalAssertion(LatticeError):
    exit_code = 3


class RetryExhausted(LatticeError):
    exit_code = 3


class DegenerateCone(LatticeError):
    exit_code = 3


class NotReduced(LatticeError):
    exit_code = 3
