class Error(Exception):
    """Base-class for all exceptions raised by this module"""


class ParseError(Error, ValueError):
    """Malformed rational, distribution or grid text."""


class NonzeroConstantTerm(Error):
    """Composition with an inner series whose constant term is not zero."""


class OrderExceeded(Error, IndexError):
    """Coefficient requested beyond the truncation order of a series."""


class NegativeIndex(Error, IndexError):
    pass


class UnknownKind(Error, ValueError):
    pass


class IndexOutOfTriangle(Error, IndexError):
    """Triangle entry (n, k) requested with k > n or a negative index."""


class InvalidDistribution(Error, ValueError):
    pass


class NoClosedForm(Error):
    """The distribution has no closed-form degenerate MGF construction."""


class UnknownIdentity(Error, KeyError):

    def __str__(self):
        return 'unknown identity: {}'.format(self.args[0])


class GridMismatch(Error, ValueError):
    pass
