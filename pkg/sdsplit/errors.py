# vim: fdm=indent
# author:     Fabio Zanini
# date:       14/08/17
# content:    Exceptions raised by sdsplit.
# Classes / functions
class ParseError(ValueError):
    '''Malformed instance, solution, or best-known file'''

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = 'line {:}: {:}'.format(lineno, message)
        super().__init__(message)


class InfeasibleError(ValueError):
    '''The instance cannot be served under the requested strategy'''
    pass


class InvariantError(RuntimeError):
    '''An internal invariant was broken'''

    def __init__(self, message, report=None):
        self.report = report
        if report is not None and len(report):
            message = message + '\n' + str(report)
        super().__init__(message)
