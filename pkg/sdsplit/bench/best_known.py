# vim: fdm=indent
# author:     Fabio Zanini
# date:       14/08/17
# content:    Table of best-known costs of benchmark instances.
# Modules
import io
import os
import pandas as pd

from ..errors import ParseError


data_dir = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')


# Classes / functions
class BestKnownTable(pd.Series):
    '''Best-known cost by instance name'''
    _metadata = ['source']

    @property
    def _constructor(self):
        return BestKnownTable

    def lookup(self, name):
        '''Best-known cost of an instance, or None if not listed'''
        if name in self.index:
            return float(self.loc[name])
        return None

    @classmethod
    def from_path(cls, path):
        with open(path) as stream:
            self = load_best_known(stream)
        self.source = path
        return self

    @classmethod
    def default(cls):
        '''The table from the config file, else the shipped one'''
        from ..config import config

        path = config['io'].get('best_known')
        if path is None:
            path = os.path.join(data_dir, 'best_known.txt')
        return cls.from_path(path)


def load_best_known(text):
    '''Parse a best-known file.

    Args:
        text (str or file-like): lines "<name> <cost>"; blank lines and
            anything after '#' are ignored.

    Returns:
        BestKnownTable indexed by instance name.

    Raises:
        ParseError on malformed lines, duplicate names, or costs <= 0.
    '''
    if isinstance(text, str):
        text = io.StringIO(text)

    names, costs = [], []
    for lineno, line in enumerate(text, 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError('expected "<name> <cost>"', lineno=lineno)
        name, cost = fields
        try:
            cost = float(cost)
        except ValueError:
            raise ParseError('cost is not a number: {:}'.format(cost), lineno=lineno)
        if not cost > 0:
            raise ParseError('cost must be positive: {:}'.format(cost), lineno=lineno)
        if name in names:
            raise ParseError('duplicate instance {:}'.format(name), lineno=lineno)
        names.append(name)
        costs.append(cost)

    table = BestKnownTable(
            costs,
            index=pd.Index(names, name='instance', dtype=object),
            name='best_known',
            dtype=float)
    table.source = None
    return table
