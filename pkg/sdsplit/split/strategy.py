# vim: fdm=indent
# author:     Fabio Zanini
# date:       13/02/19
# content:    Splitting strategies and their selector strings.
# Modules
from dataclasses import dataclass

from .rules import SplitRule
from .pasa import PasaConfig


strategy_kinds = ('none', 'coin20', 'coin25', 'pasa', 'fixed')

_pasa_keys = {
        'l': 'levels',
        'levels': 'levels',
        'p': 'prime',
        'prime': 'prime',
        'round': 'rounding',
        'rounding': 'rounding',
        }


# Classes / functions
@dataclass(frozen=True)
class Strategy:
    '''How demands are split before solving the CVRP.

    The selector string is one of none, coin20, coin25,
    pasa[:L=<int>,p=<int>[,round=half_up|ceil|floor]], or
    fixed:<piece>/<piece>/... (descending).
    '''
    kind: str
    pasa: PasaConfig = None
    rule: SplitRule = None

    def __post_init__(self):
        if self.kind not in strategy_kinds:
            raise ValueError('Strategy not understood: {:}'.format(self.kind))
        if (self.kind == 'pasa') and (self.pasa is None):
            object.__setattr__(self, 'pasa', PasaConfig.from_config())
        if (self.kind == 'fixed') and (self.rule is None):
            raise ValueError('The fixed strategy needs a rule')

    def __str__(self):
        if self.kind == 'pasa':
            return 'pasa:{:}'.format(self.pasa)
        if self.kind == 'fixed':
            return 'fixed:{:}'.format(self.rule)
        return self.kind

    @classmethod
    def parse(cls, text):
        '''Parse a strategy selector string, raising ValueError if invalid'''
        text = text.strip()
        kind, _, args = text.partition(':')
        kind = kind.strip().lower()

        if kind in ('none', 'coin20', 'coin25'):
            if args:
                raise ValueError('Strategy {:} takes no arguments'.format(kind))
            return cls(kind)

        if kind == 'fixed':
            try:
                pieces = tuple(int(p) for p in args.split('/'))
            except ValueError:
                raise ValueError('Fixed rules look like fixed:128/64/32, got {:}'.format(text))
            return cls(kind, rule=SplitRule(pieces))

        if kind == 'pasa':
            kwargs = {}
            if args:
                for item in args.split(','):
                    key, eq, value = item.partition('=')
                    key = key.strip().lower()
                    if (not eq) or (key not in _pasa_keys):
                        raise ValueError('PASA options look like L=2,p=2, got {:}'.format(item))
                    name = _pasa_keys[key]
                    if name in kwargs:
                        raise ValueError('Duplicate PASA option {:}'.format(key))
                    if name == 'rounding':
                        kwargs[name] = value.strip()
                    else:
                        try:
                            kwargs[name] = int(value)
                        except ValueError:
                            raise ValueError('PASA option {:} must be an integer'.format(key))
            defaults = PasaConfig.from_config()
            for name in ('levels', 'prime', 'rounding'):
                kwargs.setdefault(name, getattr(defaults, name))
            return cls(kind, pasa=PasaConfig(**kwargs))

        raise ValueError('Strategy not understood: {:}'.format(text))

    def expand(self, instance):
        '''Split an instance according to this strategy.

        Returns:
            ExpandedInstance.
        '''
        from . import no_split_expand
        from .coin import coin_expand, fixed_expand, COIN20, COIN25
        from .pasa import pasa_expand

        if self.kind == 'none':
            return no_split_expand(instance)
        if self.kind == 'coin20':
            return coin_expand(instance, COIN20)
        if self.kind == 'coin25':
            return coin_expand(instance, COIN25)
        if self.kind == 'fixed':
            return fixed_expand(instance, self.rule)
        return pasa_expand(instance, self.pasa)
