# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Fixed splitting rules: coin rules as fractions of the vehicle
#             capacity, and explicit piece lists.
# Modules
from dataclasses import dataclass

from .rules import SplitRule, greedy_split, round_half_up
from .expanded import build_expanded


# Classes / functions
@dataclass(frozen=True)
class CoinRule:
    '''Descending capacity fractions, e.g. 20/10/5/1 percent of Q'''
    fractions: tuple

    def __post_init__(self):
        fractions = tuple(float(f) for f in self.fractions)
        if len(fractions) == 0:
            raise ValueError('A coin rule needs at least one fraction')
        if any(not (0 < f <= 1) for f in fractions):
            raise ValueError('Fractions must be in (0, 1]')
        if any(a <= b for a, b in zip(fractions[:-1], fractions[1:])):
            raise ValueError('Fractions must be strictly descending')
        object.__setattr__(self, 'fractions', fractions)

    def __str__(self):
        return '/'.join('{:g}'.format(100 * f) for f in self.fractions)

    def denominations(self, capacity):
        '''Piece sizes round(fraction * Q), as a SplitRule.

        Fractions that round to the same size collapse into one piece.
        '''
        sizes = [round_half_up(f * capacity) for f in self.fractions]
        if min(sizes) < 1:
            raise ValueError(
                'Capacity {:} is too small for the coin rule {:}'.format(
                    capacity, self))
        return SplitRule(tuple(sorted(set(sizes), reverse=True)))


COIN20 = CoinRule((0.20, 0.10, 0.05, 0.01))
COIN25 = CoinRule((0.25, 0.10, 0.05, 0.01))


def split_with_residual(demand, rule):
    '''Greedy pieces, the leftover (if any) becoming one extra piece'''
    if demand < 1:
        raise ValueError('Customer demands must be positive')
    pieces, remainder = greedy_split(demand, rule)
    if remainder:
        pieces.append(remainder)
    return pieces


def fixed_expand(instance, rule):
    '''Split every customer with the same explicit rule.

    Args:
        instance (Instance): the SDVRP instance.
        rule (SplitRule): piece sizes, none larger than the capacity.

    Returns:
        ExpandedInstance. Demands the rule cannot decompose exactly leave a
        residual that becomes one extra piece.
    '''
    rule.check_capacity(instance.capacity)
    pieces = [split_with_residual(int(d), rule) for d in instance.demands]
    return build_expanded(instance, pieces, rules=[rule])


def coin_expand(instance, rule=COIN20):
    '''Split every customer with a coin rule.

    Customer i is replaced by m_20 pieces of 0.2Q, then m_10 of 0.1Q, and
    so on, each count being the largest that fits in what is left.

    Args:
        instance (Instance): the SDVRP instance.
        rule (CoinRule): COIN20 or COIN25 or any other fraction list.

    Returns:
        ExpandedInstance.
    '''
    return fixed_expand(instance, rule.denominations(instance.capacity))
