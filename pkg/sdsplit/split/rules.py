# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Splitting rules and the greedy largest-first decomposition.
# Modules
import math
import numbers
from dataclasses import dataclass


# Classes / functions
@dataclass(frozen=True)
class SplitRule:
    '''Strictly descending piece sizes used to decompose a demand'''
    pieces: tuple

    def __post_init__(self):
        pieces = tuple(int(p) for p in self.pieces)
        if any(isinstance(p, bool) or not isinstance(p, numbers.Integral)
               for p in self.pieces):
            raise ValueError('Pieces must be integers')
        if len(pieces) == 0:
            raise ValueError('A rule needs at least one piece')
        if pieces[-1] < 1:
            raise ValueError('Pieces must be positive')
        if any(a <= b for a, b in zip(pieces[:-1], pieces[1:])):
            raise ValueError('Pieces must be strictly descending')
        object.__setattr__(self, 'pieces', pieces)

    def __str__(self):
        return '/'.join(str(p) for p in self.pieces)

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    @property
    def largest(self):
        return self.pieces[0]

    @property
    def smallest(self):
        return self.pieces[-1]

    def check_capacity(self, capacity):
        if self.largest > capacity:
            raise ValueError('Piece {:} exceeds the capacity {:}'.format(
                self.largest, capacity))


def round_half_up(x):
    '''Round to the nearest integer, halves away from zero for x >= 0'''
    return int(math.floor(x + 0.5))


def greedy_split(demand, rule):
    '''Largest-first decomposition, returning the leftover.

    Args:
        demand (int): the demand to split.
        rule (SplitRule or sequence of int): piece sizes, descending.

    Returns:
        (pieces, remainder) where pieces is the list of pieces used, in
        descending order, and remainder is what no piece fits into.
    '''
    pieces = []
    remainder = int(demand)
    for piece in rule:
        count, remainder = divmod(remainder, piece)
        pieces.extend([piece] * count)
    return pieces, remainder


def greedy_decompose(demand, rule):
    '''Decompose a demand by repeatedly taking the largest piece that fits.

    Args:
        demand (int): positive demand.
        rule (SplitRule): the piece sizes; the smallest must divide demand.

    Returns:
        list of pieces adding up to demand exactly.
    '''
    if (demand != int(demand)) or (demand < 1):
        raise ValueError('Demand must be a positive integer')
    if not isinstance(rule, SplitRule):
        rule = SplitRule(tuple(rule))
    pieces, remainder = greedy_split(demand, rule)
    if remainder:
        raise ValueError('Demand {:} is not a multiple of the smallest piece {:}'.format(
            demand, rule.smallest))
    return pieces
