# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Adaptive splitting: distance rings around the depot, one
#             power-of-a-prime rule per ring, coarser rules further out.
# Modules
import math
from dataclasses import dataclass
import numpy as np
import pandas as pd

from .rules import SplitRule, greedy_decompose, round_half_up
from .expanded import build_expanded


roundings = {
        'half_up': round_half_up,
        'ceil': math.ceil,
        'floor': math.floor,
        }


# Classes / functions
def is_prime(p):
    if p < 2:
        return False
    return all(p % k for k in range(2, int(math.isqrt(p)) + 1))


@dataclass(frozen=True)
class PasaConfig:
    '''Number of rings L, prime base p, and the rounding of log_p(mu)'''
    levels: int = 2
    prime: int = 2
    rounding: str = 'half_up'

    def __post_init__(self):
        if int(self.levels) != self.levels or self.levels < 1:
            raise ValueError('levels must be a positive integer')
        if int(self.prime) != self.prime or not is_prime(int(self.prime)):
            raise ValueError('prime must be a prime number, got {:}'.format(self.prime))
        if self.rounding not in roundings:
            raise ValueError('rounding must be one of {:}'.format(
                ', '.join(roundings)))

    def __str__(self):
        label = 'L={:},p={:}'.format(self.levels, self.prime)
        if self.rounding != 'half_up':
            label += ',round={:}'.format(self.rounding)
        return label

    @classmethod
    def from_config(cls):
        '''Defaults from the "split" section of the config file'''
        from ..config import config

        return cls(
            levels=config['split']['levels'],
            prime=config['split']['prime'],
            rounding=config['split']['rounding'],
            )


class ClusterLabels():
    '''Ring label of every customer, 1 being the ring nearest the depot'''

    def __init__(self, labels, levels):
        self.labels = labels
        self.levels = levels

    def __repr__(self):
        return '<{:}: {:} customers, {:} rings>'.format(
                self.__class__.__name__,
                len(self.labels),
                self.levels)

    def __getitem__(self, customer):
        return int(self.labels.loc[customer])

    @property
    def rule_index(self):
        '''Rule index L + 1 - label: the furthest ring gets rule 1'''
        return (self.levels + 1 - self.labels).rename('rule_index')

    def counts(self):
        '''Number of customers per ring label'''
        return self.labels.value_counts().reindex(
            np.arange(1, self.levels + 1), fill_value=0)


def cluster_customers(instance, levels):
    '''Split customers into uniformly spaced rings around the depot.

    Label l is assigned iff (l-1)/L * dmax < dist <= l/L * dmax, where
    dmax is the largest customer-depot distance. Customers sitting on the
    depot get label 1.

    Args:
        instance (Instance): the instance.
        levels (int): number of rings L.

    Returns:
        ClusterLabels.
    '''
    if int(levels) != levels or levels < 1:
        raise ValueError('The number of levels must be a positive integer')
    if instance.n_customers < 1:
        raise ValueError('Clustering needs at least one customer')
    levels = int(levels)

    dists = instance.depot_distances()
    dist_max = dists.max()
    if dist_max == 0:
        labels = np.ones(len(dists), dtype=np.int64)
    else:
        labels = np.ceil(levels * dists / dist_max).astype(np.int64)
        labels = np.clip(labels, 1, levels)
        labels[dists == dist_max] = levels

    labels = pd.Series(
            labels,
            index=pd.Index(instance.customer_ids, name='id'),
            name='label',
            )
    return ClusterLabels(labels, levels)


def pasa_parameters(instance, config):
    '''Common divisor d, mean scaled demand mu, and top exponent s_max.

    Args:
        instance (Instance): the instance, with positive integer demands.
        config (PasaConfig): the prime base and the rounding mode.

    Returns:
        tuple (d, mu, s_max) with d = gcd(Q, d_1, ..., d_n),
        mu = mean(d_i / d) and s_max = round(log_p(mu)).
    '''
    d = int(np.gcd.reduce(np.append(instance.demands, instance.capacity)))
    if instance.n_customers == 0:
        return d, 0.0, 0
    mu = float(np.mean(instance.demands / d))
    # Stabilize exact powers (e.g. log_5 125 = 3.0000000000000004)
    exponent = round(math.log(mu) / math.log(config.prime), 9)
    s_max = int(roundings[config.rounding](exponent))
    return d, mu, s_max


def build_pasa_rules(instance, config):
    '''One splitting rule per rule index, index 1 being the coarsest.

    Rule i is d * {p^0, ..., p^(s_max - i + 1)}, descending, without the
    pieces larger than the capacity; it degenerates to {d} when the top
    exponent is negative.

    Returns:
        list of L SplitRule, rules[0] being rule index 1.
    '''
    d, mu, s_max = pasa_parameters(instance, config)
    rules = []
    for i in range(1, config.levels + 1):
        top = s_max - i + 1
        pieces = [d * config.prime ** k for k in range(max(top, 0), -1, -1)]
        pieces = [piece for piece in pieces if piece <= instance.capacity]
        rules.append(SplitRule(tuple(pieces)))
    return rules


def pasa_expand(instance, config=None):
    '''Split each customer with the rule of its distance ring.

    Args:
        instance (Instance): the SDVRP instance.
        config (PasaConfig or None): defaults from the config file if None.

    Returns:
        ExpandedInstance carrying the rules and the ring labels.
    '''
    if config is None:
        config = PasaConfig.from_config()

    rules = build_pasa_rules(instance, config)
    if instance.n_customers == 0:
        return build_expanded(instance, [], rules=rules)

    labels = cluster_customers(instance, config.levels)
    rule_index = labels.rule_index.values
    pieces = []
    for demand, irule in zip(instance.demands, rule_index):
        pieces.append(greedy_decompose(int(demand), rules[irule - 1]))
    return build_expanded(instance, pieces, rules=rules, labels=labels)
