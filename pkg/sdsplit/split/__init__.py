# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Demand splitting: turn an SDVRP instance into a CVRP instance
#             of co-located demand pieces.
# Modules
from ..errors import InfeasibleError
from ..instance.plugins import Plugin
from .rules import SplitRule, greedy_decompose
from .expanded import ExpandedInstance, build_expanded
from .coin import CoinRule, COIN20, COIN25, coin_expand, fixed_expand
from .pasa import (
        PasaConfig,
        ClusterLabels,
        cluster_customers,
        pasa_parameters,
        build_pasa_rules,
        pasa_expand,
        )
from .strategy import Strategy


# Classes / functions
def no_split_expand(instance):
    '''Treat the SDVRP instance as a CVRP instance.

    Returns:
        ExpandedInstance with the identity origin mapping.

    Raises:
        InfeasibleError if some demand exceeds the capacity.
    '''
    too_large = instance.customer_ids[instance.demands > instance.capacity]
    if len(too_large):
        raise InfeasibleError(
            'Customers {:} demand more than the capacity {:}: they must be split'.format(
                too_large.tolist(), instance.capacity))
    return build_expanded(instance, [[int(d)] for d in instance.demands])


class Split(Plugin):
    '''Split the demands of an instance'''

    def none(self):
        '''Identity expansion (requires every demand <= Q)'''
        return no_split_expand(self.instance)

    def coin(self, rule=COIN20):
        '''Coin rule expansion, e.g. rule=COIN20 or COIN25'''
        return coin_expand(self.instance, rule)

    def fixed(self, pieces):
        '''Same explicit rule for every customer'''
        if not isinstance(pieces, SplitRule):
            pieces = SplitRule(tuple(pieces))
        return fixed_expand(self.instance, pieces)

    def pasa(self, levels=None, prime=None, rounding=None):
        '''Adaptive ring-based expansion.

        Args:
            levels (int or None): number of rings L.
            prime (int or None): prime base p.
            rounding (str or None): rounding of log_p(mu).

        Arguments left to None take their defaults from the config file.
        '''
        defaults = PasaConfig.from_config()
        config = PasaConfig(
            levels=defaults.levels if levels is None else levels,
            prime=defaults.prime if prime is None else prime,
            rounding=defaults.rounding if rounding is None else rounding,
            )
        return pasa_expand(self.instance, config)

    def rings(self, levels=2):
        '''Ring labels of the customers'''
        return cluster_customers(self.instance, levels)

    def by_strategy(self, strategy):
        '''Expand with a Strategy or a selector string like "pasa:L=3,p=2"'''
        if isinstance(strategy, str):
            strategy = Strategy.parse(strategy)
        return strategy.expand(self.instance)
