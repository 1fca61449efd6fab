# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/03/20
# content:    CVRP instance produced by splitting demands, with the mapping
#             back to the original customers.
# Modules
import numpy as np


# Classes / functions
class ExpandedInstance():
    '''CVRP instance of co-located demand pieces and their origins'''

    def __init__(self, cvrp, origin, original, rules=None, labels=None):
        '''CVRP instance of co-located demand pieces and their origins

        Args:
            cvrp (Instance): the post-split instance.
            origin (array-like of int): origin[k - 1] is the original
                customer id that expanded customer k was split from.
            original (Instance): the instance that was split.
            rules (list of SplitRule or None): the rules used, one per
                rule index (PASA) or a single one (fixed rules).
            labels (ClusterLabels or None): ring labels (PASA only).
        '''
        origin = np.asarray(origin, dtype=np.int64)
        if origin.shape != (cvrp.n_customers,):
            raise ValueError('There must be one origin per expanded customer')
        origin.setflags(write=False)

        self.cvrp = cvrp
        self.origin = origin
        self.original = original
        self.rules = rules
        self.labels = labels

    def __repr__(self):
        return '<{:}: {:} customers from {:}>'.format(
                self.__class__.__name__,
                self.n_expanded,
                self.n_original)

    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return ((self.cvrp == other.cvrp) and
                np.array_equal(self.origin, other.origin) and
                (self.original == other.original))

    @property
    def n_expanded(self):
        '''Number of customers m of the CVRP instance'''
        return self.cvrp.n_customers

    @property
    def n_original(self):
        return self.original.n_customers

    def pieces(self, customer):
        '''Demands of the expanded customers split from one customer'''
        return self.cvrp.demands[self.origin == customer].tolist()

    def check(self):
        '''Check the expansion invariants, raising ValueError if broken'''
        if (self.cvrp.demands > self.cvrp.capacity).any():
            raise ValueError('Expanded demands must not exceed the capacity')
        if self.cvrp.capacity != self.original.capacity:
            raise ValueError('Expansion must keep the capacity')
        if self.n_original == 0:
            return
        if not np.array_equal(self.cvrp.coordinates,
                              self.original.coordinates[self.origin - 1]):
            raise ValueError('Expanded customers must sit at their origin')
        sums = np.bincount(self.origin, weights=self.cvrp.demands,
                           minlength=self.n_original + 1)[1:]
        if not np.array_equal(sums.astype(np.int64), self.original.demands):
            raise ValueError('Pieces must add up to the original demands')


def build_expanded(instance, pieces, rules=None, labels=None):
    '''Assemble an ExpandedInstance from per-customer piece lists.

    Args:
        instance (Instance): the original instance.
        pieces (list of lists of int): pieces[i] are the piece demands for
            customer i + 1, in order.

    Returns:
        ExpandedInstance with expanded ids assigned in original-customer
        order, then piece order.
    '''
    origin = np.repeat(instance.customer_ids, [len(p) for p in pieces])
    demands = np.array([q for p in pieces for q in p], dtype=np.int64)
    if instance.n_customers:
        coordinates = instance.coordinates[origin - 1]
    else:
        coordinates = np.zeros((0, 2))
    cvrp = instance.derive(coordinates=coordinates, demands=demands)
    expanded = ExpandedInstance(
            cvrp, origin, instance, rules=rules, labels=labels)
    expanded.check()
    return expanded
