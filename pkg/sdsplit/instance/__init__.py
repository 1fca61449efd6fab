# vim: fdm=indent
# author:     Fabio Zanini
# date:       14/08/17
# content:    Routing instance: depot, customers with coordinates and
#             demands, and vehicle capacity.
# Modules
import numbers
import numpy as np
import pandas as pd

from ..utils.cache import method_caches
from .plugins import Plugin


# Classes / functions
class Instance():
    '''Depot, customers, and vehicle capacity of a routing problem'''

    def __init__(
            self,
            name,
            depot,
            coordinates,
            demands,
            capacity,
            plugins=None):
        '''Depot, customers, and vehicle capacity of a routing problem

        Args:
            name (str): identifier of the instance.
            depot (pair of floats): coordinates of the depot.
            coordinates (array-like, n x 2): customer coordinates. Customer
                ids are 1..n in this order.
            demands (array-like of int, length n): customer demands, all
                positive integers. Demands may exceed the capacity.
            capacity (int): vehicle capacity Q.
            plugins (dict): Dictionary of classes that take the Instance
                as only argument for __init__, to expand the possibilities
                of Instance operations.

        NOTE: Instances are immutable: arrays are stored read-only and
            there are no setters.
        '''
        coordinates = np.asarray(coordinates, dtype=float)
        if coordinates.size == 0:
            coordinates = coordinates.reshape((0, 2))
        if (coordinates.ndim != 2) or (coordinates.shape[1] != 2):
            raise ValueError('coordinates must be an n x 2 array')
        if not np.isfinite(coordinates).all():
            raise ValueError('coordinates must be finite')

        demands = np.asarray(demands)
        if demands.size == 0:
            demands = demands.astype(np.int64)
        if demands.shape != (coordinates.shape[0],):
            raise ValueError('There must be one demand per customer')
        if demands.dtype.kind == 'f':
            if not (demands == np.round(demands)).all():
                raise ValueError('Demands must be integers')
        elif demands.dtype.kind not in ('i', 'u'):
            raise ValueError('Demands must be integers')
        demands = demands.astype(np.int64)
        if (demands <= 0).any():
            raise ValueError('Demands must be positive')

        if isinstance(capacity, float) and capacity.is_integer():
            capacity = int(capacity)
        if (not isinstance(capacity, numbers.Integral)) or isinstance(capacity, bool):
            raise ValueError('Capacity must be an integer')
        if capacity <= 0:
            raise ValueError('Capacity must be positive')

        depot = tuple(float(x) for x in depot)
        if len(depot) != 2:
            raise ValueError('The depot needs two coordinates')

        coordinates.setflags(write=False)
        demands.setflags(write=False)

        self._name = str(name)
        self._depot = depot
        self._coordinates = coordinates
        self._demands = demands
        self._capacity = int(capacity)

        self._set_plugins(plugins=plugins)

    def __str__(self):
        return '{:} {:} with {:} customers and capacity {:}'.format(
                self.__class__.__name__,
                self.name,
                self.n_customers,
                self.capacity)

    def __repr__(self):
        return '<{:}: {:}, {:} customers, Q={:}>'.format(
                self.__class__.__name__,
                self.name,
                self.n_customers,
                self.capacity)

    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return ((self.name == other.name) and
                (self.depot == other.depot) and
                (self.capacity == other.capacity) and
                np.array_equal(self.coordinates, other.coordinates) and
                np.array_equal(self.demands, other.demands))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.name, self.depot, self.capacity,
                     self.coordinates.tobytes(), self.demands.tobytes()))

    def _set_plugins(self, plugins=None):
        '''Set plugins according to user's request'''
        from .plot import Plot
        from ..split import Split

        self.split = Split(self)
        self.plot = Plot(self)
        if (plugins is not None) and len(plugins):
            self._plugins = dict(plugins)
            for key, val in plugins.items():
                setattr(self, key, val(self))
        else:
            self._plugins = {}

    @classmethod
    def from_instancename(cls, instancename):
        '''Instantiate an Instance from its name in the config file.

        Args:
            instancename (string): name of the instance in the config file.

        Returns:
            Instance: the parsed instance.
        '''
        from ..io import parse_instance

        return parse_instance({'instancename': instancename})

    @classmethod
    def from_path(cls, path):
        '''Instantiate an Instance from a TSPLIB-like file on disk'''
        from ..io import parse_instance

        return parse_instance({'path': path})

    @property
    def name(self):
        '''Identifier of the instance'''
        return self._name

    @property
    def depot(self):
        '''Depot coordinates as a pair of floats'''
        return self._depot

    @property
    def coordinates(self):
        '''Customer coordinates (read-only n x 2 array, row i is id i+1)'''
        return self._coordinates

    @property
    def demands(self):
        '''Customer demands (read-only integer array, entry i is id i+1)'''
        return self._demands

    @property
    def capacity(self):
        '''Vehicle capacity Q'''
        return self._capacity

    @property
    def n_customers(self):
        return self._demands.shape[0]

    @property
    def customer_ids(self):
        return np.arange(1, self.n_customers + 1)

    @property
    def total_demand(self):
        return int(self._demands.sum())

    @property
    def customers(self):
        '''Table of customers, indexed by customer id'''
        return pd.DataFrame(
                {'x': self._coordinates[:, 0],
                 'y': self._coordinates[:, 1],
                 'demand': self._demands},
                index=pd.Index(self.customer_ids, name='id'),
                )

    @property
    def node_coordinates(self):
        '''Coordinates of all nodes, depot first (node 0)'''
        return np.vstack([np.asarray(self._depot)[np.newaxis],
                          self._coordinates])

    @method_caches
    def distance_matrix(self):
        '''Exact Euclidean distances between all nodes, depot is node 0.

        Returns:
            read-only (n+1) x (n+1) numpy array.
        '''
        from scipy.spatial.distance import pdist, squareform

        nodes = self.node_coordinates
        if nodes.shape[0] == 1:
            matrix = np.zeros((1, 1))
        else:
            matrix = squareform(pdist(nodes, metric='euclidean'))
        matrix.setflags(write=False)
        return matrix

    def check_node(self, node):
        '''Normalize a node id: 'depot' or 0 for the depot, 1..n customers'''
        if isinstance(node, str) and node == 'depot':
            return 0
        if isinstance(node, bool) or (not isinstance(node, numbers.Integral)):
            raise ValueError('Node id not understood: {:}'.format(node))
        node = int(node)
        if not (0 <= node <= self.n_customers):
            raise ValueError('Unknown node id: {:}'.format(node))
        return node

    def distance(self, a, b):
        '''Euclidean distance between two nodes (depot or customer ids)'''
        a = self.check_node(a)
        b = self.check_node(b)
        return float(self.distance_matrix()[a, b])

    def depot_distances(self):
        '''Distance of every customer from the depot, by customer id'''
        return self.distance_matrix()[0, 1:]

    def derive(self, name=None, coordinates=None, demands=None):
        '''New Instance sharing depot and capacity with this one'''
        return self.__class__(
                name=self.name if name is None else name,
                depot=self.depot,
                coordinates=self.coordinates if coordinates is None else coordinates,
                demands=self.demands if demands is None else demands,
                capacity=self.capacity,
                plugins=self._plugins,
                )


def distance(instance, a, b):
    '''Euclidean distance between two nodes of an instance.

    Args:
        instance (Instance): the instance.
        a, b (int or 'depot'): node ids, 0 or 'depot' meaning the depot.

    Returns:
        float with the exact (unrounded) distance.
    '''
    return instance.distance(a, b)
