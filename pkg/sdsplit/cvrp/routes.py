# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Mutable route set used by the CVRP heuristics.
# Modules
import numpy as np

from ..solution import Solution


# Classes / functions
class RouteSet():
    '''Routes as lists of customer ids with cached loads and lengths.

    Node 0 is the depot and is implicit at both ends of every route.
    '''

    def __init__(self, instance, routes):
        self.instance = instance
        self.distances = instance.distance_matrix().tolist()
        self.demands = [0] + instance.demands.tolist()
        self.capacity = instance.capacity
        self.routes = []
        self.loads = []
        self.lengths = []
        self.route_of = [None] * (instance.n_customers + 1)
        for route in routes:
            self.routes.append([])
            self.loads.append(0)
            self.lengths.append(0.0)
            self.set_route(len(self.routes) - 1, list(route))

    @classmethod
    def from_solution(cls, instance, solution):
        return cls(instance, [r.customers for r in solution.routes])

    def copy(self):
        new = self.__class__.__new__(self.__class__)
        new.instance = self.instance
        new.distances = self.distances
        new.demands = self.demands
        new.capacity = self.capacity
        new.routes = [list(r) for r in self.routes]
        new.loads = list(self.loads)
        new.lengths = list(self.lengths)
        new.route_of = list(self.route_of)
        return new

    @property
    def cost(self):
        return sum(self.lengths)

    def length(self, route):
        '''Depot-to-depot length of a customer sequence'''
        if not route:
            return 0.0
        dist = self.distances
        total = dist[0][route[0]] + dist[route[-1]][0]
        for a, b in zip(route[:-1], route[1:]):
            total += dist[a][b]
        return total

    def load(self, route):
        demands = self.demands
        return sum(demands[c] for c in route)

    def neighbors_in_route(self, route, i):
        '''Predecessor and successor of position i (0 for the depot)'''
        prev = route[i - 1] if i > 0 else 0
        succ = route[i + 1] if i + 1 < len(route) else 0
        return prev, succ

    def position(self, node):
        '''(route index, position) of a customer'''
        iroute = self.route_of[node]
        return iroute, self.routes[iroute].index(node)

    def set_route(self, iroute, route):
        '''Replace one route, updating loads, lengths and memberships'''
        if iroute == len(self.routes):
            self.routes.append([])
            self.loads.append(0)
            self.lengths.append(0.0)
        self.routes[iroute] = route
        self.loads[iroute] = self.load(route)
        self.lengths[iroute] = self.length(route)
        for node in route:
            self.route_of[node] = iroute

    def apply(self, changes):
        '''Apply a move given as {route index: new customer list}'''
        for iroute, route in changes.items():
            self.set_route(iroute, route)

    def remove(self, node):
        iroute, pos = self.position(node)
        route = self.routes[iroute]
        self.set_route(iroute, route[:pos] + route[pos + 1:])
        self.route_of[node] = None

    def compact(self):
        '''Drop empty routes'''
        keep = [i for i, r in enumerate(self.routes) if r]
        self.routes = [self.routes[i] for i in keep]
        self.loads = [self.loads[i] for i in keep]
        self.lengths = [self.lengths[i] for i in keep]
        for iroute, route in enumerate(self.routes):
            for node in route:
                self.route_of[node] = iroute

    def feasible(self):
        '''Every customer exactly once and no route over capacity'''
        seen = sorted(c for r in self.routes for c in r)
        if seen != list(range(1, self.instance.n_customers + 1)):
            return False
        return all(load <= self.capacity for load in self.loads)

    def to_solution(self):
        '''CVRP Solution (full demand per visit), empty routes dropped'''
        return Solution.from_sequences(
            self.instance, [r for r in self.routes if r])


def neighbor_lists(instance, size):
    '''Nearest customers of every customer, ties broken by id.

    Returns:
        list indexed by customer id (entry 0 is empty) of lists of ids.
    '''
    n = instance.n_customers
    size = min(size, n - 1)
    lists = [[]]
    if size < 1:
        return lists + [[] for _ in range(n)]

    matrix = instance.distance_matrix()[1:, 1:]
    for i in range(n):
        order = np.argsort(matrix[i], kind='stable')
        order = order[order != i][:size]
        lists.append((order + 1).tolist())
    return lists
