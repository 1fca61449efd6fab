# vim: fdm=indent
# author:     Fabio Zanini
# date:       09/08/17
# content:    Routes with per-visit delivery quantities, cost evaluation,
#             and feasibility validation.
# Modules
import math
import numbers
from collections import Counter, defaultdict
from dataclasses import dataclass


cost_rel_tol = 1e-9


# Classes / functions
@dataclass(frozen=True)
class Visit:
    '''Delivery of a quantity of goods to one customer'''
    customer: int
    quantity: int

    def __post_init__(self):
        if isinstance(self.quantity, bool) or \
           (not isinstance(self.quantity, numbers.Integral)):
            raise ValueError('Quantities must be integers')
        if self.quantity < 1:
            raise ValueError('Quantities must be at least 1')


class Route():
    '''Ordered visits of one vehicle; the depot at both ends is implicit'''

    def __init__(self, visits=(), flagged=False):
        '''Ordered visits of one vehicle

        Args:
            visits (iterable of Visit or (customer, quantity) pairs): the
                visits in driving order.
            flagged (bool): whether the route knowingly visits a customer
                more than once (split deliveries that could not be merged
                without raising the cost).
        '''
        self.visits = [v if isinstance(v, Visit) else Visit(int(v[0]), int(v[1]))
                       for v in visits]
        self.flagged = bool(flagged)

    def __repr__(self):
        return '<Route: {:}>'.format(' '.join(
            '{:}({:})'.format(v.customer, v.quantity) for v in self.visits))

    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return (self.visits == other.visits) and (self.flagged == other.flagged)

    def __len__(self):
        return len(self.visits)

    def __iter__(self):
        return iter(self.visits)

    @property
    def customers(self):
        return [v.customer for v in self.visits]

    @property
    def load(self):
        return sum(v.quantity for v in self.visits)

    @property
    def has_repeats(self):
        customers = self.customers
        return len(set(customers)) != len(customers)

    def reversed(self):
        return self.__class__(self.visits[::-1], flagged=self.flagged)


class Solution():
    '''Set of routes with their total travel cost'''

    def __init__(self, routes=(), cost=None):
        self.routes = [r if isinstance(r, Route) else Route(r) for r in routes]
        self.cost = cost

    def __repr__(self):
        cost = 'n/a' if self.cost is None else '{:.2f}'.format(self.cost)
        return '<Solution: {:} routes, cost {:}>'.format(
                len(self.routes), cost)

    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return (self.routes == other.routes) and (self.cost == other.cost)

    @classmethod
    def from_routes(cls, instance, routes):
        '''Build a Solution and compute its cost on an instance'''
        self = cls(routes)
        self.cost = solution_cost(instance, self)
        return self

    @classmethod
    def from_sequences(cls, instance, sequences):
        '''Build a CVRP Solution from customer sequences.

        Each customer receives its full demand.
        '''
        demands = instance.demands
        routes = [Route([Visit(int(c), int(demands[c - 1])) for c in seq])
                  for seq in sequences]
        return cls.from_routes(instance, routes)

    @property
    def n_routes(self):
        return sum(1 for r in self.routes if len(r))

    def delivered(self):
        '''Total quantity delivered to each customer'''
        totals = defaultdict(int)
        for route in self.routes:
            for visit in route.visits:
                totals[visit.customer] += visit.quantity
        return dict(totals)


def route_cost(instance, route):
    '''Travel distance of one route, depot to depot'''
    matrix = instance.distance_matrix()
    nodes = [0] + [instance.check_node(c) for c in _route_customers(route)] + [0]
    if len(nodes) == 2:
        return 0.0
    return float(sum(matrix[a, b] for a, b in zip(nodes[:-1], nodes[1:])))


def _route_customers(route):
    if isinstance(route, Route):
        return route.customers
    return list(route)


def solution_cost(instance, solution):
    '''Total Euclidean travel distance of a solution.

    Args:
        instance (Instance): the instance the routes refer to.
        solution (Solution): the solution. Empty routes contribute 0.

    Returns:
        float with the total cost.
    '''
    return float(sum(route_cost(instance, route) for route in solution.routes))


@dataclass
class Violation:
    '''One broken feasibility rule'''
    kind: str
    message: str
    route: int = None
    customer: int = None
    amount: float = None


class ValidationReport(list):
    '''List of Violation, empty when the solution is feasible'''

    @property
    def ok(self):
        return len(self) == 0

    def kinds(self):
        return Counter(v.kind for v in self)

    def __str__(self):
        return '\n'.join(v.message for v in self)


def validate_solution(instance, solution, mode='sdvrp'):
    '''Check a solution against an instance.

    Args:
        instance (Instance): the instance.
        solution (Solution): the solution to check.
        mode (str): 'sdvrp' allows split deliveries; 'cvrp' additionally
            requires every customer to be visited exactly once.

    Returns:
        ValidationReport listing every violation (empty if feasible).
    '''
    if mode not in ('sdvrp', 'cvrp'):
        raise ValueError('mode must be "sdvrp" or "cvrp"')

    report = ValidationReport()
    n = instance.n_customers
    capacity = instance.capacity
    delivered = defaultdict(int)
    visits = Counter()
    cost_checkable = True

    for iroute, route in enumerate(solution.routes, 1):
        load = 0
        for visit in route.visits:
            customer = visit.customer
            if isinstance(customer, bool) or \
               (not isinstance(customer, numbers.Integral)) or \
               (not (1 <= customer <= n)):
                report.append(Violation(
                    'unknown_customer',
                    'route {:}: unknown customer id {:}'.format(iroute, customer),
                    route=iroute, customer=customer))
                cost_checkable = False
                continue
            delivered[customer] += visit.quantity
            visits[customer] += 1
            load += visit.quantity

        if load > capacity:
            report.append(Violation(
                'capacity',
                'route {:}: load {:} exceeds capacity {:}'.format(
                    iroute, load, capacity),
                route=iroute, amount=load - capacity))

        if (mode == 'sdvrp') and route.has_repeats and (not route.flagged):
            repeated = sorted(c for c, k in Counter(route.customers).items() if k > 1)
            report.append(Violation(
                'repeat_in_route',
                'route {:}: customers {:} visited more than once'.format(
                    iroute, repeated),
                route=iroute))

    for customer in range(1, n + 1):
        demand = int(instance.demands[customer - 1])
        got = delivered.get(customer, 0)
        if got < demand:
            report.append(Violation(
                'under_delivery',
                'customer {:}: delivered {:} of {:} (shortfall {:})'.format(
                    customer, got, demand, demand - got),
                customer=customer, amount=demand - got))
        elif got > demand:
            report.append(Violation(
                'over_delivery',
                'customer {:}: delivered {:} of {:} (excess {:})'.format(
                    customer, got, demand, got - demand),
                customer=customer, amount=got - demand))

        if (mode == 'cvrp') and (visits[customer] > 1):
            report.append(Violation(
                'multiple_visits',
                'customer {:}: visited {:} times'.format(customer, visits[customer]),
                customer=customer, amount=visits[customer]))

    if cost_checkable and (solution.cost is not None):
        actual = solution_cost(instance, solution)
        if not math.isclose(solution.cost, actual,
                            rel_tol=cost_rel_tol, abs_tol=cost_rel_tol):
            report.append(Violation(
                'cost',
                'stated cost {:} differs from recomputed cost {:}'.format(
                    solution.cost, actual),
                amount=solution.cost - actual))

    return report
