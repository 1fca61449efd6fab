# vim: fdm=indent
# author:     Fabio Zanini
# date:       21/08/17
# content:    Exact solvers for tiny instances, used as test oracles.
# Modules
import math
from functools import lru_cache, reduce

from ..errors import InfeasibleError
from ..solution import Solution, Route, Visit
from .savings import check_demands


max_exact_customers = 12


# Classes / functions
def subset_tours(instance):
    '''Shortest depot-to-depot tour through every subset of customers.

    Held-Karp dynamic programming over bitmasks; bit i is customer i + 1.

    Returns:
        (costs, orders): lists indexed by bitmask with the tour length and
        the customer sequence of the shortest tour.
    '''
    n = instance.n_customers
    D = instance.distance_matrix().tolist()
    size = 1 << n
    inf = float('inf')

    # best[mask][j]: shortest path from the depot through mask ending at j
    best = [[inf] * n for _ in range(size)]
    parent = [[-1] * n for _ in range(size)]
    for j in range(n):
        best[1 << j][j] = D[0][j + 1]

    for mask in range(1, size):
        row = best[mask]
        for j in range(n):
            cost = row[j]
            if cost == inf:
                continue
            for k in range(n):
                if mask & (1 << k):
                    continue
                nmask = mask | (1 << k)
                new = cost + D[j + 1][k + 1]
                if new < best[nmask][k]:
                    best[nmask][k] = new
                    parent[nmask][k] = j

    costs = [0.0] * size
    orders = [[] for _ in range(size)]
    for mask in range(1, size):
        end = min(range(n), key=lambda j: best[mask][j] + D[j + 1][0])
        costs[mask] = best[mask][end] + D[end + 1][0]
        order = []
        m, j = mask, end
        while j != -1:
            order.append(j + 1)
            m, j = m ^ (1 << j), parent[m][j]
        orders[mask] = order[::-1]
    return costs, orders


def _check_size(instance):
    if instance.n_customers > max_exact_customers:
        raise ValueError(
            'Exact solvers handle at most {:} customers'.format(
                max_exact_customers))


def solve_exact_cvrp(instance):
    '''Optimal CVRP solution by set partitioning over customer subsets.

    Args:
        instance (Instance): at most 12 customers, every demand <= Q.

    Returns:
        Solution with the minimum total cost.
    '''
    _check_size(instance)
    check_demands(instance)
    n = instance.n_customers
    if n == 0:
        return Solution([], 0.0)

    demands = instance.demands.tolist()
    size = 1 << n
    loads = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        loads[mask] = loads[mask ^ (1 << low)] + demands[low]
    costs, orders = subset_tours(instance)

    inf = float('inf')
    best = [inf] * size
    choice = [0] * size
    best[0] = 0.0
    for mask in range(1, size):
        # The route serving the lowest customer of mask is chosen first
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        while True:
            route = sub | low
            if loads[route] <= instance.capacity:
                cost = costs[route] + best[mask ^ route]
                if cost < best[mask]:
                    best[mask] = cost
                    choice[mask] = route
            if sub == 0:
                break
            sub = (sub - 1) & rest

    sequences = []
    mask = size - 1
    while mask:
        sequences.append(orders[choice[mask]])
        mask ^= choice[mask]
    return Solution.from_sequences(instance, sequences)


def solve_exact_sdvrp(instance, unit=None):
    '''Optimal SDVRP solution for tiny instances.

    Dynamic programming over the vector of residual demands, measured in
    multiples of unit. Each route serves a subset of customers along its
    shortest tour and delivers at least one unit to each of them.

    Args:
        instance (Instance): at most 12 customers; demands may exceed Q.
        unit (int or None): delivery granularity, must divide Q and every
            demand. Defaults to gcd(Q, demands).

    Returns:
        Solution with the minimum total cost.
    '''
    _check_size(instance)
    n = instance.n_customers
    if n == 0:
        return Solution([], 0.0)

    demands = instance.demands.tolist()
    if unit is None:
        unit = reduce(math.gcd, demands, instance.capacity)
    if any(d % unit for d in demands + [instance.capacity]):
        raise ValueError('unit must divide the capacity and every demand')
    capacity = instance.capacity // unit
    if capacity < 1:
        raise InfeasibleError('Capacity is smaller than the delivery unit')

    costs, orders = subset_tours(instance)
    choices = {}

    def deliveries(customers, residual, room):
        '''Every delivery vector with at least one unit per customer'''
        if not customers:
            yield ()
            return
        head, tail = customers[0], customers[1:]
        for q in range(1, min(residual[head], room - len(tail)) + 1):
            for rest in deliveries(tail, residual, room - q):
                yield (q,) + rest

    @lru_cache(maxsize=None)
    def best(residual):
        open_ = [i for i, r in enumerate(residual) if r > 0]
        if not open_:
            return 0.0
        first, others = open_[0], open_[1:]
        result = float('inf')
        for sub in range(1 << len(others)):
            members = [first] + [c for k, c in enumerate(others) if sub & (1 << k)]
            if len(members) > capacity:
                continue
            mask = sum(1 << c for c in members)
            for qs in deliveries(members, residual, capacity):
                left = list(residual)
                for c, q in zip(members, qs):
                    left[c] -= q
                cost = costs[mask] + best(tuple(left))
                if cost < result:
                    result = cost
                    choices[residual] = (mask, dict(zip(members, qs)), tuple(left))
        return result

    state = tuple(d // unit for d in demands)
    best(state)

    routes = []
    while any(state):
        mask, quantities, state = choices[state]
        routes.append(Route([Visit(c, quantities[c - 1] * unit)
                             for c in orders[mask]]))
    return Solution.from_routes(instance, routes)
