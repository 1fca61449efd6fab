# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Clarke-Wright savings construction.
# Modules
import numpy as np

from ..errors import InfeasibleError


# Classes / functions
def check_demands(instance):
    '''Raise InfeasibleError if some customer cannot fit in one vehicle'''
    too_large = instance.customer_ids[instance.demands > instance.capacity]
    if len(too_large):
        raise InfeasibleError(
            'Customers {:} demand more than the capacity {:}'.format(
                too_large.tolist(), instance.capacity))


def savings_list(instance):
    '''All customer pairs sorted by descending savings.

    The savings of a pair is s(i, j) = dist(i, 0) + dist(0, j) - dist(i, j);
    ties are broken by (i, j) in increasing id order.

    Returns:
        list of (saving, i, j) with i < j.
    '''
    n = instance.n_customers
    if n < 2:
        return []
    matrix = instance.distance_matrix()
    depot = matrix[0, 1:]
    savings = depot[:, np.newaxis] + depot[np.newaxis, :] - matrix[1:, 1:]
    i, j = np.triu_indices(n, k=1)
    values = savings[i, j]
    # lexsort sorts by the last key first
    order = np.lexsort((j, i, -values))
    return [(float(values[k]), int(i[k]) + 1, int(j[k]) + 1) for k in order]


def savings_routes(instance):
    '''Customer sequences built by the parallel savings algorithm'''
    check_demands(instance)

    n = instance.n_customers
    demands = [0] + instance.demands.tolist()
    capacity = instance.capacity

    # One out-and-back route per customer; routes are keyed by a route id
    routes = {c: [c] for c in range(1, n + 1)}
    loads = {c: demands[c] for c in range(1, n + 1)}
    route_of = list(range(n + 1))

    for saving, i, j in savings_list(instance):
        ri, rj = route_of[i], route_of[j]
        if ri == rj:
            continue
        if loads[ri] + loads[rj] > capacity:
            continue
        a, b = routes[ri], routes[rj]

        # Only route ends can be joined: orient a to end in i, b to start in j
        if a[-1] == i:
            pass
        elif a[0] == i:
            a = a[::-1]
        else:
            continue
        if b[0] == j:
            pass
        elif b[-1] == j:
            b = b[::-1]
        else:
            continue

        routes[ri] = a + b
        loads[ri] += loads[rj]
        for c in b:
            route_of[c] = ri
        del routes[rj]
        del loads[rj]

    return [routes[key] for key in sorted(routes)]


def clarke_wright_construct(instance):
    '''Feasible CVRP solution by Clarke-Wright savings.

    Args:
        instance (Instance): a CVRP instance, every demand <= Q.

    Returns:
        Solution where every customer is visited once with its full demand.

    Raises:
        InfeasibleError if some demand exceeds the capacity.
    '''
    from ..solution import Solution

    return Solution.from_sequences(instance, savings_routes(instance))
