# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    Record-to-record travel on top of the local search.
# Modules
import logging
import time
import numpy as np

from .routes import RouteSet, neighbor_lists
from .local_search import descend, pair_moves, apply_move, tolerance


logger = logging.getLogger(__name__)


# Classes / functions
class SearchState():
    '''Current routes, record routes, and the record history'''

    def __init__(self, current):
        self.current = current
        self.record = current.copy()
        self.record_cost = current.cost
        self.iteration = 0
        self.stale = 0
        self.history = [self.record_cost]

    def __repr__(self):
        return '<{:}: iteration {:}, record {:.2f}, stale {:}>'.format(
                self.__class__.__name__,
                self.iteration,
                self.record_cost,
                self.stale)

    def try_record(self):
        '''Store the current routes if they beat the record'''
        if self.current.cost < self.record_cost - tolerance(self.current):
            self.record = self.current.copy()
            self.record_cost = self.current.cost
            self.stale = 0
            return True
        return False


def uphill(rs, neighbors, order, threshold, deadline=None, debug=False):
    '''For each customer apply its best move that keeps cost <= threshold.

    Moves that do not change the cost are skipped.

    Returns:
        number of moves applied.
    '''
    n_moves = 0
    for u in order:
        cost = rs.cost
        tol = tolerance(rs)
        best = None
        for v in neighbors[u]:
            for delta, build in pair_moves(rs, u, v):
                if abs(delta) <= tol:
                    continue
                if cost + delta > threshold:
                    continue
                if (best is None) or (delta < best[0]):
                    best = (delta, build)
        if best is not None:
            apply_move(rs, best[0], best[1](), debug=debug)
            n_moves += 1
        if (deadline is not None) and (time.perf_counter() > deadline):
            break
    return n_moves


def cheapest_insertion(rs, node):
    '''Insert a customer where it adds the least distance.

    A new route is opened if that is cheapest or nothing else fits.
    '''
    D = rs.distances
    q = rs.demands[node]
    best = (2 * D[0][node], len(rs.routes), 0)
    for iroute, route in enumerate(rs.routes):
        if (not route) or (rs.loads[iroute] + q > rs.capacity):
            continue
        prev = 0
        for k, succ in enumerate(route + [0]):
            added = D[prev][node] + D[node][succ] - D[prev][succ]
            if added < best[0]:
                best = (added, iroute, k)
            prev = succ
    _, iroute, k = best
    if iroute == len(rs.routes):
        rs.set_route(iroute, [node])
    else:
        route = rs.routes[iroute]
        rs.set_route(iroute, route[:k] + [node] + route[k:])


def perturb(rs, neighbors, rng, size):
    '''Eject a random customer with its nearest neighbors and reinsert them'''
    n = len(neighbors) - 1
    seed = int(rng.integers(1, n + 1))
    cluster = [seed] + neighbors[seed][:size - 1]
    for node in cluster:
        rs.remove(node)
    rs.compact()
    for node in rng.permutation(cluster).tolist():
        cheapest_insertion(rs, node)


def rtr_search(instance, initial, config=None, return_state=False):
    '''Record-to-record travel.

    Each iteration runs an uphill phase (moves whose resulting cost stays
    within record * (1 + deviation)) followed by a downhill phase (local
    search). Iterations that miss the record eject and reinsert a random
    cluster of customers. The search stops after max_stale_iterations
    iterations without a new record, or at the time limit.

    Args:
        instance (Instance): the CVRP instance.
        initial (Solution): a feasible CVRP solution.
        config (CvrpSolverConfig or None): defaults from the config file if
            None.
        return_state (bool): also return the SearchState.

    Returns:
        the record Solution, or (Solution, SearchState) if return_state.
    '''
    from .config import CvrpSolverConfig

    if config is None:
        config = CvrpSolverConfig.from_config()

    start = time.perf_counter()
    deadline = None
    if config.time_limit_seconds is not None:
        deadline = start + config.time_limit_seconds

    rng = np.random.default_rng(config.seed)
    n = instance.n_customers
    neighbors = neighbor_lists(instance, config.neighbor_list_size)
    rs = RouteSet.from_solution(instance, initial)
    descend(rs, neighbors, deadline=deadline, debug=config.debug)
    state = SearchState(rs)

    while (n > 0) and (state.stale < config.max_stale_iterations):
        if (deadline is not None) and (time.perf_counter() > deadline):
            logger.info('Time limit reached after %d iterations', state.iteration)
            break

        threshold = state.record_cost * (1 + config.deviation)
        order = (rng.permutation(n) + 1).tolist()
        uphill(state.current, neighbors, order, threshold,
               deadline=deadline, debug=config.debug)
        descend(state.current, neighbors, deadline=deadline, debug=config.debug)
        state.iteration += 1

        if not state.try_record():
            state.stale += 1
            if state.stale < config.max_stale_iterations:
                perturb(state.current, neighbors, rng,
                        min(config.perturbation_size, n))
                descend(state.current, neighbors, deadline=deadline,
                        debug=config.debug)
                if (not state.try_record()) and (state.current.cost > threshold):
                    state.current = state.record.copy()

        state.history.append(state.record_cost)
        logger.debug('Iteration %d: current %.4f, record %.4f, stale %d',
                     state.iteration, state.current.cost, state.record_cost,
                     state.stale)

    solution = state.record.to_solution()
    logger.info('RTR finished: %d iterations, cost %.2f, %.2fs',
                state.iteration, solution.cost, time.perf_counter() - start)
    if return_state:
        return solution, state
    return solution
