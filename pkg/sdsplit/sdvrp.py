# vim: fdm=indent
# author:     Fabio Zanini
# date:       22/08/17
# content:    Split-then-solve pipeline: expand the demands, solve the CVRP,
#             project the routes back onto the original customers.
# Modules
import logging
import time
from dataclasses import dataclass

from .errors import InvariantError
from .solution import Solution, Route, Visit, validate_solution, route_cost
from .split import Strategy


logger = logging.getLogger(__name__)


# Classes / functions
@dataclass
class RunResult:
    '''Outcome of one pipeline run'''
    strategy: Strategy
    instance: str
    m: int
    solution: Solution
    cost: float
    time_s: float
    seed: int


def gap(cost, best_known):
    '''Percent deviation of a cost from the best-known cost.

    Negative when the cost beats the best-known value.
    '''
    if best_known <= 0:
        raise ValueError('best_known must be positive')
    return (cost - best_known) / best_known * 100


def _merge_consecutive(visits):
    merged = []
    for customer, quantity in visits:
        if merged and merged[-1][0] == customer:
            merged[-1][1] += quantity
        else:
            merged.append([customer, quantity])
    return merged


def _merge_route(instance, visits):
    '''Merge visits to the same customer unless the route gets longer.

    Returns:
        (visits, flagged): the merged [customer, quantity] list and whether
        repeated customers had to be kept.
    '''
    visits = _merge_consecutive(visits)
    changed = True
    while changed:
        changed = False
        length = route_cost(instance, [c for c, _ in visits])
        seen = {}
        for k, (customer, _) in enumerate(visits):
            if customer not in seen:
                seen[customer] = k
                continue
            first = seen[customer]
            total = visits[first][1] + visits[k][1]
            # Keep the earlier stop or keep the later one
            for keep, drop in ((first, k), (k, first)):
                candidate = [list(v) for v in visits]
                candidate[keep][1] = total
                del candidate[drop]
                candidate = _merge_consecutive(candidate)
                if route_cost(instance, [c for c, _ in candidate]) <= length:
                    visits = candidate
                    changed = True
                    break
            if changed:
                break
    customers = [c for c, _ in visits]
    flagged = len(set(customers)) != len(customers)
    return visits, flagged


def project_solution(expanded, cvrp_solution):
    '''Map a CVRP solution on expanded customers back to the original ones.

    Each expanded visit becomes a delivery of its piece to the customer it
    was split from. Within a route, visits to the same customer are merged
    whenever that does not increase the route length; otherwise they are
    kept and the route is flagged.

    Args:
        expanded (ExpandedInstance): the split instance.
        cvrp_solution (Solution): a feasible solution of expanded.cvrp.

    Returns:
        Solution on expanded.original with its cost recomputed.
    '''
    original = expanded.original
    origin = expanded.origin
    routes = []
    for route in cvrp_solution.routes:
        if not len(route):
            continue
        visits = [(int(origin[v.customer - 1]), v.quantity) for v in route.visits]
        visits, flagged = _merge_route(original, visits)
        routes.append(Route([Visit(c, q) for c, q in visits], flagged=flagged))
    return Solution.from_routes(original, routes)


def solve_sdvrp(instance, strategy, config=None):
    '''Split an SDVRP instance, solve the CVRP, and project back.

    Args:
        instance (Instance): the SDVRP instance.
        strategy (Strategy or str): how to split the demands.
        config (CvrpSolverConfig or None): CVRP solver parameters;
            defaults from the config file if None.

    Returns:
        RunResult whose solution passed validation in sdvrp mode.

    Raises:
        InfeasibleError if the strategy cannot serve the instance.
        InvariantError if the projected solution is not feasible.
    '''
    from .cvrp import CvrpSolverConfig, solve_cvrp

    if isinstance(strategy, str):
        strategy = Strategy.parse(strategy)
    if config is None:
        config = CvrpSolverConfig.from_config()

    start = time.perf_counter()
    expanded = strategy.expand(instance)
    cvrp_solution = solve_cvrp(expanded.cvrp, config)
    solution = project_solution(expanded, cvrp_solution)
    elapsed = time.perf_counter() - start

    report = validate_solution(instance, solution, mode='sdvrp')
    if not report.ok:
        raise InvariantError(
            'Projected solution of {:} with {:} is not feasible'.format(
                instance.name, strategy),
            report=report)
    if solution.cost > cvrp_solution.cost * (1 + 1e-9) + 1e-9:
        raise InvariantError(
            'Projection increased the cost from {:} to {:}'.format(
                cvrp_solution.cost, solution.cost))

    logger.debug('%s with %s: m=%d cost=%.2f time=%.2fs',
                 instance.name, strategy, expanded.n_expanded,
                 solution.cost, elapsed)

    return RunResult(
            strategy=strategy,
            instance=instance.name,
            m=expanded.n_expanded,
            solution=solution,
            cost=solution.cost,
            time_s=elapsed,
            seed=config.seed,
            )
