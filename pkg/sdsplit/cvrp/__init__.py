# vim: fdm=indent
# author:     Fabio Zanini
# date:       16/08/17
# content:    CVRP heuristic: savings construction, local search, and
#             record-to-record travel.
# Modules
import logging

from ..errors import InvariantError
from ..solution import Solution, validate_solution
from .config import CvrpSolverConfig
from .routes import RouteSet, neighbor_lists
from .savings import check_demands, savings_list, clarke_wright_construct
from .local_search import local_search_improve
from .rtr import SearchState, rtr_search
from .exact import solve_exact_cvrp, solve_exact_sdvrp


logger = logging.getLogger(__name__)


# Classes / functions
def solve_cvrp(instance, config=None):
    '''Solve a CVRP instance heuristically.

    Args:
        instance (Instance): every demand must be <= Q.
        config (CvrpSolverConfig or None): solver parameters; defaults from
            the config file if None.

    Returns:
        Solution visiting every customer exactly once with its full demand.

    Raises:
        InfeasibleError if some demand exceeds the capacity.
    '''
    if config is None:
        config = CvrpSolverConfig.from_config()

    check_demands(instance)
    if instance.n_customers == 0:
        return Solution([], 0.0)

    initial = clarke_wright_construct(instance)
    logger.debug('Savings solution of %s: %d routes, cost %.2f',
                 instance.name, initial.n_routes, initial.cost)
    solution = rtr_search(instance, initial, config)

    report = validate_solution(instance, solution, mode='cvrp')
    if not report.ok:
        raise InvariantError('CVRP solver returned an infeasible solution',
                             report=report)
    return solution
