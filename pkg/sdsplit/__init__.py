# vim: fdm=indent
# author:     Fabio Zanini
# date:       15/08/17
# content:    Main sdsplit module.
# Module exporting
from .instance import Instance, distance
from .solution import (
        Visit,
        Route,
        Solution,
        solution_cost,
        validate_solution,
        )
from .split import Strategy, PasaConfig, ExpandedInstance
from .cvrp import CvrpSolverConfig, solve_cvrp
from .sdvrp import RunResult, solve_sdvrp, project_solution, gap
from ._version import version
