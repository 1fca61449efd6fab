# vim: fdm=indent
# author:     Fabio Zanini
# date:       02/08/17
# content:    Parameters of the CVRP solver.
# Modules
from dataclasses import dataclass, replace


# Classes / functions
@dataclass(frozen=True)
class CvrpSolverConfig:
    '''Parameters of the savings + record-to-record travel solver.

    Attributes:
        seed (int): seed of the random generator (64-bit unsigned).
        deviation (float): uphill moves are accepted while the cost stays
            within record * (1 + deviation). Must be in [0, 0.2].
        max_stale_iterations (int): stop after this many iterations
            without a new record.
        neighbor_list_size (int): moves only pair a node with its nearest
            neighbors.
        time_limit_seconds (float or None): wall-clock limit of the search.
        perturbation_size (int): customers ejected and reinserted when the
            search is stale.
        debug (bool): recompute the full cost after every accepted move
            and compare with the predicted delta.
    '''
    seed: int = 0
    deviation: float = 0.01
    max_stale_iterations: int = 50
    neighbor_list_size: int = 25
    time_limit_seconds: float = None
    perturbation_size: int = 5
    debug: bool = False

    def __post_init__(self):
        if (int(self.seed) != self.seed) or not (0 <= self.seed < 2**64):
            raise ValueError('seed must be a 64-bit unsigned integer')
        if not (0 <= self.deviation <= 0.2):
            raise ValueError('deviation must be in [0, 0.2]')
        if self.max_stale_iterations < 1:
            raise ValueError('max_stale_iterations must be positive')
        if self.neighbor_list_size < 1:
            raise ValueError('neighbor_list_size must be positive')
        if (self.time_limit_seconds is not None) and (self.time_limit_seconds <= 0):
            raise ValueError('time_limit_seconds must be positive')
        if self.perturbation_size < 1:
            raise ValueError('perturbation_size must be positive')

    @classmethod
    def from_config(cls, **kwargs):
        '''Defaults from the "solver" section of the config file.

        Keyword arguments override single fields.
        '''
        from ..config import config

        params = dict(config['solver'])
        params.update(kwargs)
        return cls(**params)

    def with_seed(self, seed):
        return replace(self, seed=int(seed))
