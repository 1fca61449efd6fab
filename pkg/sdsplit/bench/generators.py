# vim: fdm=indent
# author:     Fabio Zanini
# date:       23/08/17
# content:    Random benchmark instances: concentric rings, random demands
#             in [aQ, bQ], and unpatterned demands.
# Modules
import math
from dataclasses import dataclass
import numpy as np

from ..instance import Instance
from ..split.rules import round_half_up


families = ('concentric', 'random-demand', 'no-pattern')

default_capacities = {
        'concentric': 100,
        'random-demand': 160,
        'no-pattern': 200,
        }

# (a, b) pairs: demands are drawn from [aQ, bQ]
DEMAND_BOUNDS = {
        '110': (0.01, 0.1),
        '1030': (0.1, 0.3),
        '1050': (0.1, 0.5),
        '1090': (0.1, 0.9),
        '3070': (0.3, 0.7),
        '7090': (0.7, 0.9),
        }

concentric_demands = (60, 90)

# Largest generated demand as a fraction of Q, so that every instance can
# be solved without splitting
max_demand_fraction = 0.9


# Classes / functions
@dataclass(frozen=True)
class GeneratorSpec:
    '''Parameters of a generated instance.

    Attributes:
        family (str): concentric, random-demand, or no-pattern.
        n (int): number of customers.
        capacity (int or None): vehicle capacity, family default if None.
        rings (int): number of circles (concentric only).
        bounds (pair of float): (a, b) demand bounds (random-demand only).
        seed (int): seed of the random generator.
        radius (float): radius of the innermost circle (concentric only).
        side (float): side of the square customers lie in (other families).
    '''
    family: str
    n: int
    capacity: int = None
    rings: int = 1
    bounds: tuple = DEMAND_BOUNDS['1030']
    seed: int = 0
    radius: float = 10.0
    side: float = 100.0

    def __post_init__(self):
        if self.family not in families:
            raise ValueError('Generator family not understood: {:}'.format(
                self.family))
        if self.n < 0:
            raise ValueError('n must be non-negative')
        if self.capacity is None:
            object.__setattr__(self, 'capacity', default_capacities[self.family])
        if self.capacity < 1:
            raise ValueError('capacity must be positive')
        if self.family == 'concentric':
            if not (1 <= self.rings <= max(self.n, 1)):
                raise ValueError('Need n >= rings >= 1')
            if self.capacity < max(concentric_demands):
                raise ValueError('capacity must fit every demand')
        if self.family == 'random-demand':
            a, b = self.bounds
            if not (0 < a < b <= 1):
                raise ValueError('Demand bounds need 0 < a < b <= 1')
            object.__setattr__(self, 'bounds', (float(a), float(b)))

    @property
    def name(self):
        label = '{:}-n{:}-q{:}'.format(self.family, self.n, self.capacity)
        if self.family == 'concentric':
            label += '-r{:}'.format(self.rings)
        elif self.family == 'random-demand':
            label += '-b{:g}_{:g}'.format(*self.bounds)
        return label + '-s{:}'.format(self.seed)


def _max_demand(capacity):
    return max(1, int(math.floor(max_demand_fraction * capacity + 1e-9)))


def _uniform_square(rng, spec):
    '''Customers uniform in a square centred on the depot'''
    half = spec.side / 2
    return rng.uniform(-half, half, size=(spec.n, 2))


def generate_concentric(spec):
    '''Customers evenly spaced on concentric circles around the depot.

    Circle k (k = 1..rings) has radius k * spec.radius; customers are
    distributed over the circles as evenly as possible. Demands are drawn
    uniformly from {60, 90}.
    '''
    rng = np.random.default_rng(spec.seed)
    counts = [spec.n // spec.rings + (1 if k < spec.n % spec.rings else 0)
              for k in range(spec.rings)]

    coordinates = []
    for k, count in enumerate(counts, 1):
        angles = 2 * np.pi * np.arange(count) / max(count, 1)
        radius = k * spec.radius
        coordinates.append(np.column_stack(
            [radius * np.cos(angles), radius * np.sin(angles)]))
    coordinates = np.vstack(coordinates) if spec.n else np.zeros((0, 2))

    demands = rng.choice(concentric_demands, size=spec.n)
    return Instance(
            spec.name,
            depot=(0.0, 0.0),
            coordinates=coordinates,
            demands=demands,
            capacity=spec.capacity)


def generate_random_demand(spec):
    '''Uniform coordinates, demands uniform integers in [aQ, bQ].

    The bounds are rounded half up; the lower one is at least 1 and the
    upper one at most 0.9Q.
    '''
    rng = np.random.default_rng(spec.seed)
    a, b = spec.bounds
    low = max(1, round_half_up(a * spec.capacity))
    high = min(round_half_up(b * spec.capacity), _max_demand(spec.capacity))
    if low > high:
        raise ValueError('Demand bounds are empty for capacity {:}'.format(
            spec.capacity))

    coordinates = _uniform_square(rng, spec)
    demands = rng.integers(low, high + 1, size=spec.n)
    return Instance(
            spec.name,
            depot=(0.0, 0.0),
            coordinates=coordinates,
            demands=demands,
            capacity=spec.capacity)


def generate_no_pattern(spec, median_fraction=0.2, sigma=1.0):
    '''Uniform coordinates, log-normal demands clipped to [1, 0.9Q].

    Args:
        spec (GeneratorSpec): the parameters.
        median_fraction (float): median demand as a fraction of Q.
        sigma (float): shape of the log-normal distribution.
    '''
    rng = np.random.default_rng(spec.seed)
    coordinates = _uniform_square(rng, spec)
    mean = np.log(median_fraction * spec.capacity)
    demands = np.rint(rng.lognormal(mean, sigma, size=spec.n))
    demands = np.clip(demands, 1, _max_demand(spec.capacity)).astype(np.int64)
    return Instance(
            spec.name,
            depot=(0.0, 0.0),
            coordinates=coordinates,
            demands=demands,
            capacity=spec.capacity)


def generate(spec):
    '''Generate an instance of any family'''
    if spec.family == 'concentric':
        return generate_concentric(spec)
    if spec.family == 'random-demand':
        return generate_random_demand(spec)
    return generate_no_pattern(spec)
