#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       07/08/17
content:    Shared fixtures: test config file and small random instances.
'''
import os
import numpy as np
import pytest


example_data = os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
        'example_data')

os.environ['SDSPLIT_CONFIG_FILENAME'] = os.path.join(example_data, 'config_test.yml')
# Benchmark files are only used by the dataset tests, never through the config
benchmark_data_dir = os.environ.pop('SDSPLIT_DATA_DIR', None)


def random_instance(seed, n, capacity=100, low=1, high=None, unit=1, side=100):
    '''Uniform customers with demands unit * U{low..high}'''
    from sdsplit import Instance

    if high is None:
        high = capacity // unit
    rng = np.random.default_rng(seed)
    coordinates = rng.uniform(0, side, size=(n, 2))
    demands = unit * rng.integers(low, high + 1, size=n)
    return Instance(
            'random-{:}'.format(seed),
            depot=(side / 2, side / 2),
            coordinates=coordinates,
            demands=demands,
            capacity=capacity)


@pytest.fixture(scope="session")
def make_instance():
    return random_instance


@pytest.fixture(scope="session")
def example_data_dir():
    return example_data


@pytest.fixture(scope="module")
def example_instance():
    from sdsplit import Instance
    return Instance.from_instancename('example_sd')


@pytest.fixture(scope="session")
def benchmark_data_dir_or_skip():
    if benchmark_data_dir is None:
        pytest.skip('SDSPLIT_DATA_DIR is not set')
    return benchmark_data_dir
