#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       07/08/17
content:    Test YAML parser for config files.
'''
import os
import pytest


def test_config():
    print('Parsing config file YAML')
    from sdsplit.config import config

    assert(sorted(config) == ['io', 'solver', 'split'])
    assert('example_sd' in config['io']['instances'])
    sheet = config['io']['instances']['example_sd']
    assert(sheet['format'] == 'vrp')
    assert(os.path.isabs(sheet['path']))
    assert(config['solver']['max_stale_iterations'] == 20)
    assert(config['solver']['perturbation_size'] == 5)
    assert(config['split']['rounding'] == 'half_up')
    print('Done!')


def test_data_dir_env(monkeypatch, tmp_path):
    from sdsplit.config import reload_config

    monkeypatch.setenv('SDSPLIT_DATA_DIR', str(tmp_path))
    config = reload_config()
    assert(config['io']['data_dir'] == str(tmp_path))


def test_missing_config_file(monkeypatch, tmp_path):
    from sdsplit.config import reload_config

    monkeypatch.setenv('SDSPLIT_CONFIG_FILENAME', str(tmp_path / 'none.yml'))
    config = reload_config()
    assert(config['io']['instances'] == {})
    assert(config['solver']['seed'] == 0)
    assert(config['split']['levels'] == 2)


@pytest.mark.parametrize('text', [
    'solver:\n  deviation: 0.5\n',
    'solver:\n  unknown_key: 1\n',
    'split:\n  rounding: sideways\n',
    'io:\n  instances:\n    bad:\n      path: x.xlsx\n',
    ])
def test_invalid_config(monkeypatch, tmp_path, text):
    from sdsplit.config import reload_config

    path = tmp_path / 'config.yml'
    path.write_text(text)
    monkeypatch.setenv('SDSPLIT_CONFIG_FILENAME', str(path))
    with pytest.raises(ValueError):
        reload_config()


def test_solver_config_from_config():
    from sdsplit import CvrpSolverConfig

    config = CvrpSolverConfig.from_config(seed=7)
    assert(config.seed == 7)
    assert(config.max_stale_iterations == 20)
    assert(config.with_seed(3).seed == 3)
