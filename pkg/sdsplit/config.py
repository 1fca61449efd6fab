# vim: fdm=indent
# author:     Fabio Zanini
# date:       02/08/17
# content:    Configuration file handling (YAML) for instances, solver
#             defaults, and splitting defaults.
# Modules
import os
import yaml


instance_formats = {
        'vrp': 'tsplib',
        'sd': 'tsplib',
        'txt': 'tsplib',
        'tsplib': 'tsplib',
        }

solver_defaults = {
        'seed': 0,
        'deviation': 0.01,
        'max_stale_iterations': 50,
        'neighbor_list_size': 25,
        'time_limit_seconds': None,
        'perturbation_size': 5,
        'debug': False,
        }

split_defaults = {
        'levels': 2,
        'prime': 2,
        'rounding': 'half_up',
        }


def _resolve_path(path, root):
    path = os.path.expanduser(path)
    if (root is not None) and (not os.path.isabs(path)):
        path = os.path.join(root, path)
    return path


def _normalize_instance(sheet, root=None):
    if isinstance(sheet, str):
        sheet = {'path': sheet}

    if 'path' not in sheet:
        raise ValueError('Instance entries need a path')
    sheet['path'] = _resolve_path(sheet['path'], root)

    if 'format' not in sheet:
        sheet['format'] = sheet['path'].split('.')[-1].lower()
    if sheet['format'] not in instance_formats:
        raise ValueError('Instance format not understood: {:}'.format(
            sheet['format']))
    return sheet


def _normalize_solver(solver):
    if solver is None:
        solver = {}
    unknown = set(solver) - set(solver_defaults)
    if unknown:
        raise ValueError('Unknown solver keys: {:}'.format(
            ', '.join(sorted(unknown))))

    for key, val in solver_defaults.items():
        solver.setdefault(key, val)

    if not (0 <= solver['deviation'] <= 0.2):
        raise ValueError('deviation must be in [0, 0.2]')
    if solver['max_stale_iterations'] < 1:
        raise ValueError('max_stale_iterations must be positive')
    if solver['neighbor_list_size'] < 1:
        raise ValueError('neighbor_list_size must be positive')
    return solver


def _normalize_split(split):
    if split is None:
        split = {}
    for key, val in split_defaults.items():
        split.setdefault(key, val)

    if split['rounding'] not in ('half_up', 'ceil', 'floor'):
        raise ValueError('rounding must be one of half_up, ceil, or floor')
    if split['levels'] < 1:
        raise ValueError('levels must be at least 1')
    return split


def reload_config():
    '''Reload the YAML configuration for sdsplit'''
    config_filename = os.getenv(
            'SDSPLIT_CONFIG_FILENAME',
            os.path.join(os.path.expanduser('~'), '.sdsplit', 'config.yml'))

    config = {'io': {}}

    try:
        with open(config_filename) as stream:
            config.update(yaml.safe_load(stream) or {})
        root = os.path.dirname(os.path.abspath(config_filename))
    except IOError:
        root = None

    # Process config
    if config['io'] is None:
        config['io'] = {}

    if 'instances' in config['io']:
        for name, sheet in config['io']['instances'].items():
            config['io']['instances'][name] = _normalize_instance(sheet, root)
    else:
        config['io']['instances'] = {}

    if config['io'].get('best_known') is not None:
        config['io']['best_known'] = _resolve_path(
            config['io']['best_known'], root)

    data_dir = os.getenv('SDSPLIT_DATA_DIR', config['io'].get('data_dir'))
    if data_dir is not None:
        data_dir = _resolve_path(data_dir, root)
    config['io']['data_dir'] = data_dir

    config['solver'] = _normalize_solver(config.get('solver'))
    config['split'] = _normalize_split(config.get('split'))

    return config


config = reload_config()
