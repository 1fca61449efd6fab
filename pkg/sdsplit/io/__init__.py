# vim: fdm=indent
# author:     Fabio Zanini
# date:       14/08/17
# content:    Parse and write instances and solutions on disk.
# Modules
import os
from sdsplit.config import config, instance_formats


# Parser
def parse_instance(dictionary):
    '''Parse an instance from file

    Args:
        dictionary (dict): a dict containing either a single key
            'instancename' with the name of the instance as of the
            configuration file, or a key 'path' with a filename (and
            optionally 'format').

    Returns:
        Instance with the parsed instance.
    '''
    from .tsplib import parse_instance as parse_tsplib

    if 'instancename' in dictionary:
        sheet = config['io']['instances'][dictionary['instancename']]
    elif 'path' in dictionary:
        sheet = dict(dictionary)
        if 'format' not in sheet:
            sheet['format'] = sheet['path'].split('.')[-1].lower()
    else:
        raise ValueError('Please specify an instancename or a path')

    fmt = instance_formats.get(sheet['format'], sheet['format'])
    if fmt == 'tsplib':
        parse = parse_tsplib
    else:
        raise ValueError('Format not understood')

    with open(sheet['path']) as stream:
        instance = parse(stream)

    # Files without a NAME are named after the file
    if not instance.name:
        name = os.path.basename(sheet['path']).split('.')[0]
        instance = instance.derive(name=name)
    return instance


def write_instance(instance, path):
    '''Write an instance to a TSPLIB-like file'''
    from .tsplib import write_instance as write_tsplib

    with open(path, 'w', newline='\n') as stream:
        stream.write(write_tsplib(instance))


def parse_solution(path):
    '''Parse a ROUTE/COST solution file'''
    from .tsplib import parse_solution as parse_text

    with open(path) as stream:
        return parse_text(stream)


def write_solution(solution, path):
    '''Write a solution to a ROUTE/COST file'''
    from .tsplib import write_solution as write_text

    with open(path, 'w', newline='\n') as stream:
        stream.write(write_text(solution))


def list_instances(data_dir):
    '''List instance files in a directory, sorted by filename'''
    fns = []
    for fn in sorted(os.listdir(data_dir)):
        ext = fn.split('.')[-1].lower()
        if ('.' in fn) and (ext in instance_formats):
            fns.append(os.path.join(data_dir, fn))
    return fns
