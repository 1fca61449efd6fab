# vim: fdm=indent
# author:     Fabio Zanini
# date:       02/08/17
# content:    Support module for TSPLIB-like instance files and for the
#             ROUTE/COST solution files.
# Modules
import re
import warnings

from ...errors import ParseError


known_header_keys = ('NAME', 'TYPE', 'COMMENT', 'DIMENSION', 'CAPACITY',
                     'EDGE_WEIGHT_TYPE')
known_types = ('CVRP', 'SDVRP', 'VRP')
known_sections = ('NODE_COORD_SECTION', 'DEMAND_SECTION', 'DEPOT_SECTION')

_header_re = re.compile(r'^([A-Za-z_]+)\s*:\s*(.*)$')
_section_re = re.compile(r'^([A-Z_]+_SECTION)\s*:?\s*$')
_integer_re = re.compile(r'^[+-]?\d+$')
_route_re = re.compile(r'^ROUTE\s+(\d+)\s*:(.*)$')
_visit_re = re.compile(r'^(\d+)\(([+-]?\d+)\)$')
_cost_re = re.compile(r'^COST\s+(\S+)$')


def _read_text(text):
    if hasattr(text, 'read'):
        text = text.read()
    return text.splitlines()


def _parse_int(token, what, lineno):
    if not _integer_re.match(token):
        raise ParseError('{:} must be an integer, got "{:}"'.format(what, token), lineno)
    return int(token)


def _parse_float(token, what, lineno):
    try:
        value = float(token)
    except ValueError:
        raise ParseError('{:} must be a number, got "{:}"'.format(what, token), lineno)
    if value != value or value in (float('inf'), float('-inf')):
        raise ParseError('{:} must be finite'.format(what), lineno)
    return value


# Parser
def parse_instance(text):
    '''Parse a TSPLIB-like (C)VRP instance.

    Args:
        text (str or file-like): the file contents. LF and CRLF line
            endings are both accepted.

    Returns:
        Instance with customers renumbered 1..n in ascending file node id
        order, the depot removed. The depot is the first node listed in
        DEPOT_SECTION if present, otherwise node 1.

    Raises:
        ParseError with the offending line number.
    '''
    from ...instance import Instance

    header = {}
    coords = {}
    demands = {}
    depots = []
    section = None
    depot_done = False
    last_lineno = 0

    for lineno, raw in enumerate(_read_text(text), 1):
        last_lineno = lineno
        line = raw.strip()
        if not line:
            continue
        if line == 'EOF':
            break

        match = _section_re.match(line)
        if match:
            section = match.group(1)
            if section not in known_sections:
                raise ParseError('Unknown section {:}'.format(section), lineno)
            continue

        match = _header_re.match(line)
        if match:
            key, value = match.group(1).upper(), match.group(2).strip()
            section = None
            if key not in known_header_keys:
                warnings.warn('Ignoring unknown header key {:} (line {:})'.format(
                    key, lineno))
                continue
            if key in header:
                raise ParseError('Duplicate header key {:}'.format(key), lineno)
            if key == 'DIMENSION':
                value = _parse_int(value, 'DIMENSION', lineno)
                if value < 1:
                    raise ParseError('DIMENSION must be positive', lineno)
            elif key == 'CAPACITY':
                value = _parse_int(value, 'CAPACITY', lineno)
                if value < 1:
                    raise ParseError('CAPACITY must be positive', lineno)
            elif key == 'EDGE_WEIGHT_TYPE':
                if value.upper() != 'EUC_2D':
                    raise ParseError('Only EUC_2D edge weights are supported', lineno)
            elif key == 'TYPE':
                if value.upper() not in known_types:
                    raise ParseError('Problem type not understood: {:}'.format(value), lineno)
            header[key] = value
            continue

        fields = line.split()
        if section is None:
            raise ParseError('Unexpected line outside of any section', lineno)

        elif section == 'NODE_COORD_SECTION':
            if len(fields) != 3:
                raise ParseError('Coordinate lines need "id x y"', lineno)
            node = _parse_int(fields[0], 'node id', lineno)
            if node in coords:
                raise ParseError('Duplicate node id {:}'.format(node), lineno)
            coords[node] = (_parse_float(fields[1], 'x', lineno),
                            _parse_float(fields[2], 'y', lineno))

        elif section == 'DEMAND_SECTION':
            if len(fields) != 2:
                raise ParseError('Demand lines need "id demand"', lineno)
            node = _parse_int(fields[0], 'node id', lineno)
            if node in demands:
                raise ParseError('Duplicate node id {:}'.format(node), lineno)
            demands[node] = (_parse_int(fields[1], 'demand', lineno), lineno)

        elif section == 'DEPOT_SECTION':
            for field in fields:
                node = _parse_int(field, 'depot id', lineno)
                if node == -1:
                    depot_done = True
                elif depot_done:
                    raise ParseError('Depot ids after the -1 terminator', lineno)
                else:
                    depots.append(node)

    if 'DIMENSION' not in header:
        raise ParseError('Missing DIMENSION', last_lineno)
    if 'CAPACITY' not in header:
        raise ParseError('Missing CAPACITY', last_lineno)
    dimension = header['DIMENSION']

    if len(depots) > 1:
        raise ParseError('Only one depot is supported', last_lineno)
    depot = depots[0] if depots else 1

    if sorted(coords) != list(range(1, dimension + 1)):
        raise ParseError(
            'NODE_COORD_SECTION must list nodes 1..{:} exactly once'.format(dimension),
            last_lineno)
    if depot not in coords:
        raise ParseError('Depot {:} is not a node'.format(depot), last_lineno)

    customers = [node for node in sorted(coords) if node != depot]
    if (set(demands) - set(coords)) or any(c not in demands for c in customers):
        raise ParseError(
            'DEMAND_SECTION must list every customer of nodes 1..{:}'.format(dimension),
            last_lineno)
    if depot in demands and demands[depot][0] != 0:
        raise ParseError('The depot demand must be 0', demands[depot][1])
    for node in customers:
        demand, lineno = demands[node]
        if demand <= 0:
            raise ParseError('Customer demands must be positive', lineno)

    try:
        return Instance(
            name=header.get('NAME', ''),
            depot=coords[depot],
            coordinates=[coords[node] for node in customers],
            demands=[demands[node][0] for node in customers],
            capacity=header['CAPACITY'],
            )
    except ValueError as err:
        raise ParseError(str(err), last_lineno)


def write_instance(instance):
    '''Write an instance as TSPLIB-like text.

    The depot is node 1 and customer i is node i+1. Coordinates are written
    with full precision so that parse_instance restores them exactly.

    Returns:
        str with the file contents (LF line endings).
    '''
    lines = [
        'NAME : {:}'.format(instance.name),
        'TYPE : CVRP',
        'DIMENSION : {:}'.format(instance.n_customers + 1),
        'EDGE_WEIGHT_TYPE : EUC_2D',
        'CAPACITY : {:}'.format(instance.capacity),
        'NODE_COORD_SECTION',
        ]
    for node, (x, y) in enumerate(instance.node_coordinates, 1):
        lines.append('{:} {!r} {!r}'.format(node, float(x), float(y)))
    lines.append('DEMAND_SECTION')
    lines.append('1 0')
    for node, demand in enumerate(instance.demands, 2):
        lines.append('{:} {:}'.format(node, int(demand)))
    lines.extend(['DEPOT_SECTION', '1', '-1', 'EOF'])
    return '\n'.join(lines) + '\n'


def parse_solution(text):
    '''Parse a solution file.

    Each route is a line "ROUTE k : c1(q1) c2(q2) ...", routes numbered
    from 1 in order; an optional trailing line "COST <value>". A route
    that lists a customer twice is read as flagged.

    Returns:
        Solution (cost None if the file has no COST line).
    '''
    from ...solution import Solution, Route, Visit

    routes = []
    cost = None
    for lineno, raw in enumerate(_read_text(text), 1):
        line = raw.strip()
        if not line:
            continue
        if cost is not None:
            raise ParseError('Nothing may follow the COST line', lineno)

        match = _route_re.match(line)
        if match:
            number = int(match.group(1))
            if number != len(routes) + 1:
                raise ParseError('Expected ROUTE {:}, got ROUTE {:}'.format(
                    len(routes) + 1, number), lineno)
            visits = []
            for token in match.group(2).split():
                visit = _visit_re.match(token)
                if not visit:
                    raise ParseError('Malformed visit "{:}"'.format(token), lineno)
                quantity = int(visit.group(2))
                if quantity < 1:
                    raise ParseError('Quantities must be positive, got {:}'.format(
                        quantity), lineno)
                visits.append(Visit(int(visit.group(1)), quantity))
            route = Route(visits)
            route.flagged = route.has_repeats
            routes.append(route)
            continue

        match = _cost_re.match(line)
        if match:
            cost = _parse_float(match.group(1), 'COST', lineno)
            if cost < 0:
                raise ParseError('COST must be nonnegative', lineno)
            continue

        raise ParseError('Line not understood', lineno)

    return Solution(routes, cost=cost)


def write_solution(solution):
    '''Write a solution as ROUTE/COST text (LF line endings)'''
    lines = []
    for iroute, route in enumerate(solution.routes, 1):
        visits = ' '.join('{:}({:})'.format(v.customer, v.quantity)
                          for v in route.visits)
        lines.append('ROUTE {:} : {:}'.format(iroute, visits).rstrip())
    if solution.cost is not None:
        lines.append('COST {!r}'.format(float(solution.cost)))
    return '\n'.join(lines) + '\n'
