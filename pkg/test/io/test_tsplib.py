#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       07/08/17
content:    Test TSPLIB-like instance and ROUTE/COST solution codecs.
'''
import warnings
import numpy as np
import pytest


small = '''NAME : small
TYPE : CVRP
DIMENSION : 4
EDGE_WEIGHT_TYPE : EUC_2D
CAPACITY : 50
NODE_COORD_SECTION
1 0 0
2 3 4
3 -3 4
4 0 -5
DEMAND_SECTION
1 0
2 10
3 70
4 5
DEPOT_SECTION
1
-1
EOF
'''


def test_parse_instance():
    from sdsplit.io.tsplib import parse_instance

    instance = parse_instance(small)
    assert(instance.name == 'small')
    assert(instance.capacity == 50)
    assert(instance.demands.tolist() == [10, 70, 5])
    assert(instance.depot == (0, 0))
    assert(instance.distance(0, 1) == 5)


def test_parse_crlf():
    from sdsplit.io.tsplib import parse_instance

    instance = parse_instance(small.replace('\n', '\r\n'))
    assert(instance.n_customers == 3)


def test_depot_not_first():
    from sdsplit.io.tsplib import parse_instance

    text = small.replace('DEPOT_SECTION\n1\n', 'DEPOT_SECTION\n4\n')
    text = text.replace('1 0\n2 10', '1 8\n2 10').replace('4 5\n', '4 0\n')
    instance = parse_instance(text)
    assert(instance.depot == (0, -5))
    assert(instance.demands.tolist() == [8, 10, 70])
    assert(instance.coordinates.tolist() == [[0, 0], [3, 4], [-3, 4]])


def test_unknown_header_warns():
    from sdsplit.io.tsplib import parse_instance

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        instance = parse_instance('VEHICLES : 3\n' + small)
    assert(instance.n_customers == 3)
    assert(any('VEHICLES' in str(w.message) for w in caught))


@pytest.mark.parametrize('old,new,lineno', [
    ('4 5\n', '4 5.5\n', 15),
    ('2 3 4\n', '2 3 four\n', 8),
    ('3 -3 4\n', '3 -3 4\n3 1 1\n', 10),
    ('TYPE : CVRP', 'TYPE : TSP', 2),
    ('EUC_2D', 'GEO', 4),
    ('DEPOT_SECTION', 'TOUR_SECTION', 16),
    ('DIMENSION : 4', 'DIMENSION : 4\nDIMENSION : 4', 4),
    ])
def test_parse_errors(old, new, lineno):
    from sdsplit.errors import ParseError
    from sdsplit.io.tsplib import parse_instance

    with pytest.raises(ParseError) as excinfo:
        parse_instance(small.replace(old, new, 1))
    assert(excinfo.value.lineno == lineno)
    assert(str(excinfo.value).startswith('line {:}:'.format(lineno)))


@pytest.mark.parametrize('old,new', [
    ('CAPACITY : 50\n', ''),
    ('3 70\n', ''),
    ('4 5\n', '4 -5\n'),
    ('1 0\n2 10', '1 3\n2 10'),
    ('4 0 -5\n', ''),
    ])
def test_parse_errors_any_line(old, new):
    from sdsplit.errors import ParseError
    from sdsplit.io.tsplib import parse_instance

    with pytest.raises(ParseError):
        parse_instance(small.replace(old, new, 1))


def test_write_parse_instance(make_instance):
    from sdsplit.io.tsplib import parse_instance, write_instance

    for seed in range(200):
        instance = make_instance(seed, n=1 + seed % 7, capacity=40 + seed % 60)
        assert(parse_instance(write_instance(instance)) == instance)


def test_write_instance_header(make_instance):
    from sdsplit.io.tsplib import write_instance

    lines = write_instance(make_instance(0, n=2)).splitlines()
    assert(lines[1] == 'TYPE : CVRP')
    assert(lines[2] == 'DIMENSION : 3')
    assert(lines[-1] == 'EOF')


def test_parse_solution():
    from sdsplit.io.tsplib import parse_solution

    text = 'ROUTE 1 : 1(10) 2(40)\nROUTE 2 : 2(30) 3(5)\nCOST 21.5\n'
    solution = parse_solution(text)
    assert(len(solution.routes) == 2)
    assert(solution.routes[0].customers == [1, 2])
    assert(solution.routes[1].load == 35)
    assert(solution.cost == 21.5)
    assert(not solution.routes[0].flagged)


def test_parse_solution_flags_repeats():
    from sdsplit.io.tsplib import parse_solution

    solution = parse_solution('ROUTE 1 : 1(10) 2(5) 1(10)\n')
    assert(solution.routes[0].flagged)
    assert(solution.cost is None)


@pytest.mark.parametrize('text', [
    'ROUTE 2 : 1(10)\n',
    'ROUTE 1 : 1(0)\n',
    'ROUTE 1 : 1[10]\n',
    'ROUTE 1 : 1(10)\nCOST 3\nROUTE 2 : 2(1)\n',
    'ROUTE 1 : 1(10)\nCOST -3\n',
    'VEHICLE 1 : 1(10)\n',
    ])
def test_parse_solution_errors(text):
    from sdsplit.errors import ParseError
    from sdsplit.io.tsplib import parse_solution

    with pytest.raises(ParseError):
        parse_solution(text)


def test_write_parse_solution(make_instance):
    from sdsplit import Solution
    from sdsplit.io.tsplib import parse_solution, write_solution

    instance = make_instance(3, n=6, capacity=200)
    solution = Solution.from_sequences(instance, [[1, 2, 3], [6, 5], [4]])
    parsed = parse_solution(write_solution(solution))
    assert(parsed == solution)
    assert(parsed.cost == solution.cost)


def _random_cvrp_solution(cvrp, rng):
    from sdsplit import Solution

    sequences, current, load = [], [], 0
    for node in rng.permutation(np.arange(1, cvrp.n_customers + 1)):
        demand = int(cvrp.demands[node - 1])
        if load + demand > cvrp.capacity:
            sequences.append(current)
            current, load = [], 0
        current.append(int(node))
        load += demand
    if current:
        sequences.append(current)
    return Solution.from_sequences(cvrp, sequences)


def test_write_parse_split_solutions(make_instance):
    from sdsplit import Route, Solution, Strategy, project_solution
    from sdsplit.io.tsplib import parse_solution, write_solution

    rng = np.random.default_rng(1)
    strategies = [Strategy.parse(s) for s in ('coin20', 'coin25', 'pasa')]
    for seed in range(200):
        instance = make_instance(seed, n=1 + seed % 9, capacity=50, high=120)
        expanded = strategies[seed % 3].expand(instance)
        solution = project_solution(
            expanded, _random_cvrp_solution(expanded.cvrp, rng))
        assert(parse_solution(write_solution(solution)) == solution)

        # Same routes, the first visit of the first route split around the rest
        routes = list(solution.routes)
        first = routes[0].visits[0]
        if first.quantity >= 2:
            half = first.quantity // 2
            visits = [(first.customer, half)] + \
                     [(v.customer, v.quantity) for v in routes[0].visits[1:]] + \
                     [(first.customer, first.quantity - half)]
            routes[0] = Route(visits, flagged=True)
        repeated = Solution.from_routes(instance, routes)
        parsed = parse_solution(write_solution(repeated))
        assert(parsed == repeated)
        assert(parsed.routes[0].flagged == (first.quantity >= 2))


def test_write_empty_solution():
    from sdsplit import Solution
    from sdsplit.io.tsplib import parse_solution, write_solution

    text = write_solution(Solution([], 0.0))
    assert(text == 'COST 0.0\n')
    assert(parse_solution(text).routes == [])
