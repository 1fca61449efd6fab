#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       22/08/17
content:    Test projection and the split-then-solve pipeline.
'''
import numpy as np
import pytest


@pytest.mark.parametrize('cost,best,expected', [
    (1390.57, 1389.94, 0.05),
    (3508.16, 3379.33, 3.81),
    (105, 100, 5.0),
    (228.28, 228.28, 0.0),
    (95, 100, -5.0),
    ])
def test_gap(cost, best, expected):
    from sdsplit import gap

    assert(abs(round(gap(cost, best), 2) - expected) <= 0.01)


def test_gap_invalid():
    from sdsplit import gap

    with pytest.raises(ValueError):
        gap(100, 0)
    with pytest.raises(ValueError):
        gap(100, -1)


def test_project_merges_consecutive():
    from sdsplit import Instance, Solution, project_solution
    from sdsplit.split import build_expanded

    instance = Instance('line', (0, 0), [[1, 0], [2, 0], [3, 0]], [4, 6, 9], 10)
    expanded = build_expanded(instance, [[4], [6], [5, 4]])
    cvrp_solution = Solution.from_sequences(expanded.cvrp, [[1, 2], [3, 4]])
    solution = project_solution(expanded, cvrp_solution)
    assert([r.customers for r in solution.routes] == [[1, 2], [3]])
    assert(solution.routes[1].visits[0].quantity == 9)
    assert(solution.cost == cvrp_solution.cost)


def test_project_merges_returning_visit():
    from sdsplit import Instance, Solution, project_solution
    from sdsplit.split import build_expanded

    instance = Instance('aba', (0, 0), [[10, 0], [10, 1]], [8, 2], 10)
    expanded = build_expanded(instance, [[4, 4], [2]])
    cvrp_solution = Solution.from_sequences(expanded.cvrp, [[1, 3, 2]])
    assert(np.isclose(cvrp_solution.cost, 22))
    solution = project_solution(expanded, cvrp_solution)
    route = solution.routes[0]
    assert(not route.flagged)
    assert(sorted(route.customers) == [1, 2])
    assert(route.load == 10)
    assert(solution.cost <= cvrp_solution.cost)


def test_project_without_splits():
    from sdsplit import Instance, Solution, project_solution
    from sdsplit.split import no_split_expand

    instance = Instance('line', (0, 0), [[1, 0], [2, 0], [3, 0]], [4, 6, 9], 10)
    expanded = no_split_expand(instance)
    cvrp_solution = Solution.from_sequences(expanded.cvrp, [[2, 1], [3]])
    solution = project_solution(expanded, cvrp_solution)
    assert([r.customers for r in solution.routes] == [[2, 1], [3]])
    assert(solution.cost == cvrp_solution.cost)


def test_project_skips_empty_routes():
    from sdsplit import Instance, Route, Solution, project_solution
    from sdsplit.split import no_split_expand

    instance = Instance('one', (0, 0), [[3, 4]], [5], 10)
    expanded = no_split_expand(instance)
    cvrp_solution = Solution.from_routes(expanded.cvrp, [Route([]), Route([(1, 5)])])
    assert(project_solution(expanded, cvrp_solution).n_routes == 1)


def test_single_full_customer():
    from sdsplit import Instance, solve_sdvrp

    instance = Instance('one', (0, 0), [[3, 4]], [100], 100)
    for strategy in ('none', 'coin20', 'pasa'):
        result = solve_sdvrp(instance, strategy)
        assert(np.isclose(result.cost, 10))


def test_large_demand_needs_split():
    from sdsplit import Instance, solve_sdvrp
    from sdsplit.errors import InfeasibleError

    instance = Instance('big', (0, 0), [[3, 4], [0, 5]], [150, 20], 100)
    with pytest.raises(InfeasibleError):
        solve_sdvrp(instance, 'none')
    result = solve_sdvrp(instance, 'coin20')
    assert(result.solution.delivered() == {1: 150, 2: 20})
    assert(result.m == 9)


def test_run_result(example_instance):
    from sdsplit import CvrpSolverConfig, Strategy, solve_sdvrp, validate_solution

    config = CvrpSolverConfig(seed=7, max_stale_iterations=10)
    result = solve_sdvrp(example_instance, 'pasa', config)
    assert(result.strategy == Strategy.parse('pasa:L=2,p=2'))
    assert(result.instance == 'example_sd')
    assert(result.seed == 7)
    assert(result.time_s >= 0)
    assert(result.cost == result.solution.cost)
    assert(validate_solution(example_instance, result.solution).ok)


def test_same_seed_same_solution(make_instance):
    from sdsplit import CvrpSolverConfig, solve_sdvrp

    instance = make_instance(3, n=15, capacity=100, high=150)
    config = CvrpSolverConfig(seed=5, max_stale_iterations=10)
    first = solve_sdvrp(instance, 'coin25', config)
    second = solve_sdvrp(instance, 'coin25', config)
    assert(first.solution == second.solution)


def test_projection_never_costs_more(make_instance):
    from sdsplit import CvrpSolverConfig, Strategy, project_solution
    from sdsplit.cvrp import solve_cvrp

    config = CvrpSolverConfig(max_stale_iterations=5)
    for seed in range(10):
        instance = make_instance(seed, n=12, capacity=100, high=180)
        for text in ('coin20', 'pasa', 'fixed:64/32/16/8/4/2/1'):
            expanded = Strategy.parse(text).expand(instance)
            cvrp_solution = solve_cvrp(expanded.cvrp, config)
            solution = project_solution(expanded, cvrp_solution)
            assert(solution.cost <= cvrp_solution.cost + 1e-9)


def test_against_exact_oracle(make_instance):
    from sdsplit import CvrpSolverConfig, solve_sdvrp
    from sdsplit.cvrp import solve_exact_sdvrp

    config = CvrpSolverConfig(max_stale_iterations=30)
    for seed in range(50):
        n = 2 + seed % 3
        instance = make_instance(500 + seed, n=n, capacity=60, unit=10, high=8)
        optimum = solve_exact_sdvrp(instance).cost
        for strategy in ('coin20', 'coin25', 'pasa'):
            result = solve_sdvrp(instance, strategy, config)
            assert(result.cost >= optimum - 1e-6)
            if strategy == 'pasa':
                assert(result.cost <= 1.25 * optimum)
        if (instance.demands <= instance.capacity).all():
            assert(solve_sdvrp(instance, 'none', config).cost >= optimum - 1e-6)


def test_pasa_against_its_fixed_rules():
    from sdsplit import CvrpSolverConfig, Strategy, solve_sdvrp
    from sdsplit.bench import GeneratorSpec, generate_concentric

    instance = next(
        inst for inst in (
            generate_concentric(GeneratorSpec('concentric', 8, rings=2, seed=s))
            for s in range(100))
        if set(inst.demands) == {60, 90})

    pasa = Strategy.parse('pasa:L=2,p=2')
    assert([r.pieces for r in pasa.expand(instance).rules] ==
           [(80, 40, 20, 10), (40, 20, 10)])

    medians = {}
    for text in ('pasa:L=2,p=2', 'fixed:80/40/20/10', 'fixed:40/20/10'):
        costs = [solve_sdvrp(instance, text, CvrpSolverConfig(seed=seed)).cost
                 for seed in range(20)]
        medians[text] = np.median(costs)
    best_fixed = min(medians['fixed:80/40/20/10'], medians['fixed:40/20/10'])
    assert(medians['pasa:L=2,p=2'] <= best_fixed + 1e-6)
