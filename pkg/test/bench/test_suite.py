#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       24/08/17
content:    Test the benchmark runner and its reports.
'''
import io
import re
import numpy as np
import pandas as pd
import pytest


@pytest.fixture(scope="module")
def config():
    from sdsplit import CvrpSolverConfig
    return CvrpSolverConfig(seed=1, max_stale_iterations=5)


@pytest.fixture(scope="module")
def records(example_instance, config):
    from sdsplit.bench import BestKnownTable, run_suite

    return run_suite(
            [example_instance],
            ['none', 'coin20'],
            solver_config=config,
            best_known=BestKnownTable.default(),
            )


def test_rows_and_averages(records):
    assert(len(records) == 4)
    assert([r.strategy for r in records] == ['none', 'coin20'] * 2)
    assert([r.is_average for r in records] == [False, False, True, True])

    none, coin20, avg_none, avg_coin20 = records
    # Customer 3 demands 150 > Q
    assert(not none.ok)
    assert(none.cost is None)
    assert(coin20.ok)
    assert(coin20.best_known == 300)
    assert(np.isclose(coin20.gap_pct, (coin20.cost - 300) / 3))
    assert(avg_none.m is None)
    assert(avg_coin20.m == coin20.m)
    assert(avg_coin20.gap_pct == coin20.gap_pct)


def test_missing_best_known(make_instance, config):
    from sdsplit.bench import BestKnownTable, run_suite

    records = run_suite([make_instance(0, n=6)], ['pasa'], config,
                        best_known=BestKnownTable.default())
    assert(records[0].ok)
    assert(records[0].best_known is None)
    assert(records[0].gap_pct is None)
    assert(records[1].gap_pct is None)


def test_seeds(make_instance, config):
    from sdsplit.bench import run_suite

    records = run_suite([make_instance(0, n=6)], ['pasa'], config, seeds=[3, 4])
    assert([r.seed for r in records[:2]] == [3, 4])


def test_deterministic_csv(make_instance, config):
    from sdsplit.bench import emit_report_csv, run_suite

    instances = [make_instance(seed, n=10, high=130) for seed in range(2)]
    texts = []
    for _ in range(2):
        records = run_suite(instances, ['coin25', 'pasa'], config)
        texts.append(emit_report_csv(records, timings=False))
    assert(texts[0] == texts[1])


def test_csv(records):
    from sdsplit.bench import emit_report_csv

    text = emit_report_csv(records)
    lines = text.split('\n')
    assert(lines[0] == 'instance,strategy,m,cost,best_known,gap_pct,time_s,seed,error')
    assert(len(lines) == 4)
    assert(lines[-1] == '')

    table = pd.read_csv(io.StringIO(text), keep_default_na=False, dtype=str)
    assert(table['instance'].tolist() == ['example_sd', 'example_sd'])
    assert(table.loc[0, 'error'] != '')
    assert(table.loc[0, 'cost'] == '')
    assert(table.loc[1, 'error'] == '')
    assert(table.loc[1, 'best_known'] == '300.00')
    assert(len(table.loc[1, 'cost'].split('.')[1]) == 2)

    with_averages = emit_report_csv(records, averages=True)
    assert(with_averages.count('\nAverage,') == 2)


def test_csv_empty():
    from sdsplit.bench import emit_report_csv

    text = emit_report_csv([])
    assert(text == 'instance,strategy,m,cost,best_known,gap_pct,time_s,seed,error\n')


def test_svg(example_instance):
    from sdsplit import Solution
    from sdsplit.bench import emit_route_svg
    from sdsplit.sdvrp import solve_sdvrp

    result = solve_sdvrp(example_instance, 'coin20')
    svg = emit_route_svg(example_instance, result.solution)
    assert(svg.lstrip().startswith('<?xml'))
    assert(svg.count('id="route-') == result.solution.n_routes)
    groups = re.findall(r'<g id="route-(\d+)">(.*?)</g>', svg, flags=re.DOTALL)
    assert([int(k) for k, _ in groups] == list(range(1, result.solution.n_routes + 1)))
    assert(all(body.count('<path') == 1 for _, body in groups))
    assert(emit_route_svg(example_instance, result.solution) == svg)

    empty = emit_route_svg(example_instance, Solution([], 0.0))
    assert('id="route-' not in empty)
    assert('id="depot' in empty)
