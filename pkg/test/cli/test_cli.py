#!/usr/bin/env python
# vim: fdm=indent
'''
author:     Fabio Zanini
date:       25/08/17
content:    Test the command line.
'''
import os
import pandas as pd
import pytest


@pytest.fixture(scope="module")
def example_path(example_data_dir):
    return os.path.join(example_data_dir, 'example_sd.vrp')


def test_gen(tmp_path, capsys):
    from sdsplit.cli import main
    from sdsplit.io import parse_instance

    out = str(tmp_path / 'ring.vrp')
    status = main(['gen', '--family', 'concentric', '--n', '8', '--rings', '2',
                   '--seed', '3', '--out', out])
    assert(status == 0)
    instance = parse_instance({'path': out})
    assert(instance.n_customers == 8)
    assert(instance.name == 'concentric-n8-q100-r2-s3')
    assert('n=8 Q=100' in capsys.readouterr().out)


def test_gen_bounds_preset(tmp_path):
    from sdsplit.cli import main
    from sdsplit.io import parse_instance

    out = str(tmp_path / 'rd.vrp')
    assert(main(['gen', '--family', 'random-demand', '--n', '50',
                 '--bounds', '7090', '--out', out]) == 0)
    demands = parse_instance({'path': out}).demands
    assert(demands.min() >= 112)
    assert(demands.max() <= 144)


def test_split(tmp_path, capsys, example_path):
    from sdsplit.cli import main
    from sdsplit.io import parse_instance

    out = str(tmp_path / 'split.vrp')
    assert(main(['split', example_path, '--rule', 'coin20', '--out', out]) == 0)
    expanded = parse_instance({'path': out})
    assert(expanded.total_demand == 600)
    assert((expanded.demands <= 100).all())
    assert('rule=coin20' in capsys.readouterr().out)


def test_split_pasa_summary(tmp_path, capsys, example_path):
    from sdsplit.cli import main

    out = str(tmp_path / 'split.vrp')
    assert(main(['split', example_path, '--rule', 'pasa:L=2,p=2', '--out', out]) == 0)
    lines = capsys.readouterr().out.splitlines()
    assert(lines[1].startswith('d='))
    assert(lines[2].startswith('ring 2'))
    assert(lines[3].startswith('ring 1'))


def test_split_none_infeasible(tmp_path, example_path):
    from sdsplit.cli import main

    out = str(tmp_path / 'split.vrp')
    assert(main(['split', example_path, '--rule', 'none', '--out', out]) == 3)


@pytest.mark.parametrize('argv', [
    ['split', 'x.vrp', '--rule', 'coin10', '--out', 'y.vrp'],
    ['solve', 'x.vrp', '--rule', 'pasa:p=4', '--out', 'y.sol'],
    ['gen', '--family', 'grid', '--n', '5', '--out', 'y.vrp'],
    ['frobnicate'],
    [],
    ])
def test_usage_errors(argv):
    from sdsplit.cli import main

    assert(main(argv) == 2)


def test_missing_file(tmp_path):
    from sdsplit.cli import main

    missing = str(tmp_path / 'missing.vrp')
    out = str(tmp_path / 'out.sol')
    assert(main(['solve', missing, '--out', out]) == 2)


def test_malformed_file(tmp_path):
    from sdsplit.cli import main

    path = tmp_path / 'bad.vrp'
    path.write_text('NAME : bad\nCAPACITY : ten\n')
    assert(main(['solve', str(path), '--out', str(tmp_path / 'out.sol')]) == 2)


def test_solve(tmp_path, capsys, example_path):
    from sdsplit.cli import main
    from sdsplit.io import parse_instance, parse_solution
    from sdsplit import validate_solution

    outs = [str(tmp_path / 'a.sol'), str(tmp_path / 'b.sol')]
    for out in outs:
        assert(main(['solve', example_path, '--rule', 'pasa', '--seed', '2',
                     '--out', out]) == 0)
    summary = capsys.readouterr().out.splitlines()[0]
    assert(summary.startswith('cost='))
    assert(' m=' in summary)

    with open(outs[0]) as f0, open(outs[1]) as f1:
        assert(f0.read() == f1.read())

    instance = parse_instance({'path': example_path})
    solution = parse_solution(outs[0])
    assert(validate_solution(instance, solution).ok)


def test_solve_svg(tmp_path, example_path):
    from sdsplit.cli import main

    svg = tmp_path / 'routes.svg'
    assert(main(['solve', example_path, '--rule', 'coin25',
                 '--out', str(tmp_path / 'a.sol'), '--svg', str(svg)]) == 0)
    assert('id="route-1"' in svg.read_text())


def test_bench_generated(tmp_path, capsys):
    from sdsplit.cli import main

    reports = [str(tmp_path / 'a.csv'), str(tmp_path / 'b.csv')]
    for report in reports:
        status = main(['bench', '--generate', '3', '--generate-size', '8',
                       '--rules', 'none', 'coin20', 'pasa',
                       '--no-timings', '--report', report])
        assert(status == 0)

    table = pd.read_csv(reports[0], keep_default_na=False, dtype=str)
    assert(len(table) == 9)
    assert(table['strategy'].tolist()[:3] == ['none', 'coin20', 'pasa:L=2,p=2'])
    assert((table['time_s'] == '').all())
    assert('Average' not in table['instance'].tolist())

    with open(reports[0], 'rb') as f0, open(reports[1], 'rb') as f1:
        assert(f0.read() == f1.read())

    assert('pasa:L=2,p=2' in capsys.readouterr().out)


def test_bench_data_dir(tmp_path, example_data_dir):
    from sdsplit.cli import main

    report = str(tmp_path / 'report.csv')
    status = main(['bench', '--data-dir', example_data_dir, '--rules', 'coin20',
                   '--report', report])
    assert(status == 0)
    table = pd.read_csv(report, keep_default_na=False, dtype=str)
    assert(table['instance'].tolist() == ['example_sd'])
    assert(table.loc[0, 'best_known'] == '300.00')
    assert(table.loc[0, 'gap_pct'] != '')


def test_bench_all_fail(tmp_path, example_data_dir):
    from sdsplit.cli import main

    report = str(tmp_path / 'report.csv')
    status = main(['bench', '--data-dir', example_data_dir, '--rules', 'none',
                   '--report', report])
    assert(status == 1)
    table = pd.read_csv(report, keep_default_na=False, dtype=str)
    assert(table.loc[0, 'error'] != '')


def test_plot(tmp_path, example_path):
    from sdsplit.cli import main

    solution = str(tmp_path / 'a.sol')
    svg = tmp_path / 'routes.svg'
    assert(main(['solve', example_path, '--out', solution]) == 0)
    assert(main(['plot', example_path, solution, '--out', str(svg)]) == 0)
    assert(svg.read_text().count('id="route-') >= 1)


def test_plot_unknown_customer(tmp_path, example_path):
    from sdsplit.cli import main

    solution = tmp_path / 'bad.sol'
    solution.write_text('ROUTE 1 : 1(60) 99(10)\n')
    svg = str(tmp_path / 'routes.svg')
    assert(main(['plot', example_path, str(solution), '--out', svg]) == 3)
    assert(not os.path.exists(svg))


def test_plot_empty_solution(tmp_path, example_path):
    from sdsplit.cli import main

    solution = tmp_path / 'empty.sol'
    solution.write_text('COST 0.0\n')
    svg = tmp_path / 'routes.svg'
    assert(main(['plot', example_path, str(solution), '--out', str(svg)]) == 0)
    assert('id="route-' not in svg.read_text())


def test_split_none_reemits(tmp_path):
    from sdsplit import Instance
    from sdsplit.cli import main
    from sdsplit.io import parse_instance, write_instance

    source = str(tmp_path / 'small.vrp')
    write_instance(Instance('small', (0, 0), [[1, 2], [3, 4]], [30, 70], 100), source)
    out = str(tmp_path / 'split.vrp')
    assert(main(['split', source, '--rule', 'none', '--out', out]) == 0)
    assert(parse_instance({'path': out}) == parse_instance({'path': source}))


def test_solve_single_customer(tmp_path, capsys):
    from sdsplit import Instance
    from sdsplit.cli import main
    from sdsplit.io import write_instance

    source = str(tmp_path / 'one.vrp')
    write_instance(Instance('one', (0, 0), [[3, 4]], [40], 100), source)
    assert(main(['solve', source, '--rule', 'coin20',
                 '--out', str(tmp_path / 'one.sol')]) == 0)
    assert(capsys.readouterr().out.startswith('cost=10.00 m=2 '))
