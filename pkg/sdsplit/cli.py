# vim: fdm=indent
# author:     Fabio Zanini
# date:       25/08/17
# content:    Command-line interface: gen, split, solve, bench, plot.
# Modules
import argparse
import logging
import os
import sys
import pandas as pd

from .errors import ParseError, InfeasibleError, InvariantError


logger = logging.getLogger(__name__)

default_rules = ('none', 'coin20', 'pasa')


# Classes / functions
def _strategy(text):
    from .split import Strategy

    try:
        return Strategy.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _bounds(text):
    from .bench import DEMAND_BOUNDS

    if text in DEMAND_BOUNDS:
        return DEMAND_BOUNDS[text]
    try:
        a, b = (float(x) for x in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(
            'bounds look like 0.1,0.3 or a preset among {:}'.format(
                ', '.join(DEMAND_BOUNDS)))
    return (a, b)


def _positive_float(text):
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError('must be positive')
    return value


def _solver_config(args):
    from .cvrp import CvrpSolverConfig

    kwargs = {}
    if getattr(args, 'seed', None) is not None:
        kwargs['seed'] = args.seed
    if getattr(args, 'time_limit', None) is not None:
        kwargs['time_limit_seconds'] = args.time_limit
    return CvrpSolverConfig.from_config(**kwargs)


def _write_text(path, text):
    with open(path, 'w', newline='\n') as stream:
        stream.write(text)


def cmd_gen(args):
    '''Generate a random instance and write it'''
    from .bench import GeneratorSpec, generate
    from .io import write_instance

    kwargs = dict(family=args.family, n=args.n, capacity=args.capacity,
                  rings=args.rings, seed=args.seed)
    if args.bounds is not None:
        kwargs['bounds'] = args.bounds
    instance = generate(GeneratorSpec(**kwargs))
    write_instance(instance, args.out)
    print('{:}: n={:} Q={:} total demand={:}'.format(
        instance.name, instance.n_customers, instance.capacity,
        instance.total_demand))
    return 0


def cmd_split(args):
    '''Split an instance and write the CVRP instance'''
    from .io import parse_instance, write_instance
    from .split import pasa_parameters

    instance = parse_instance({'path': args.instance})
    expanded = args.rule.expand(instance)
    write_instance(expanded.cvrp, args.out)

    print('{:}: n={:} m={:} rule={:}'.format(
        instance.name, expanded.n_original, expanded.n_expanded, args.rule))
    if args.rule.kind == 'pasa':
        d, mu, s_max = pasa_parameters(instance, args.rule.pasa)
        print('d={:} mu={:.4f} s_max={:}'.format(d, mu, s_max))
        counts = expanded.labels.counts() if expanded.labels is not None else None
        levels = args.rule.pasa.levels
        for label in range(levels, 0, -1):
            rule = expanded.rules[levels - label]
            n_ring = 0 if counts is None else int(counts.loc[label])
            print('ring {:} ({:} customers): {:}'.format(label, n_ring, rule))
    elif expanded.rules:
        print('pieces: {:}'.format(expanded.rules[0]))
    return 0


def cmd_solve(args):
    '''Solve an instance with a splitting strategy'''
    from .io import parse_instance, write_solution
    from .sdvrp import solve_sdvrp

    instance = parse_instance({'path': args.instance})
    result = solve_sdvrp(instance, args.rule, _solver_config(args))
    write_solution(result.solution, args.out)
    if args.svg is not None:
        from .bench import emit_route_svg
        _write_text(args.svg, emit_route_svg(instance, result.solution))

    print('cost={:.2f} m={:} time={:.2f}s'.format(
        result.cost, result.m, result.time_s))
    return 0


def _bench_instances(args):
    from .bench import GeneratorSpec, generate
    from .bench.generators import families
    from .config import config
    from .io import parse_instance, list_instances

    data_dir = args.data_dir
    if (data_dir is None) and (args.generate is None):
        data_dir = config['io']['data_dir']
        if (data_dir is None) and os.path.isdir('data'):
            data_dir = 'data'

    if data_dir is not None:
        paths = list_instances(data_dir)
        instances = []
        for path in paths:
            try:
                instances.append(parse_instance({'path': path}))
            except ParseError as err:
                logger.warning('Skipping %s: %s', path, err)
        logger.info('Found %d instances in %s', len(instances), data_dir)
        return instances

    n_instances = 3 if args.generate is None else args.generate
    instances = []
    for k in range(n_instances):
        family = families[k % len(families)]
        spec = GeneratorSpec(family=family, n=args.generate_size,
                             rings=min(2, max(args.generate_size, 1)), seed=k)
        instances.append(generate(spec))
    logger.info('Generated %d instances', n_instances)
    return instances


def cmd_bench(args):
    '''Run a benchmark and write the CSV report'''
    from .bench import BestKnownTable, run_suite, emit_report_csv

    logging.getLogger('sdsplit.bench').setLevel(
        min(logging.INFO, logging.getLogger().getEffectiveLevel()))

    instances = _bench_instances(args)
    if args.best_known is not None:
        best_known = BestKnownTable.from_path(args.best_known)
    else:
        best_known = BestKnownTable.default()

    rules = args.rules if args.rules else [_strategy(r) for r in default_rules]
    records = run_suite(
            instances,
            rules,
            solver_config=_solver_config(args),
            best_known=best_known,
            seeds=args.seeds,
            jobs=args.jobs,
            )
    _write_text(args.report, emit_report_csv(
        records, averages=False, timings=not args.no_timings))

    averages = pd.DataFrame([
        {'strategy': r.strategy,
         'm': r.m,
         'gap_pct': r.gap_pct,
         'time_s': r.time_s}
        for r in records if r.is_average])
    if len(averages):
        print(averages.to_string(index=False, float_format='{:.2f}'.format))

    cells = [r for r in records if not r.is_average]
    if cells and not any(r.ok for r in cells):
        print('No benchmark run succeeded', file=sys.stderr)
        return 1
    return 0


def cmd_plot(args):
    '''Draw the routes of a solution as SVG'''
    from .io import parse_instance, parse_solution
    from .bench import emit_route_svg
    from .solution import validate_solution

    instance = parse_instance({'path': args.instance})
    solution = parse_solution(args.solution)
    report = validate_solution(instance, solution)
    if report.kinds().get('unknown_customer'):
        raise InfeasibleError(
            'Solution does not match the instance:\n{:}'.format(report))
    _write_text(args.out, emit_route_svg(instance, solution))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sdsplit',
        description='Split delivery routing by a priori demand splitting')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More log output (repeat for debug)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    rule_help = 'none, coin20, coin25, pasa[:L=2,p=2], or fixed:128/64/...'

    p = subparsers.add_parser('gen', help='Generate a random instance')
    p.add_argument('--family', required=True,
                   choices=('concentric', 'random-demand', 'no-pattern'))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--capacity', type=int, default=None)
    p.add_argument('--rings', type=int, default=1)
    p.add_argument('--bounds', type=_bounds, default=None,
                   help='a,b demand fractions or a preset such as 1030')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_gen)

    p = subparsers.add_parser('split', help='Split the demands of an instance')
    p.add_argument('instance')
    p.add_argument('--rule', type=_strategy, required=True, help=rule_help)
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_split)

    p = subparsers.add_parser('solve', help='Solve an instance')
    p.add_argument('instance')
    p.add_argument('--rule', type=_strategy, default=_strategy('pasa'),
                   help=rule_help)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--time-limit', type=_positive_float, default=None)
    p.add_argument('--out', required=True)
    p.add_argument('--svg', default=None)
    p.set_defaults(func=cmd_solve)

    p = subparsers.add_parser('bench', help='Run a benchmark suite')
    source = p.add_mutually_exclusive_group()
    source.add_argument('--data-dir', default=None)
    source.add_argument('--generate', type=int, default=None,
                        help='Number of generated instances')
    p.add_argument('--generate-size', type=int, default=20,
                   help='Customers per generated instance')
    p.add_argument('--rules', type=_strategy, nargs='+', default=None,
                   help=rule_help)
    p.add_argument('--seeds', type=int, nargs='+', default=None)
    p.add_argument('--best-known', default=None)
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--time-limit', type=_positive_float, default=None)
    p.add_argument('--no-timings', action='store_true',
                   help='Leave the time column empty')
    p.add_argument('--report', required=True)
    p.set_defaults(func=cmd_bench)

    p = subparsers.add_parser('plot', help='Plot a solution as SVG')
    p.add_argument('instance')
    p.add_argument('solution')
    p.add_argument('--out', required=True)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None):
    '''Run the command line, returning the exit status'''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.func(args)
    except InfeasibleError as err:
        print('Infeasible: {:}'.format(err), file=sys.stderr)
        return 3
    except InvariantError as err:
        print('Internal error: {:}'.format(err), file=sys.stderr)
        return 4
    except (ParseError, ValueError, OSError) as err:
        print('Error: {:}'.format(err), file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
