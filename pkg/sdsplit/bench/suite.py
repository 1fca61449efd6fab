# vim: fdm=indent
# author:     Fabio Zanini
# date:       23/08/17
# content:    Run every (instance, strategy, seed) cell of a benchmark.
# Modules
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import numpy as np

from ..split import Strategy
from ..sdvrp import solve_sdvrp, gap


logger = logging.getLogger(__name__)


# Classes / functions
@dataclass
class BenchRecord:
    '''One row of a benchmark report'''
    instance: str
    strategy: str
    m: float = None
    cost: float = None
    best_known: float = None
    gap_pct: float = None
    time_s: float = None
    seed: int = None
    error: str = None
    is_average: bool = False

    @property
    def ok(self):
        return self.error is None


def run_cell(instance, strategy, config, best_known=None):
    '''Solve one instance with one strategy, never raising'''
    try:
        result = solve_sdvrp(instance, strategy, config)
    except (ValueError, RuntimeError) as err:
        logger.warning('%s with %s (seed %d) failed: %s',
                       instance.name, strategy, config.seed, err)
        return BenchRecord(
                instance=instance.name,
                strategy=str(strategy),
                best_known=best_known,
                seed=config.seed,
                error=' '.join(str(err).split()) or err.__class__.__name__,
                )

    record = BenchRecord(
            instance=instance.name,
            strategy=str(strategy),
            m=result.m,
            cost=result.cost,
            best_known=best_known,
            time_s=result.time_s,
            seed=result.seed,
            )
    if best_known is not None:
        record.gap_pct = gap(result.cost, best_known)
    logger.info('%s %s seed=%d m=%d cost=%.2f time=%.2fs',
                record.instance, record.strategy, record.seed,
                record.m, record.cost, record.time_s)
    return record


def _run_cell_args(args):
    return run_cell(*args)


def average_records(records, strategies):
    '''One Average row per strategy over its successful rows'''
    averages = []
    for strategy in strategies:
        rows = [r for r in records
                if (r.strategy == strategy) and r.ok and (not r.is_average)]
        gaps = [r.gap_pct for r in rows if r.gap_pct is not None]
        averages.append(BenchRecord(
            instance='Average',
            strategy=strategy,
            m=float(np.mean([r.m for r in rows])) if rows else None,
            gap_pct=float(np.mean(gaps)) if gaps else None,
            time_s=float(np.mean([r.time_s for r in rows])) if rows else None,
            is_average=True,
            ))
    return averages


def run_suite(
        instances,
        strategies,
        solver_config=None,
        best_known=None,
        seeds=None,
        jobs=1):
    '''Run every instance with every strategy.

    Args:
        instances (list of Instance): the instances.
        strategies (list of Strategy or str): the splitting strategies.
        solver_config (CvrpSolverConfig or None): solver parameters,
            defaults from the config file if None.
        best_known (BestKnownTable or None): reference costs for the gap.
        seeds (list of int or None): run each cell once per seed; only the
            seed of solver_config if None.
        jobs (int): number of worker processes.

    Returns:
        list of BenchRecord in (instance, strategy, seed) input order,
        followed by one Average record per strategy. Failed runs are rows
        with the error field set.
    '''
    from ..cvrp import CvrpSolverConfig

    if solver_config is None:
        solver_config = CvrpSolverConfig.from_config()
    if seeds is None:
        seeds = [solver_config.seed]
    strategies = [Strategy.parse(s) if isinstance(s, str) else s
                  for s in strategies]

    cells = []
    for instance in instances:
        reference = None
        if best_known is not None:
            reference = best_known.lookup(instance.name)
        for strategy in strategies:
            for seed in seeds:
                cells.append((instance, strategy,
                              solver_config.with_seed(seed), reference))

    logger.info('Running %d cells on %d worker(s)', len(cells), jobs)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(_run_cell_args, cells))
    else:
        records = [run_cell(*cell) for cell in cells]

    return records + average_records(records, [str(s) for s in strategies])
