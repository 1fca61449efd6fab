# vim: fdm=indent
# author:     Fabio Zanini
# date:       24/08/17
# content:    Benchmark CSV reports and SVG route plots.
# Modules
import io
import pandas as pd
import matplotlib as mpl
from matplotlib.figure import Figure


report_columns = (
        'instance',
        'strategy',
        'm',
        'cost',
        'best_known',
        'gap_pct',
        'time_s',
        'seed',
        'error',
        )


# Classes / functions
def _fmt(value, digits=2):
    if value is None:
        return ''
    return '{:.{:}f}'.format(value, digits)


def _fmt_m(value):
    if value is None:
        return ''
    if float(value).is_integer():
        return str(int(value))
    return _fmt(value)


def report_table(records, averages=False, timings=True):
    '''Benchmark records as a DataFrame of formatted strings'''
    rows = []
    for record in records:
        if record.is_average and (not averages):
            continue
        rows.append({
            'instance': record.instance,
            'strategy': record.strategy,
            'm': _fmt_m(record.m),
            'cost': _fmt(record.cost),
            'best_known': _fmt(record.best_known),
            'gap_pct': _fmt(record.gap_pct),
            'time_s': _fmt(record.time_s) if timings else '',
            'seed': '' if record.seed is None else str(record.seed),
            'error': record.error or '',
            })
    return pd.DataFrame(rows, columns=list(report_columns), dtype=object)


def emit_report_csv(records, averages=False, timings=True):
    '''CSV text of a benchmark.

    Args:
        records (list of BenchRecord): the rows.
        averages (bool): include the Average rows.
        timings (bool): fill the time_s column. Without timings, reruns
            with the same seeds produce identical text.

    Returns:
        str with a header line and one line per record. Reals have two
        decimals, missing values are empty fields.
    '''
    table = report_table(records, averages=averages, timings=timings)
    return table.to_csv(index=False, lineterminator='\n')


def emit_route_svg(instance, solution):
    '''SVG text of the routes of a solution.

    Routes are drawn as lines with ids route-1, route-2, ...; the depot is
    a square and customers are dots scaled by demand. The legend shows the
    cost.
    '''
    with mpl.rc_context({'svg.hashsalt': 'sdsplit', 'svg.fonttype': 'none'}):
        fig = Figure(figsize=(8, 8))
        ax = fig.add_subplot(1, 1, 1)
        instance.plot.routes(solution, ax=ax)
        stream = io.StringIO()
        fig.savefig(stream, format='svg', metadata={'Date': None})
    return stream.getvalue()
