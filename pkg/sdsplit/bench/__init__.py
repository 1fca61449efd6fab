# vim: fdm=indent
# author:     Fabio Zanini
# date:       23/08/17
# content:    Benchmark harness.
# Modules
from .best_known import BestKnownTable, load_best_known
from .generators import (
        GeneratorSpec,
        DEMAND_BOUNDS,
        generate,
        generate_concentric,
        generate_random_demand,
        generate_no_pattern,
        )
from .suite import BenchRecord, run_suite
from .report import emit_report_csv, emit_route_svg
